// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance 3 6        run the listed criteria only
// Exit status 0 iff every selected criterion passed.

#include "colombeau/classify.hpp"
#include "colombeau/fvm.hpp"
#include "colombeau/pairing.hpp"
#include "colombeau/shock.hpp"
#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace colombeau;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0 = no runtime bound
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const State kLeft{1.0, 0.0, 0.0};
constexpr double kUr = -1.0;

// Quadratic c^2 + (1/2) c - 1 = 0 solved here, apart from the library.
std::pair<double, double> quadratic_roots()
{
    const double b = 0.5;
    const double s = std::sqrt(b * b + 4.0);
    return {(-b + s) / 2.0, (-b - s) / 2.0};
}

// Smallest fitted slope among infinitesimal pairings; false if any pairing
// is neither infinitesimal nor null-like.
std::pair<bool, double> decay_slope(const AssociationReport& r)
{
    bool ok = true;
    double lo = INFINITY;
    for (const auto& f : r.per_test) {
        if (f.classification == Classification::Infinitesimal)
            lo = std::min(lo, f.slope);
        else if (f.classification != Classification::NullLike)
            ok = false;
    }
    return {ok, lo};
}

Outcome c1()
{
    Outcome o;
    double worst = 0.0;
    int cases = 0;
    const EpsLadder ladder{9, 14};
    for (const auto& p : builtin_profiles()) {
        const auto H = heaviside(p);
        const auto g = (H * H - H) * differentiate(H);
        for (double e : ladder.epsilons()) {
            worst = std::max(worst, std::abs(integrate_total(g, e).value + 1.0 / 6.0));
            ++cases;
        }
    }
    o.pass = cases == 18 && worst <= 1e-10;
    o.detail = std::to_string(cases) + " cases, max |I + 1/6| = " + fmt("%.3g", worst);
    return o;
}

Outcome c2()
{
    Outcome o;
    double worst = 0.0;
    int cases = 0;
    for (const auto& p : builtin_profiles()) {
        const auto d = dirac(p);
        for (double e : EpsLadder{}.epsilons()) {
            worst = std::max(worst, std::abs(integrate_total(d, e).value - 1.0));
            ++cases;
        }
    }
    o.pass = worst <= 1e-12;
    o.detail = std::to_string(cases) + " cases, max |int delta - 1| = " + fmt("%.3g", worst);
    return o;
}

Outcome c3()
{
    Outcome o;
    std::ostringstream d;
    const EpsLadder ladder{4, 14};
    const auto battery = default_battery();
    double min_slope = INFINITY;
    double worst_half = 0.0;
    double worst_third = 0.0;
    bool all = true;
    for (const auto& p : builtin_profiles()) {
        const auto H = heaviside(p);
        const auto dH = differentiate(H);
        for (int n = 2; n <= 5; ++n) {
            const auto r = associated(ipow(H, n), H, battery, ladder);
            const auto [ok, s] = decay_slope(r);
            all = all && r.verdict == Verdict::True && ok;
            min_slope = std::min(min_slope, s);
        }
        for (const auto& phi : battery) {
            const double phi0 = phi(0.0);
            const auto a = growth_order(gen_pair(H * dH, phi), ladder);
            const auto b = growth_order(gen_pair(H * H * dH, phi), ladder);
            all = all && a.classification == Classification::FiniteNonzero &&
                  b.classification == Classification::FiniteNonzero;
            worst_half = std::max(worst_half, std::abs(a.limit - 0.5 * phi0));
            worst_third = std::max(worst_third, std::abs(b.limit - phi0 / 3.0));
        }
        const bool apart = associated(H * dH, H * H * dH, battery, ladder).verdict == Verdict::False;
        const bool sixth = associated(H * H * dH - H * dH, (-1.0 / 6.0) * dH, battery, ladder).verdict == Verdict::True;
        all = all && apart && sixth;
    }
    o.pass = all && min_slope >= 0.9 && worst_half <= 1e-8 && worst_third <= 1e-8;
    d << "H^N ~ H min slope " << fmt("%.4f", min_slope) << ", |lim - phi(0)/2| " << fmt("%.2g", worst_half)
      << ", |lim - phi(0)/3| " << fmt("%.2g", worst_third) << (all ? "" : ", a verdict differs");
    o.detail = d.str();
    return o;
}

Outcome c4()
{
    Outcome o;
    std::ostringstream d;
    for (const auto& p : builtin_profiles()) {
        const auto r = run_command("schwartz", Json{{"profile", p->name()}, {"powers", Json::array()}});
        const auto& t = r.report["triple"];
        o.pass = o.pass && r.passed;
        d << p->name() << " (" << t[0].get<std::string>() << ", " << t[1].get<std::string>() << ", "
          << t[2].get<std::string>() << ") ";
    }
    o.detail = d.str();
    return o;
}

Outcome c5()
{
    Outcome o;
    std::ostringstream d;
    double worst_sup = 0.0;
    double worst_sq = 0.0;
    for (const auto& p : builtin_profiles()) {
        const auto del = dirac(p);
        worst_sup = std::max(worst_sup, std::abs(sup_order(del, -1.0, 1.0, 0).slope + 1.0));
        worst_sq = std::max(worst_sq, std::abs(growth_order(gen_pair(del * del, TestFunction{})).slope + 1.0));
    }
    const auto x = variable_x();
    const auto inv_eps = ipow(epsilon(), -1, Certificate{1e-300, 1.0});
    const auto small = is_null_candidate(epsilon() * sin(x), -1.0, 1.0);
    const bool small_inf = small.fit.classification == Classification::Infinitesimal &&
                           associated(epsilon() * sin(x), GenFunction{}).verdict == Verdict::True;
    const auto tiny = is_null_candidate(exp(-inv_eps) * sin(x), -1.0, 1.0);
    o.pass = worst_sup <= 0.05 && worst_sq <= 0.05 && !small.null && small_inf && tiny.null;
    d << "|sup slope + 1| " << fmt("%.2g", worst_sup) << ", |delta^2 slope + 1| " << fmt("%.2g", worst_sq)
      << ", eps sin x null=" << (small.null ? "yes" : "no") << " infinitesimal=" << (small_inf ? "yes" : "no")
      << ", exp(-1/eps) sin x null=" << (tiny.null ? "yes" : "no");
    o.detail = d.str();
    return o;
}

Outcome c6()
{
    Outcome o;
    std::ostringstream d;
    const auto [r1, r2] = quadratic_roots();
    const auto sols = solve_shock_mixed(kLeft, kUr);
    if (sols.size() != 2)
        return {false, "expected two roots, got " + std::to_string(sols.size())};
    const double root_err = std::max(std::abs(sols[0].c - r1), std::abs(sols[1].c - r2));
    double strong = 0.0;
    double min_slope = INFINITY;
    bool all = true;
    ValidationConfig cfg;
    cfg.samples = 100;
    for (const auto& s : sols) {
        for (const auto& p : builtin_profiles()) {
            const auto v = validate_solution(s, p, p, cfg);
            strong = std::max({strong, v.residuals[0].max_abs, v.residuals[1].max_abs});
            const auto [ok, slope] = decay_slope(v.residuals[2].association);
            all = all && v.validated && v.strong_eq12 && ok;
            min_slope = std::min(min_slope, slope);
        }
    }
    o.pass = root_err <= 1e-9 && strong < 1e-12 && min_slope >= 0.9 && all;
    d << "c = " << fmt("%.9f", sols[0].c) << ", " << fmt("%.9f", sols[1].c) << " (root err " << fmt("%.1g", root_err)
      << "), eq1/eq2 max " << fmt("%.2g", strong) << ", eq3 pairing slope >= " << fmt("%.4f", min_slope);
    o.detail = d.str();
    return o;
}

Outcome c7()
{
    Outcome o;
    const auto entries = demo_nonuniqueness(kLeft, kUr, {0.5, 2.0 / 3.0});
    bool validated = true;
    for (const auto& e : entries)
        for (const auto& v : e.solutions)
            validated = validated && v.validated;
    const double c_half = entries[0].solutions.front().solution.c;
    const double c_twothirds = entries[1].solutions.front().solution.c;
    const double diff = std::abs(c_half - c_twothirds);
    o.pass = validated && diff > 0.07;
    o.detail = "c(1/2) = " + fmt("%.9f", c_half) + ", c(2/3) = " + fmt("%.9f", c_twothirds) + ", |diff| = " +
               fmt("%.6f", diff) + " (needs > 0.07), validated=" + (validated ? "yes" : "no");
    return o;
}

Outcome c8()
{
    Outcome o;
    const auto r = demo_no_strong_solution(kLeft, kUr);
    double worst = -INFINITY;
    for (const auto& e : r.entries) {
        worst = std::max(worst, e.eq3_sup.slope);
        o.pass = o.pass && !e.eq3_null && e.eq3_sup.slope <= -0.9;
    }
    o.pass = o.pass && !r.entries.empty();
    o.detail = std::to_string(r.entries.size()) + " waves, eq3 sup slope <= " + fmt("%.4f", worst) +
               ", non-null; evidence within the tested ansatz family, not a proof";
    return o;
}

Outcome c9()
{
    Outcome o;
    const auto s = solve_shock_mixed(kLeft, kUr).front();
    double err[2];
    double defect = 0.0;
    const std::size_t cells[2] = {400, 1600};
    for (int k = 0; k < 2; ++k) {
        const auto g = riemann_grid(-1.0, 1.0, cells[k], 0.0, kLeft, s.right);
        const auto r = run(g, SimConfig{});
        const auto m = measure_shock_speed(r.snapshots, -1.0, g.dx(), 0.1);
        err[k] = std::abs(m.speed - s.c) / s.c;
        defect = std::max({defect, r.max_mass_defect, r.max_momentum_defect});
    }
    o.pass = err[0] < 0.02 && err[1] < err[0] && defect <= 1e-10;
    o.detail = "speed error " + fmt("%.3f%%", 100 * err[0]) + " (M=400), " + fmt("%.3f%%", 100 * err[1]) +
               " (M=1600), max conservation defect " + fmt("%.2g", defect);
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all{
        {1, "-1/6 identity", 5.0, c1},
        {2, "integral of delta", 0.0, c2},
        {3, "association suite", 30.0, c3},
        {4, "Schwartz breakdown triple", 0.0, c4},
        {5, "moderateness and null estimators", 0.0, c5},
        {6, "mixed Riemann solution", 0.0, c6},
        {7, "all-weak nonuniqueness", 0.0, c7},
        {8, "strong-formulation obstruction (evidence)", 0.0, c8},
        {9, "shock simulation", 60.0, c9},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long id = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || id < 1 || id > 9) {
            std::fprintf(stderr, "usage: %s [criterion 1-9 ...]\n", argv[0]);
            return 2;
        }
        selected.push_back(static_cast<int>(id));
    }

    bool ok = true;
    for (const auto& c : all) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs >= c.budget_s) {
            o.pass = false;
            o.detail += ", over the " + fmt("%.0f", c.budget_s) + " s budget";
        }
        ok = ok && o.pass;
        std::printf("criterion %d %s: %s  [%s; %.2f s]\n", c.id, c.title, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
