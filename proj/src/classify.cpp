#include "colombeau/classify.hpp"

#include "colombeau/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace colombeau {

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::NullLike:
        return "null-like";
    case Classification::Infinitesimal:
        return "infinitesimal";
    case Classification::FiniteNonzero:
        return "finite-nonzero";
    case Classification::Growing:
        return "growing";
    case Classification::Undetermined:
        return "undetermined";
    }
    return "undetermined";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::True:
        return "true";
    case Verdict::False:
        return "false";
    case Verdict::Undetermined:
        return "undetermined";
    }
    return "undetermined";
}

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double rms = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    LineFit f;
    f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (f.intercept + f.slope * xs[i]);
        ss_res += r * r;
    }
    f.rms = std::sqrt(ss_res / n);
    if (syy > 0.0)
        f.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    else
        f.r_squared = 1.0;
    return f;
}

}  // namespace

double richardson_limit(const std::vector<LadderPoint>& points)
{
    if (points.empty())
        return 0.0;
    const std::size_t n = points.size();
    if (n < 3)
        return points.back().value;
    const double v1 = points[n - 3].value;
    const double v2 = points[n - 2].value;
    const double v3 = points[n - 1].value;
    const double r1 = 2.0 * v2 - v1;
    const double r2 = 2.0 * v3 - v2;
    return (4.0 * r2 - r1) / 3.0;
}

GrowthFit classify_ladder(std::vector<LadderPoint> points, const Thresholds& th)
{
    GrowthFit fit;
    fit.points = std::move(points);

    for (const auto& p : fit.points) {
        if (!std::isfinite(p.value)) {
            fit.note = "non-finite value on the ladder";
            return fit;
        }
    }

    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t last_nonzero = 0;
    bool any_nonzero = false;
    bool interior_zero = false;
    for (std::size_t i = 0; i < fit.points.size(); ++i) {
        const auto& p = fit.points[i];
        if (std::abs(p.value) > std::max(th.zero_floor, th.noise_relative * p.magnitude)) {
            if (any_nonzero && last_nonzero + 1 != i)
                interior_zero = true;
            xs.push_back(std::log(p.eps));
            ys.push_back(std::log(std::abs(p.value)));
            last_nonzero = i;
            any_nonzero = true;
        }
    }

    if (!any_nonzero) {
        fit.classification = Classification::NullLike;
        fit.exact_zero = std::all_of(fit.points.begin(), fit.points.end(),
                                     [&](const LadderPoint& p) { return std::abs(p.value) <= th.zero_floor; });
        fit.below_noise = !fit.exact_zero;
        fit.note = fit.exact_zero ? "identically zero on every rung" : "below rounding noise on every rung";
        return fit;
    }
    if (interior_zero) {
        fit.note = "sporadic zero values between nonzero rungs";
        return fit;
    }
    fit.underflow = last_nonzero + 1 < fit.points.size();
    fit.fitted_rungs = static_cast<int>(xs.size());

    if (xs.size() < 3) {
        if (fit.underflow && (xs.size() < 2 || ys.back() < ys.front())) {
            fit.classification = Classification::NullLike;
            fit.note = "decays below the double range within the ladder";
        } else {
            fit.note = "fewer than 3 nonzero rungs";
        }
        return fit;
    }

    const auto line = least_squares(xs, ys);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;
    fit.rms_residual = line.rms;

    const auto tail = static_cast<std::size_t>(std::clamp(th.tail_rungs, 2, static_cast<int>(xs.size())));
    const std::vector<double> tx(xs.end() - static_cast<std::ptrdiff_t>(tail), xs.end());
    const std::vector<double> ty(ys.end() - static_cast<std::ptrdiff_t>(tail), ys.end());
    fit.tail_slope = least_squares(tx, ty).slope;

    fit.accelerating = true;
    double previous = -INFINITY;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double local = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        if (!(local > previous))
            fit.accelerating = false;
        previous = local;
    }

    if (fit.underflow && fit.slope >= th.null_slope) {
        fit.classification = Classification::NullLike;
        fit.note = "decays below the double range within the ladder";
        return fit;
    }
    if (fit.r_squared < th.erratic_r_squared && fit.rms_residual > th.erratic_residual) {
        fit.note = "erratic ladder: no power law fits";
        return fit;
    }
    if (fit.slope >= th.null_slope && (fit.r_squared >= th.null_r_squared || fit.accelerating)) {
        fit.classification = Classification::NullLike;
        return fit;
    }
    if (fit.slope >= th.infinitesimal_slope && fit.tail_slope >= th.infinitesimal_slope) {
        fit.classification = Classification::Infinitesimal;
        return fit;
    }
    if (std::abs(fit.slope) < th.finite_slope) {
        fit.classification = Classification::FiniteNonzero;
        fit.limit = richardson_limit(fit.points);
        return fit;
    }
    if (fit.slope <= th.growing_slope) {
        fit.classification = Classification::Growing;
        fit.growth_order = static_cast<int>(std::lround(-fit.slope));
        return fit;
    }
    fit.note = "slope falls between the decision bands";
    return fit;
}

GrowthFit growth_order(const GenNumber& v, const EpsLadder& ladder, const Thresholds& th)
{
    return classify_ladder(sample_ladder(v, ladder), th);
}

std::vector<double> sup_grid(const GenFunction& g, double a, double b, double eps)
{
    if (!(a < b))
        throw InvalidArgument("sup grid needs a < b");
    constexpr int kUniform = 2000;
    constexpr int kZone = 800;
    std::vector<double> xs;
    xs.reserve(kUniform + 1);
    for (int i = 0; i <= kUniform; ++i)
        xs.push_back(a + (b - a) * i / kUniform);
    xs.back() = b;
    for (const auto& [lo, hi] : transition_zones(g, eps)) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (int j = 0; j <= kZone; ++j) {
            const double x = mid + half * (-1.0 + 2.0 * j / kZone);
            if (x >= a && x <= b)
                xs.push_back(x);
        }
    }
    return xs;
}

double sup_norm(const GenFunction& g, double a, double b, double eps)
{
    double m = 0.0;
    for (double x : sup_grid(g, a, b, eps)) {
        const double v = std::abs(evaluate(g, x, eps));
        if (!(v <= m))
            m = v;  // NaN propagates
    }
    return m;
}

GrowthFit sup_order(const GenFunction& g, double a, double b, int deriv_order, const EpsLadder& ladder,
                    const Thresholds& th)
{
    if (deriv_order < 0)
        throw InvalidArgument("sup_order: derivative order must be >= 0");
    if (!(a < b))
        throw InvalidArgument("sup_order: interval needs a < b");
    const auto d = differentiate(g, deriv_order);
    const auto v = GenNumber::from_function([d, a, b](double eps) { return sup_norm(d, a, b, eps); }, "sup norm");
    return growth_order(v, ladder, th);
}

ModerateReport is_moderate(const GenFunction& g, double a, double b, int max_deriv, const EpsLadder& ladder,
                           const Thresholds& th)
{
    if (max_deriv < 0)
        throw InvalidArgument("is_moderate: max derivative order must be >= 0");
    ModerateReport r;
    for (int n = 0; n <= max_deriv; ++n) {
        auto fit = sup_order(g, a, b, n, ladder, th);
        r.orders_n.push_back(fit.classification == Classification::Growing ? fit.growth_order : 0);
        if (fit.classification == Classification::Undetermined && r.verified) {
            r.verified = false;
            r.offending_order = n;
        }
        r.per_order.push_back(std::move(fit));
    }
    r.moderate = r.verified;
    return r;
}

NullReport is_null_candidate(const GenFunction& g, double a, double b, const EpsLadder& ladder,
                             const Thresholds& th)
{
    NullReport r;
    r.q_max = th.q_max;
    r.fit = sup_order(g, a, b, 0, ladder, th);
    r.exact = r.fit.exact_zero;
    r.determined = r.fit.classification != Classification::Undetermined;
    r.null = r.exact || (r.fit.classification == Classification::NullLike &&
                         (r.fit.underflow || r.fit.slope > static_cast<double>(th.q_max)));
    return r;
}

AssociationReport associated(const GenFunction& g1, const GenFunction& g2, const std::vector<TestFunction>& battery,
                             const EpsLadder& ladder, const Thresholds& th, const QuadratureConfig& quad)
{
    if (battery.empty())
        throw InvalidArgument("associated: empty test-function battery");
    for (const auto& phi : battery)
        phi.validate();
    ladder.validate();

    AssociationReport r;
    r.battery = battery;
    const auto diff = sub(g1, g2);

    std::vector<std::future<GrowthFit>> jobs;
    for (const auto& phi : battery)
        jobs.push_back(std::async(std::launch::async, [&diff, phi, &ladder, &th, &quad] {
            return growth_order(gen_pair(diff, phi, quad), ladder, th);
        }));
    for (auto& j : jobs)
        r.per_test.push_back(j.get());

    bool all_small = true;
    bool any_undetermined = false;
    bool all_exact_zero = true;
    for (const auto& f : r.per_test) {
        if (f.classification == Classification::Undetermined)
            any_undetermined = true;
        if (f.classification != Classification::NullLike && f.classification != Classification::Infinitesimal)
            all_small = false;
        if (!f.exact_zero)
            all_exact_zero = false;
    }
    if (any_undetermined)
        r.verdict = Verdict::Undetermined;
    else
        r.verdict = all_small ? Verdict::True : Verdict::False;

    if (all_exact_zero && !diff.is_zero()) {
        r.battery_warning = true;
        r.warning = "every pairing vanished identically: no test function reaches the region where the two "
                    "generalized functions differ, so this battery cannot detect a difference there";
    }
    return r;
}

Json to_json(const Thresholds& th)
{
    return Json{{"infinitesimal_slope", th.infinitesimal_slope},
                {"null_slope", th.null_slope},
                {"null_r_squared", th.null_r_squared},
                {"finite_slope", th.finite_slope},
                {"growing_slope", th.growing_slope},
                {"erratic_r_squared", th.erratic_r_squared},
                {"erratic_residual", th.erratic_residual},
                {"tail_rungs", th.tail_rungs},
                {"q_max", th.q_max},
                {"zero_floor", th.zero_floor},
                {"noise_relative", th.noise_relative}};
}

Json to_json(const TestFunction& phi)
{
    return Json{{"center", phi.center},
                {"halfwidth", phi.halfwidth},
                {"amplitude", phi.amplitude},
                {"deriv_order", phi.deriv_order}};
}

Json to_json(const GrowthFit& fit)
{
    Json rungs = Json::array();
    for (const auto& p : fit.points)
        rungs.push_back(Json{{"eps", p.eps}, {"value", p.value}, {"error", p.error}});
    Json j{{"classification", to_string(fit.classification)},
           {"exact_zero", fit.exact_zero},
           {"below_noise", fit.below_noise},
           {"slope", fit.slope},
           {"intercept", fit.intercept},
           {"r_squared", fit.r_squared},
           {"rms_residual", fit.rms_residual},
           {"tail_slope", fit.tail_slope},
           {"accelerating", fit.accelerating},
           {"underflow", fit.underflow},
           {"fitted_rungs", fit.fitted_rungs}};
    if (fit.classification == Classification::Growing)
        j["growth_order"] = fit.growth_order;
    if (fit.classification == Classification::FiniteNonzero)
        j["limit"] = fit.limit;
    if (!fit.note.empty())
        j["note"] = fit.note;
    j["rungs"] = std::move(rungs);
    return j;
}

Json to_json(const ModerateReport& r)
{
    Json orders = Json::array();
    for (std::size_t n = 0; n < r.per_order.size(); ++n) {
        Json o = to_json(r.per_order[n]);
        o["order"] = n;
        o["N"] = r.orders_n[n];
        orders.push_back(std::move(o));
    }
    Json j{{"moderate", r.verified ? Json(r.moderate) : Json("unverified")}};
    if (!r.verified)
        j["offending_order"] = r.offending_order;
    j["N"] = r.orders_n;
    j["orders"] = std::move(orders);
    return j;
}

Json to_json(const NullReport& r)
{
    return Json{{"null", r.determined ? Json(r.null) : Json("undetermined")},
                {"exact", r.exact},
                {"q_max", r.q_max},
                {"fit", to_json(r.fit)}};
}

Json to_json(const AssociationReport& r)
{
    Json tests = Json::array();
    for (std::size_t i = 0; i < r.per_test.size(); ++i) {
        Json t{{"test_function", to_json(r.battery[i])}};
        t["fit"] = to_json(r.per_test[i]);
        tests.push_back(std::move(t));
    }
    Json j{{"associated", to_string(r.verdict)}, {"battery_size", r.battery.size()}};
    if (r.battery_warning)
        j["warning"] = r.warning;
    j["tests"] = std::move(tests);
    return j;
}

}  // namespace colombeau
