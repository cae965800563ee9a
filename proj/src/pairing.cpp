#include "colombeau/pairing.hpp"

#include "colombeau/error.hpp"
#include "colombeau/ladder.hpp"
#include "colombeau/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <sstream>

namespace colombeau {

void TestFunction::validate() const
{
    if (!std::isfinite(center) || !std::isfinite(amplitude))
        throw InvalidArgument("test function center and amplitude must be finite");
    if (!(halfwidth > 0.0) || !std::isfinite(halfwidth))
        throw InvalidArgument("test function halfwidth must be positive");
    if (deriv_order < 0)
        throw InvalidArgument("test function derivative order must be >= 0");
}

double TestFunction::operator()(double x) const
{
    const double t = (x - center) / halfwidth;
    if (!(std::abs(t) < 1.0))
        return 0.0;
    if (deriv_order == 0)
        return amplitude * std::exp(1.0 - 1.0 / (1.0 - t * t));
    return amplitude * std::exp(1.0) * bump::psi_deriv(deriv_order, t) / std::pow(halfwidth, deriv_order);
}

TestFunction TestFunction::derivative() const
{
    TestFunction d = *this;
    ++d.deriv_order;
    return d;
}

std::vector<TestFunction> default_battery()
{
    return {
        {-1.0, 2.0, 1.0, 0},
        {-0.3, 1.0, 1.0, 0},
        {0.0, 1.0, 1.0, 0},
        {0.3, 1.0, 1.0, 0},
        {1.0, 2.0, 1.0, 0},
    };
}

std::optional<std::pair<double, double>> effective_support(const GenFunction& g, double eps)
{
    if (g.is_zero())
        return std::pair{0.0, 0.0};
    const auto left = tail_value(g, eps, -1);
    const auto right = tail_value(g, eps, +1);
    if (!left || !right || *left != 0.0 || *right != 0.0)
        return std::nullopt;
    const auto zones = transition_zones(g, eps);
    if (zones.empty())
        return std::pair{0.0, 0.0};
    double lo = zones.front().first;
    double hi = zones.front().second;
    for (const auto& z : zones) {
        lo = std::min(lo, z.first);
        hi = std::max(hi, z.second);
    }
    return std::pair{lo, hi};
}

namespace {

std::vector<double> panel_breakpoints(double lo, double hi, const std::vector<std::pair<double, double>>& zones)
{
    std::vector<double> bp{lo, hi};
    for (const auto& [a, b] : zones) {
        for (double p : {a, 0.5 * (a + b), b})
            if (p > lo && p < hi)
                bp.push_back(p);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

// Integrates over [lo, hi]. When that interval is exactly one transition
// zone, works in the zone coordinate s = (x - mid) / half on [-1, 1].
PairResult integrate_aligned(const std::function<double(double)>& f, double lo, double hi,
                             const std::vector<std::pair<double, double>>& zones, const QuadratureConfig& config)
{
    if (zones.size() == 1 && zones.front().first == lo && zones.front().second == hi) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        auto scaled = [&](double s) { return f(mid + half * s) * half; };
        const double bp[] = {-1.0, 0.0, 1.0};
        const auto r = integrate_panels(scaled, bp, config);
        return {r.value, r.error, r.magnitude};
    }
    const auto bp = panel_breakpoints(lo, hi, zones);
    const auto r = integrate_panels(f, bp, config);
    return {r.value, r.error, r.magnitude};
}

}  // namespace

PairResult pair(const GenFunction& g, const TestFunction& phi, double eps, const QuadratureConfig& config)
{
    phi.validate();
    config.validate();
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidArgument("pair: eps must lie in (0, 1)");
    if (g.is_zero())
        return {};

    double lo = phi.support_lo();
    double hi = phi.support_hi();
    if (const auto s = effective_support(g, eps)) {
        lo = std::max(lo, s->first);
        hi = std::min(hi, s->second);
    }
    if (!(lo < hi))
        return {};

    const auto zones = transition_zones(g, eps);
    auto f = [&](double x) { return evaluate(g, x, eps) * phi(x); };
    return integrate_aligned(f, lo, hi, zones, config);
}

GenNumber gen_pair(const GenFunction& g, const TestFunction& phi, const QuadratureConfig& config)
{
    phi.validate();
    config.validate();
    std::ostringstream origin;
    origin << "pairing with test function (center " << phi.center << ", halfwidth " << phi.halfwidth << ")";
    return GenNumber(
        [g, phi, config](double eps) {
            const auto r = pair(g, phi, eps, config);
            return GenSample{r.value, r.error, r.magnitude};
        },
        origin.str());
}

PairResult integrate_total(const GenFunction& g, double eps, const QuadratureConfig& config)
{
    config.validate();
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidArgument("integrate_total: eps must lie in (0, 1)");
    const auto s = effective_support(g, eps);
    if (!s)
        throw UnboundedSupport("integrate_total: effective support of the integrand is not compact");
    if (!(s->first < s->second))
        return {};
    const auto zones = transition_zones(g, eps);
    auto f = [&](double x) { return evaluate(g, x, eps); };
    return integrate_aligned(f, s->first, s->second, zones, config);
}

GenNumber gen_integrate_total(const GenFunction& g, const QuadratureConfig& config)
{
    config.validate();
    return GenNumber(
        [g, config](double eps) {
            const auto r = integrate_total(g, eps, config);
            return GenSample{r.value, r.error, r.magnitude};
        },
        "total integral");
}

void EpsLadder::validate() const
{
    if (k_min < 0 || k_max <= k_min)
        throw InvalidArgument("eps ladder needs 0 <= k_min < k_max");
    if (k_min == 0)
        throw InvalidArgument("eps ladder: eps = 2^0 = 1 is outside (0, 1)");
    if (k_max > 1000)
        throw InvalidArgument("eps ladder: k_max too large");
    if (size() < 6)
        throw InvalidArgument("eps ladder needs at least 6 rungs");
}

std::vector<double> EpsLadder::epsilons() const
{
    validate();
    std::vector<double> out;
    for (int k = k_min; k <= k_max; ++k)
        out.push_back(std::ldexp(1.0, -k));
    return out;
}

std::vector<LadderPoint> sample_ladder(const GenNumber& v, const EpsLadder& ladder)
{
    const auto eps = ladder.epsilons();
    std::vector<std::future<GenSample>> jobs;
    jobs.reserve(eps.size());
    for (double e : eps)
        jobs.push_back(std::async(std::launch::async, [&v, e] { return v.sample(e); }));
    std::vector<LadderPoint> out;
    out.reserve(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const auto s = jobs[i].get();
        out.push_back({eps[i], s.value, s.error, s.magnitude});
    }
    return out;
}

void write_ladder_csv(std::ostream& os, const std::vector<LadderPoint>& points)
{
    os << "eps,value,error\n";
    for (const auto& p : points)
        os << format17(p.eps) << ',' << format17(p.value) << ',' << format17(p.error) << '\n';
}

}  // namespace colombeau
