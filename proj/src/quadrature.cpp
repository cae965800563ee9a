#include "colombeau/quadrature.hpp"

#include "colombeau/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace colombeau {

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw InvalidArgument("quadrature tolerances must be positive");
    if (max_subdivisions < 1)
        throw InvalidArgument("quadrature max_subdivisions must be >= 1");
}

namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double magnitude;  // int |f|

    bool operator<(const Panel& other) const { return error < other.error; }
};

// 21-point Kronrod rule with its embedded 10-point Gauss rule.
Panel rule(const std::function<double(double)>& f, double a, double b)
{
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    static const auto& xk = gauss_kronrod<double, 21>::abscissa();
    static const auto& wk = gauss_kronrod<double, 21>::weights();
    static const auto& wg = gauss<double, 10>::weights();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kronrod = wk[0] * fc;
    double gauss_sum = 0.0;
    double magnitude = wk[0] * std::abs(fc);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double fl = f(mid - half * xk[i]);
        const double fr = f(mid + half * xk[i]);
        kronrod += wk[i] * (fl + fr);
        magnitude += wk[i] * (std::abs(fl) + std::abs(fr));
        if (i % 2 == 1)
            gauss_sum += wg[i / 2] * (fl + fr);
    }
    const double value = kronrod * half;
    return {a, b, value, std::abs(value - gauss_sum * half), magnitude * std::abs(half)};
}

}  // namespace

QuadratureResult integrate_panels(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                  const QuadratureConfig& config)
{
    config.validate();
    if (breakpoints.size() < 2)
        throw InvalidArgument("integrate_panels: need at least two breakpoints");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw InvalidArgument("integrate_panels: breakpoints must be sorted");

    std::priority_queue<Panel> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] <= breakpoints[i])
            continue;
        Panel p = rule(f, breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    int subdivisions = 0;
    while (!heap.empty() && total_err > std::max(config.abs_tol, config.rel_tol * std::abs(total))) {
        if (subdivisions >= config.max_subdivisions) {
            std::ostringstream os;
            os.precision(6);
            os << "quadrature did not converge after " << subdivisions << " subdivisions (estimate " << total_err
               << ", value " << total << ")";
            throw QuadratureError(os.str(), total, total_err);
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Panel cannot be split further in double precision; keep it.
            heap.push({worst.a, worst.b, worst.value, 0.0, worst.magnitude});
            total_err -= worst.error;
            continue;
        }
        Panel left = rule(f, worst.a, mid);
        Panel right = rule(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum to shed the drift of the incremental updates.
    double sum = 0.0;
    double err = 0.0;
    double magnitude = 0.0;
    std::vector<Panel> panels;
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const auto& p : panels) {
        sum += p.value;
        err += p.error;
        magnitude += p.magnitude;
    }
    return {sum, err, subdivisions, magnitude};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& config)
{
    if (a == b)
        return {};
    if (a > b) {
        auto r = integrate(f, b, a, config);
        r.value = -r.value;
        return r;
    }
    const double bp[] = {a, b};
    return integrate_panels(f, bp, config);
}

}  // namespace colombeau
