#pragma once

#include "colombeau/genfun.hpp"
#include "colombeau/quadrature.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace colombeau {

/// Compactly supported test function
///   phi(x) = amplitude * exp(1 - 1 / (1 - t^2)),  t = (x - center) / halfwidth,
/// so phi(center) = amplitude; deriv_order > 0 selects phi^(deriv_order).
struct TestFunction {
    double center = 0.0;
    double halfwidth = 1.0;
    double amplitude = 1.0;
    int deriv_order = 0;

    void validate() const;
    double operator()(double x) const;
    TestFunction derivative() const;

    double support_lo() const { return center - halfwidth; }
    double support_hi() const { return center + halfwidth; }
};

/// Centers {-1, -0.3, 0, 0.3, 1}, halfwidths {2, 1, 1, 1, 2}.
std::vector<TestFunction> default_battery();

struct PairResult {
    double value = 0.0;
    double error = 0.0;
    double magnitude = 0.0;  // int |integrand|
};

/// Effective support of g at this eps: hull of its transition zones when g is
/// provably zero on both far sides; nullopt otherwise.
std::optional<std::pair<double, double>> effective_support(const GenFunction& g, double eps);

/// int g(x, eps) phi(x) dx over supp(phi) (intersected with the effective
/// support of g when known), with panels aligned to every transition zone.
PairResult pair(const GenFunction& g, const TestFunction& phi, double eps, const QuadratureConfig& config = {});

/// eps -> pair(g, phi, eps).
GenNumber gen_pair(const GenFunction& g, const TestFunction& phi, const QuadratureConfig& config = {});

/// int g(x, eps) dx over the effective support. Throws UnboundedSupport when
/// the support cannot be bounded statically.
PairResult integrate_total(const GenFunction& g, double eps, const QuadratureConfig& config = {});

/// eps -> integrate_total(g, eps).
GenNumber gen_integrate_total(const GenFunction& g, const QuadratureConfig& config = {});

}  // namespace colombeau
