#pragma once

#include <functional>
#include <span>

namespace colombeau {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    /// Throws InvalidArgument unless both tolerances are positive and
    /// max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    double magnitude = 0.0;  // rule estimate of int |f|, sets the rounding-noise scale of value
};

/// Globally adaptive 21-point Gauss-Kronrod integration over [breakpoints.front(),
/// breakpoints.back()], starting from the panels the breakpoints define. The
/// panel with the largest error estimate is bisected until the summed estimate
/// drops below max(abs_tol, rel_tol * |value|).
///
/// Throws QuadratureError (carrying the achieved estimate) when the subdivision
/// budget runs out.
QuadratureResult integrate_panels(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                  const QuadratureConfig& config = {});

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& config = {});

}  // namespace colombeau
