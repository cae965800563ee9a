#pragma once

#include "colombeau/genfun.hpp"
#include "colombeau/ladder.hpp"
#include "colombeau/pairing.hpp"
#include "colombeau/serialize.hpp"

#include <string>
#include <vector>

namespace colombeau {

enum class Classification {
    NullLike,
    Infinitesimal,
    FiniteNonzero,
    Growing,
    Undetermined,
};

std::string to_string(Classification c);

/// Cutoffs used to turn a log-log fit into a verdict. Every report carries
/// the values it was decided with.
struct Thresholds {
    double infinitesimal_slope = 0.5;
    double null_slope = 3.0;
    double null_r_squared = 0.99;
    double finite_slope = 0.1;
    double growing_slope = -0.5;
    double erratic_r_squared = 0.5;
    double erratic_residual = 0.05;  // rms of log|v| about the fit
    int tail_rungs = 3;
    int q_max = 6;
    double zero_floor = 1e-300;
    double noise_relative = 1e-13;  // quadrature values below this times int |f| count as 0
};

/// Power-law fit log|v| = intercept + slope * log(eps) over a ladder.
struct GrowthFit {
    std::vector<LadderPoint> points;
    int fitted_rungs = 0;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double rms_residual = 0.0;
    double tail_slope = 0.0;  // slope over the finest tail_rungs nonzero rungs
    bool accelerating = false;  // local slopes strictly increasing
    bool underflow = false;     // exact zeros on the finest rungs after nonzero coarse ones
    Classification classification = Classification::Undetermined;
    bool exact_zero = false;
    bool below_noise = false;  // zero to rounding, but not exactly
    int growth_order = 0;  // N for Growing
    double limit = 0.0;    // Richardson estimate for FiniteNonzero
    std::string note;
};

/// Fits and classifies already-sampled ladder values (coarse to fine).
GrowthFit classify_ladder(std::vector<LadderPoint> points, const Thresholds& th = {});

GrowthFit growth_order(const GenNumber& v, const EpsLadder& ladder = {}, const Thresholds& th = {});

/// Two-level Richardson limit from the three finest rungs, assuming
/// v = L + a eps + b eps^2 with eps halving per rung.
double richardson_limit(const std::vector<LadderPoint>& points);

/// Evaluation grid on [a, b]: 2001 uniform points plus 801 points across every
/// transition zone, laid out in zone coordinates so the same y = x / eps
/// points are hit at every eps.
std::vector<double> sup_grid(const GenFunction& g, double a, double b, double eps);

/// max |g(x, eps)| over sup_grid.
double sup_norm(const GenFunction& g, double a, double b, double eps);

/// eps -> sup_norm(d^n g / dx^n) on [a, b], fitted over the ladder.
GrowthFit sup_order(const GenFunction& g, double a, double b, int deriv_order, const EpsLadder& ladder = {},
                    const Thresholds& th = {});

struct ModerateReport {
    bool moderate = false;
    bool verified = true;
    int offending_order = -1;
    std::vector<GrowthFit> per_order;
    std::vector<int> orders_n;  // fitted N per derivative order (0 when not growing)
};

ModerateReport is_moderate(const GenFunction& g, double a, double b, int max_deriv, const EpsLadder& ladder = {},
                           const Thresholds& th = {});

struct NullReport {
    bool null = false;
    bool exact = false;
    bool determined = true;
    int q_max = 6;
    GrowthFit fit;
};

/// Order-0 sup-norm test only: null iff the sup vanishes identically or its
/// slope exceeds q_max with a null-like fit.
NullReport is_null_candidate(const GenFunction& g, double a, double b, const EpsLadder& ladder = {},
                             const Thresholds& th = {});

enum class Verdict { True, False, Undetermined };

std::string to_string(Verdict v);

struct AssociationReport {
    Verdict verdict = Verdict::Undetermined;
    std::vector<TestFunction> battery;
    std::vector<GrowthFit> per_test;
    bool battery_warning = false;
    std::string warning;
};

/// g1 ~ g2: every pairing of g1 - g2 with the battery is infinitesimal or null-like.
AssociationReport associated(const GenFunction& g1, const GenFunction& g2,
                             const std::vector<TestFunction>& battery = default_battery(),
                             const EpsLadder& ladder = {}, const Thresholds& th = {},
                             const QuadratureConfig& quad = {});

Json to_json(const Thresholds& th);
Json to_json(const TestFunction& phi);
Json to_json(const GrowthFit& fit);
Json to_json(const ModerateReport& r);
Json to_json(const NullReport& r);
Json to_json(const AssociationReport& r);

}  // namespace colombeau
