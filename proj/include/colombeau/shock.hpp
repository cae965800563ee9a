#pragma once

#include "colombeau/classify.hpp"
#include "colombeau/genfun.hpp"
#include "colombeau/serialize.hpp"

#include <string>
#include <vector>

namespace colombeau {

/// (rho, u, tau) for rho_t + (rho u)_x = 0, (rho u)_t + (rho u^2)_x = tau_x,
/// tau_t + u tau_x = u_x.
struct State {
    double rho = 1.0;
    double u = 0.0;
    double tau = 0.0;

    void validate() const;  // rho > 0 and finite
};

enum class Formulation { Mixed, AllWeak };

std::string to_string(Formulation f);

struct ShockSolution {
    State left;
    State right;
    double c = 0.0;
    double m = 0.0;  // rho_l (u_l - c)
    double A = 0.5;  // int K_u K_tau'
    Formulation formulation = Formulation::Mixed;
};

/// Travelling wave in xi = x - c t; the x-variable of each tree plays xi.
struct TravellingWave {
    State left;
    State right;
    double c = 0.0;
    double m = 0.0;
    ProfilePtr profile_u;
    ProfilePtr profile_tau;
    GenFunction rho;
    GenFunction u;
    GenFunction tau;
};

/// u = u_l + du K(xi / eps), tau = tau_l + m (u - u_l), rho = m / (u - c).
/// Throws CertificateViolation unless (u_l - c)(u_r - c) > 0, and
/// InvalidArgument when `right` does not follow from the strong jump
/// relations rho_r = m / (u_r - c), tau_r = tau_l + m du.
TravellingWave build_travelling_wave(const State& left, const State& right, double c, ProfilePtr profile);

/// As above with tau = tau_l + dtau K_tau(xi / eps) on its own kernel.
TravellingWave build_travelling_wave(const State& left, const State& right, double c, ProfilePtr profile_u,
                                     ProfilePtr profile_tau);

TravellingWave build_travelling_wave(const ShockSolution& s, ProfilePtr profile_u, ProfilePtr profile_tau);

/// Equation 1: (rho (u - c))', 2: (rho u (u - c) - tau)', 3: -c tau' + u tau' - u'.
GenFunction residual(const TravellingWave& wave, int equation);

/// eps -> int K_u(y) K_tau'(y) dy, via quadrature of H_u H_tau'.
GenNumber product_constant(ProfilePtr profile_u, ProfilePtr profile_tau);

/// Roots of rho_l (u_l - c)(u_l + A du - c) = 1 passing the non-characteristic
/// certificate, largest c first. Throws InvalidArgument for u_r == u_l or A
/// outside (0, 1), NoAdmissibleShock when no root passes.
std::vector<ShockSolution> solve_shock(const State& left, double u_r, double A, Formulation formulation);

/// A = 1/2.
std::vector<ShockSolution> solve_shock_mixed(const State& left, double u_r);

/// Speeds from the quadrature value of int K_u K_tau' at eps instead of the
/// exact constant.
std::vector<ShockSolution> solve_shock_quadrature(const State& left, double u_r, ProfilePtr profile_u,
                                                  ProfilePtr profile_tau, double eps = 0.01);

/// Nearest q / (p + q) with p + q <= max_denominator; H_u = K^p, H_tau = K^q
/// then give int H_u H_tau' = q / (p + q).
struct ARealization {
    int p = 1;
    int q = 1;
    double realized = 0.5;
    ProfilePtr profile_u;
    ProfilePtr profile_tau;
};

ARealization realize_product_constant(double A, ProfilePtr base, int max_denominator = 100);

struct ResidualCheck {
    int equation = 0;
    double max_abs = 0.0;  // over the sampled (xi, eps)
    NullReport null;
    AssociationReport association;
};

struct WaveValidation {
    ShockSolution solution;
    std::string profile_u;
    std::string profile_tau;
    std::vector<ResidualCheck> residuals;  // equations 1..3
    bool strong_eq12 = false;  // eq1, eq2 below 1e-12 at every sample
    bool validated = false;    // every residual associated to 0
    bool determined = true;
};

struct ValidationConfig {
    EpsLadder ladder{};
    std::vector<TestFunction> battery = default_battery();
    Thresholds thresholds{};
    QuadratureConfig quadrature{};
    int samples = 100;
    double sup_lo = -1.0;
    double sup_hi = 1.0;
    double strong_tolerance = 1e-12;
};

WaveValidation validate_solution(const ShockSolution& s, ProfilePtr profile_u, ProfilePtr profile_tau,
                                 const ValidationConfig& cfg = {});

/// Solutions of demo_nonuniqueness, each with the validation of its wave.
struct NonuniquenessEntry {
    double A = 0.5;
    ARealization realization;
    std::vector<WaveValidation> solutions;
};

/// Solves the all-weak jump system once per A and validates each root with
/// H_u = K^p, H_tau = K^q realizing A (K = base, default "bump").
std::vector<NonuniquenessEntry> demo_nonuniqueness(const State& left, double u_r, const std::vector<double>& A_values,
                                                   ProfilePtr base = nullptr, const ValidationConfig& cfg = {});

struct NoStrongEntry {
    std::string profile;
    double c = 0.0;
    GrowthFit eq3_sup;
    bool eq3_null = false;
    Verdict eq3_associated = Verdict::Undetermined;
    double eq3_min_pair_slope = 0.0;  // over fitted battery members
};

struct NoStrongReport {
    bool trivial = false;  // u_r == u_l: constant state, all residuals 0
    std::vector<NoStrongEntry> entries;
    std::string statement;
};

/// For every builtin profile and admissible mixed root: does the eq3 residual
/// fail the null test while staying associated to 0.
NoStrongReport demo_no_strong_solution(const State& left, double u_r, const ValidationConfig& cfg = {});

Json to_json(const State& s);
Json to_json(const ShockSolution& s);
Json to_json(const ResidualCheck& r);
Json to_json(const WaveValidation& v);
Json to_json(const NonuniquenessEntry& e);
Json to_json(const NoStrongReport& r);

}  // namespace colombeau
