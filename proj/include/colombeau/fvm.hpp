#pragma once

#include "colombeau/serialize.hpp"
#include "colombeau/shock.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace colombeau {

/// Uniform cell-centred grid on [a, b] holding cell averages of rho, rho u, tau.
struct Grid1D {
    double a = -1.0;
    double b = 1.0;
    std::vector<double> rho;
    std::vector<double> mom;
    std::vector<double> tau;

    std::size_t cells() const noexcept { return rho.size(); }
    double dx() const { return (b - a) / static_cast<double>(rho.size()); }
    double center(std::size_t i) const { return a + dx() * (static_cast<double>(i) + 0.5); }

    void validate() const;  // M >= 10, a < b, rho > 0, equal array sizes
};

Grid1D uniform_grid(double a, double b, std::size_t cells, const State& s);

/// Left state on x < x0, right state on x >= x0 (cell centres).
Grid1D riemann_grid(double a, double b, std::size_t cells, double x0, const State& left, const State& right);

/// How the nonconservative tau equation is discretized.
///   Kinetic: conservative update of tau + rho u^2 / 2 with flux rho u^3 / 2 - u,
///            equivalent to tau_t + u tau_x = u_x for smooth flows given the
///            first two equations, and carrying the A = 1/2 jump condition.
///   Path:    fluctuation form, interface coefficient u_i + theta (u_{i+1} - u_i)
///            (theta = 1/2 is the arithmetic mean), Rusanov-split.
enum class Eq3Form { Kinetic, Path };

std::string to_string(Eq3Form f);

struct SimConfig {
    double cfl = 0.45;
    double end_time = 0.5;  // 0 runs no step and keeps the initial snapshot only
    int snapshot_stride = 10;  // steps between snapshots; the final state is always kept
    Eq3Form eq3 = Eq3Form::Kinetic;
    double path_theta = 0.5;
    long max_steps = 10'000'000;

    void validate() const;
};

struct Snapshot {
    double time = 0.0;
    long step = 0;
    std::vector<double> rho;
    std::vector<double> u;
    std::vector<double> tau;
};

struct StepStats {
    double dt = 0.0;
    double mass_defect = 0.0;      // |change of sum rho dx + dt (boundary flux difference)|
    double momentum_defect = 0.0;  // same for rho u
};

/// One explicit step of at most dt_max. Throws SolverAbort on NaN or rho <= 0.
StepStats step(Grid1D& grid, const SimConfig& config, double time, double dt_max);

struct RunResult {
    std::vector<Snapshot> snapshots;
    long steps = 0;
    double final_time = 0.0;
    double max_mass_defect = 0.0;
    double max_momentum_defect = 0.0;
};

RunResult run(Grid1D grid, const SimConfig& config);

struct SpeedMeasurement {
    double speed = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    double std_error = 0.0;
    int samples = 0;
};

/// Least-squares slope of the position where u crosses `level` (linear
/// interpolation between cell centres) against time, over snapshots with
/// time >= t_min. The default level is (u_first + u_last) / 2 of the first
/// snapshot. Throws NoJumpFound when fewer than 3 snapshots carry a crossing.
SpeedMeasurement measure_shock_speed(const std::vector<Snapshot>& snapshots, double a, double dx, double t_min = 0.0,
                                     std::optional<double> level = std::nullopt);

/// Largest excursion of each variable outside [min(end values), max(end values)]
/// of a cell window, relative to the jump size across it; 0 for monotone data.
struct Overshoot {
    double rho = 0.0;
    double u = 0.0;
    double tau = 0.0;
};
Overshoot max_overshoot(const Snapshot& s);  // whole domain
Overshoot max_overshoot(const Snapshot& s, double a, double dx, double x_lo, double x_hi);

/// CSV "x,rho,u,tau".
void write_snapshot_csv(std::ostream& os, const Snapshot& s, double a, double dx);

Json to_json(const SimConfig& c);

}  // namespace colombeau
