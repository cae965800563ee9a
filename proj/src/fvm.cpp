#include "colombeau/fvm.hpp"

#include "colombeau/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace colombeau {

void Grid1D::validate() const
{
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidArgument("grid domain needs finite a < b");
    if (rho.size() < 10)
        throw InvalidArgument("grid needs at least 10 cells");
    if (mom.size() != rho.size() || tau.size() != rho.size())
        throw InvalidArgument("grid arrays differ in length");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0))
            throw InvalidArgument("grid density must be positive in every cell");
        if (!std::isfinite(rho[i]) || !std::isfinite(mom[i]) || !std::isfinite(tau[i]))
            throw InvalidArgument("grid values must be finite");
    }
}

Grid1D uniform_grid(double a, double b, std::size_t cells, const State& s)
{
    return riemann_grid(a, b, cells, b, s, s);
}

Grid1D riemann_grid(double a, double b, std::size_t cells, double x0, const State& left, const State& right)
{
    left.validate();
    right.validate();
    Grid1D g;
    g.a = a;
    g.b = b;
    g.rho.resize(cells);
    g.mom.resize(cells);
    g.tau.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const State& s = g.center(i) < x0 ? left : right;
        g.rho[i] = s.rho;
        g.mom[i] = s.rho * s.u;
        g.tau[i] = s.tau;
    }
    g.validate();
    return g;
}

std::string to_string(Eq3Form f)
{
    return f == Eq3Form::Kinetic ? "kinetic" : "path";
}

void SimConfig::validate() const
{
    if (!(cfl > 0.0 && cfl < 1.0))
        throw InvalidArgument("CFL number must lie in (0, 1)");
    if (!(end_time >= 0.0) || !std::isfinite(end_time))
        throw InvalidArgument("end time must be finite and >= 0");
    if (snapshot_stride < 1)
        throw InvalidArgument("snapshot stride must be >= 1");
    if (!(path_theta >= 0.0 && path_theta <= 1.0))
        throw InvalidArgument("path coefficient theta must lie in [0, 1]");
    if (max_steps < 1)
        throw InvalidArgument("max_steps must be >= 1");
}

StepStats step(Grid1D& g, const SimConfig& cfg, double time, double dt_max)
{
    const std::size_t M = g.cells();
    const double dx = g.dx();

    // Extended arrays with one constant-extrapolation ghost cell per side.
    std::vector<double> R(M + 2), U(M + 2), T(M + 2), S(M + 2);
    for (std::size_t i = 0; i < M; ++i) {
        R[i + 1] = g.rho[i];
        U[i + 1] = g.mom[i] / g.rho[i];
        T[i + 1] = g.tau[i];
    }
    R[0] = R[1];
    U[0] = U[1];
    T[0] = T[1];
    R[M + 1] = R[M];
    U[M + 1] = U[M];
    T[M + 1] = T[M];
    double smax = 0.0;
    for (std::size_t i = 0; i < M + 2; ++i) {
        S[i] = std::abs(U[i]) + 1.0 / std::sqrt(R[i]);
        smax = std::max(smax, S[i]);
    }

    StepStats st;
    st.dt = std::min(cfg.cfl * dx / smax, dt_max);
    const double k = st.dt / dx;

    // Interface j sits between extended cells j and j + 1.
    std::vector<double> G1(M + 1), G2(M + 1), G3(M + 1), Dm(M + 1), Dp(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        const std::size_t l = j;
        const std::size_t r = j + 1;
        const double a = std::max(S[l], S[r]);
        const double ml = R[l] * U[l];
        const double mr = R[r] * U[r];
        G1[j] = 0.5 * (ml + mr) - 0.5 * a * (R[r] - R[l]);
        G2[j] = 0.5 * (ml * U[l] - T[l] + mr * U[r] - T[r]) - 0.5 * a * (mr - ml);
        if (cfg.eq3 == Eq3Form::Kinetic) {
            const double el = T[l] + 0.5 * ml * U[l];
            const double er = T[r] + 0.5 * mr * U[r];
            const double fl = 0.5 * ml * U[l] * U[l] - U[l];
            const double fr = 0.5 * mr * U[r] * U[r] - U[r];
            G3[j] = 0.5 * (fl + fr) - 0.5 * a * (er - el);
        } else {
            const double dtau = T[r] - T[l];
            const double du = U[r] - U[l];
            const double d = (U[l] + cfg.path_theta * du) * dtau - du;
            Dm[j] = 0.5 * (d - a * dtau);
            Dp[j] = 0.5 * (d + a * dtau);
        }
    }

    double mass_before = 0.0;
    double mom_before = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        mass_before += g.rho[i];
        mom_before += g.mom[i];
    }

    for (std::size_t i = 0; i < M; ++i) {
        const double rho = g.rho[i] - k * (G1[i + 1] - G1[i]);
        const double mom = g.mom[i] - k * (G2[i + 1] - G2[i]);
        double tau = 0.0;
        if (cfg.eq3 == Eq3Form::Kinetic) {
            const double e = g.tau[i] + 0.5 * g.mom[i] * g.mom[i] / g.rho[i] - k * (G3[i + 1] - G3[i]);
            tau = e - 0.5 * mom * mom / rho;
        } else {
            tau = g.tau[i] - k * (Dp[i] + Dm[i + 1]);
        }
        if (!std::isfinite(rho) || !std::isfinite(mom) || !std::isfinite(tau)) {
            std::ostringstream os;
            os << "non-finite value in cell " << i << " at t = " << time + st.dt;
            throw SolverAbort(os.str(), static_cast<long>(i), time + st.dt);
        }
        if (!(rho > 0.0)) {
            std::ostringstream os;
            os.precision(17);
            os << "non-positive density " << rho << " in cell " << i << " at t = " << time + st.dt;
            throw SolverAbort(os.str(), static_cast<long>(i), time + st.dt);
        }
        g.rho[i] = rho;
        g.mom[i] = mom;
        g.tau[i] = tau;
    }

    double mass_after = 0.0;
    double mom_after = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        mass_after += g.rho[i];
        mom_after += g.mom[i];
    }
    st.mass_defect = std::abs((mass_after - mass_before) * dx + st.dt * (G1[M] - G1[0]));
    st.momentum_defect = std::abs((mom_after - mom_before) * dx + st.dt * (G2[M] - G2[0]));
    return st;
}

namespace {

Snapshot take(const Grid1D& g, double time, long step)
{
    Snapshot s;
    s.time = time;
    s.step = step;
    s.rho = g.rho;
    s.tau = g.tau;
    s.u.resize(g.cells());
    for (std::size_t i = 0; i < g.cells(); ++i)
        s.u[i] = g.mom[i] / g.rho[i];
    return s;
}

}  // namespace

RunResult run(Grid1D grid, const SimConfig& config)
{
    grid.validate();
    config.validate();
    RunResult r;
    double t = 0.0;
    r.snapshots.push_back(take(grid, t, 0));
    while (t < config.end_time) {
        if (r.steps >= config.max_steps)
            throw SolverAbort("step budget exhausted before the end time", -1, t);
        const auto st = step(grid, config, t, config.end_time - t);
        ++r.steps;
        const bool last = st.dt >= config.end_time - t;
        t = last ? config.end_time : t + st.dt;
        r.max_mass_defect = std::max(r.max_mass_defect, st.mass_defect);
        r.max_momentum_defect = std::max(r.max_momentum_defect, st.momentum_defect);
        if (last || r.steps % config.snapshot_stride == 0)
            r.snapshots.push_back(take(grid, t, r.steps));
    }
    r.final_time = t;
    return r;
}

SpeedMeasurement measure_shock_speed(const std::vector<Snapshot>& snapshots, double a, double dx, double t_min,
                                     std::optional<double> level_opt)
{
    if (snapshots.empty() || snapshots.front().u.empty())
        throw NoJumpFound("no snapshots");
    const auto& u0 = snapshots.front().u;
    const double level = level_opt.value_or(0.5 * (u0.front() + u0.back()));
    std::vector<double> ts;
    std::vector<double> xs;
    for (const auto& s : snapshots) {
        if (s.time < t_min)
            continue;
        for (std::size_t i = 0; i + 1 < s.u.size(); ++i) {
            const double l = s.u[i] - level;
            const double r = s.u[i + 1] - level;
            if (l * r <= 0.0 && s.u[i] != s.u[i + 1]) {
                const double xi = a + dx * (static_cast<double>(i) + 0.5);
                ts.push_back(s.time);
                xs.push_back(xi + dx * (level - s.u[i]) / (s.u[i + 1] - s.u[i]));
                break;
            }
        }
    }
    if (ts.size() < 3)
        throw NoJumpFound("no jump in u crosses the mid level in at least 3 snapshots");

    const auto n = static_cast<double>(ts.size());
    double mt = 0.0;
    double mx = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        mt += ts[i];
        mx += xs[i];
    }
    mt /= n;
    mx /= n;
    double stt = 0.0;
    double stx = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        stt += (ts[i] - mt) * (ts[i] - mt);
        stx += (ts[i] - mt) * (xs[i] - mx);
    }
    if (!(stt > 0.0))
        throw NoJumpFound("crossing samples span no time interval");
    SpeedMeasurement m;
    m.samples = static_cast<int>(ts.size());
    m.speed = stx / stt;
    m.intercept = mx - m.speed * mt;
    double ss = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double r = xs[i] - (m.intercept + m.speed * ts[i]);
        ss += r * r;
    }
    m.rms_residual = std::sqrt(ss / n);
    m.std_error = ts.size() > 2 ? std::sqrt(ss / (n - 2.0) / stt) : 0.0;
    return m;
}

namespace {

double excursion(const std::vector<double>& v, std::size_t lo, std::size_t hi)
{
    const double first = v[lo];
    const double last = v[hi - 1];
    const double l = std::min(first, last);
    const double h = std::max(first, last);
    const auto [mn, mx] = std::minmax_element(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                              v.begin() + static_cast<std::ptrdiff_t>(hi));
    const double excess = std::max({0.0, l - *mn, *mx - h});
    return h > l ? excess / (h - l) : excess;
}

Overshoot window_overshoot(const Snapshot& s, std::size_t lo, std::size_t hi)
{
    if (hi <= lo)
        return {};
    return {excursion(s.rho, lo, hi), excursion(s.u, lo, hi), excursion(s.tau, lo, hi)};
}

}  // namespace

Overshoot max_overshoot(const Snapshot& s)
{
    return window_overshoot(s, 0, s.rho.size());
}

Overshoot max_overshoot(const Snapshot& s, double a, double dx, double x_lo, double x_hi)
{
    std::size_t lo = s.rho.size();
    std::size_t hi = 0;
    for (std::size_t i = 0; i < s.rho.size(); ++i) {
        const double x = a + dx * (static_cast<double>(i) + 0.5);
        if (x >= x_lo && x <= x_hi) {
            lo = std::min(lo, i);
            hi = i + 1;
        }
    }
    return window_overshoot(s, lo, hi);
}

void write_snapshot_csv(std::ostream& os, const Snapshot& s, double a, double dx)
{
    os << "x,rho,u,tau\n";
    for (std::size_t i = 0; i < s.rho.size(); ++i)
        os << format17(a + dx * (static_cast<double>(i) + 0.5)) << ',' << format17(s.rho[i]) << ','
           << format17(s.u[i]) << ',' << format17(s.tau[i]) << '\n';
}

Json to_json(const SimConfig& c)
{
    Json j{{"cfl", c.cfl},
           {"end_time", c.end_time},
           {"snapshot_stride", c.snapshot_stride},
           {"eq3", to_string(c.eq3)}};
    if (c.eq3 == Eq3Form::Path)
        j["path_theta"] = c.path_theta;
    return j;
}

}  // namespace colombeau
