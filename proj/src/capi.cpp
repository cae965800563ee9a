#include "colombeau/colombeau.h"

#include "colombeau/error.hpp"
#include "colombeau/pairing.hpp"
#include "colombeau/shock.hpp"
#include "commands.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct cb_genfun {
    colombeau::GenFunction g;
};

namespace {

thread_local std::string last_error;

cb_status fail(cb_status s, const char* what)
{
    last_error = what;
    return s;
}

template <class F>
cb_status guarded(F&& f)
{
    using namespace colombeau;
    try {
        last_error.clear();
        f();
        return CB_OK;
    } catch (const InvalidArgument& e) {
        return fail(CB_INVALID_ARGUMENT, e.what());
    } catch (const CertificateViolation& e) {
        return fail(CB_CERTIFICATE, e.what());
    } catch (const QuadratureError& e) {
        return fail(CB_QUADRATURE, e.what());
    } catch (const UnboundedSupport& e) {
        return fail(CB_UNSUPPORTED, e.what());
    } catch (const NoAdmissibleShock& e) {
        return fail(CB_NO_SHOCK, e.what());
    } catch (const SolverAbort& e) {
        return fail(CB_SOLVER, e.what());
    } catch (const NoJumpFound& e) {
        return fail(CB_NO_JUMP, e.what());
    } catch (const IoError& e) {
        return fail(CB_IO, e.what());
    } catch (const Json::parse_error& e) {
        return fail(CB_PARSE, e.what());
    } catch (const Json::exception& e) {
        return fail(CB_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(CB_INTERNAL, e.what());
    } catch (...) {
        return fail(CB_INTERNAL, "unknown exception");
    }
}

char* copy_string(const std::string& s)
{
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* name)
{
    if (!p)
        throw colombeau::InvalidArgument(std::string(name) + " is null");
}

cb_status make(cb_genfun** out, const std::function<colombeau::GenFunction()>& build)
{
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        *out = new cb_genfun{build()};
    });
}

}  // namespace

extern "C" {

const char* cb_version(void) { return "0.1.0"; }

const char* cb_status_name(cb_status status)
{
    switch (status) {
    case CB_OK: return "ok";
    case CB_INVALID_ARGUMENT: return "invalid argument";
    case CB_CERTIFICATE: return "certificate violation";
    case CB_QUADRATURE: return "quadrature failure";
    case CB_UNSUPPORTED: return "unbounded support";
    case CB_NO_SHOCK: return "no admissible shock";
    case CB_SOLVER: return "solver abort";
    case CB_NO_JUMP: return "no jump found";
    case CB_PARSE: return "parse error";
    case CB_IO: return "i/o error";
    case CB_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cb_last_error(void) { return last_error.c_str(); }

void cb_string_free(char* s) { std::free(s); }

void cb_genfun_free(cb_genfun* g) { delete g; }

cb_status cb_genfun_constant(double value, cb_genfun** out)
{
    return make(out, [&] { return colombeau::constant(value); });
}

cb_status cb_genfun_x(cb_genfun** out)
{
    return make(out, [] { return colombeau::variable_x(); });
}

cb_status cb_genfun_eps(cb_genfun** out)
{
    return make(out, [] { return colombeau::epsilon(); });
}

cb_status cb_genfun_heaviside(const char* profile, cb_genfun** out)
{
    return make(out, [&] {
        need(profile, "profile");
        return colombeau::heaviside(std::string_view(profile));
    });
}

cb_status cb_genfun_dirac(const char* profile, cb_genfun** out)
{
    return make(out, [&] {
        need(profile, "profile");
        return colombeau::dirac(std::string_view(profile));
    });
}

cb_status cb_genfun_add(const cb_genfun* a, const cb_genfun* b, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        need(b, "b");
        return a->g + b->g;
    });
}

cb_status cb_genfun_sub(const cb_genfun* a, const cb_genfun* b, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        need(b, "b");
        return a->g - b->g;
    });
}

cb_status cb_genfun_mul(const cb_genfun* a, const cb_genfun* b, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        need(b, "b");
        return a->g * b->g;
    });
}

cb_status cb_genfun_scale(const cb_genfun* a, double r, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        return colombeau::scale(a->g, r);
    });
}

cb_status cb_genfun_pow(const cb_genfun* a, int n, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        return colombeau::ipow(a->g, n);
    });
}

cb_status cb_genfun_pow_certified(const cb_genfun* a, int n, double lo, double hi, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        return colombeau::ipow(a->g, n, colombeau::Certificate{lo, hi});
    });
}

cb_status cb_genfun_differentiate(const cb_genfun* a, int order, cb_genfun** out)
{
    return make(out, [&] {
        need(a, "a");
        return colombeau::differentiate(a->g, order);
    });
}

cb_status cb_genfun_from_json(const char* json, cb_genfun** out)
{
    return make(out, [&] {
        need(json, "json");
        return colombeau::genfun_from_json_string(json);
    });
}

cb_status cb_genfun_to_json(const cb_genfun* g, char** json_out)
{
    return guarded([&] {
        need(g, "g");
        need(json_out, "json_out");
        *json_out = copy_string(colombeau::to_json_string(g->g));
    });
}

cb_status cb_genfun_evaluate(const cb_genfun* g, double x, double eps, double* value)
{
    return guarded([&] {
        need(g, "g");
        need(value, "value");
        *value = colombeau::evaluate(g->g, x, eps);
    });
}

cb_status cb_integrate(const cb_genfun* g, double eps, double* value, double* error)
{
    return guarded([&] {
        need(g, "g");
        need(value, "value");
        const auto r = colombeau::integrate_total(g->g, eps);
        *value = r.value;
        if (error)
            *error = r.error;
    });
}

cb_status cb_pair(const cb_genfun* g, double center, double halfwidth, double amplitude, double eps, double* value,
                  double* error)
{
    return guarded([&] {
        need(g, "g");
        need(value, "value");
        colombeau::TestFunction phi;
        phi.center = center;
        phi.halfwidth = halfwidth;
        phi.amplitude = amplitude;
        phi.validate();
        const auto r = colombeau::pair(g->g, phi, eps);
        *value = r.value;
        if (error)
            *error = r.error;
    });
}

cb_status cb_shock_speeds(double rho_l, double u_l, double tau_l, double u_r, double A, double* speeds, size_t* count)
{
    return guarded([&] {
        need(speeds, "speeds");
        need(count, "count");
        *count = 0;
        const colombeau::State left{rho_l, u_l, tau_l};
        left.validate();
        const auto sols = colombeau::solve_shock(left, u_r, A, colombeau::Formulation::AllWeak);
        for (const auto& s : sols)
            speeds[(*count)++] = s.c;
    });
}

const char* const* cb_command_names(void)
{
    static const char* const names[] = {"demo-minus-one-sixth", "schwartz", "classify", "pair", "riemann",
                                        "simulate", nullptr};
    return names;
}

cb_status cb_run_command(const char* command, const char* config_json, char** report_json, int* passed)
{
    return guarded([&] {
        need(command, "command");
        need(report_json, "report_json");
        need(passed, "passed");
        *report_json = nullptr;
        *passed = 0;
        colombeau::Json config = colombeau::Json::object();
        if (config_json && *config_json)
            config = colombeau::Json::parse(config_json);
        const auto r = colombeau::run_command(command, config);
        *report_json = copy_string(colombeau::dump17(r.report, 2));
        *passed = r.passed ? 1 : 0;
    });
}

}  // extern "C"
