#include "commands.hpp"

#include "colombeau/classify.hpp"
#include "colombeau/error.hpp"
#include "colombeau/fvm.hpp"
#include "colombeau/shock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace colombeau {

namespace {

namespace fs = std::filesystem;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    Json to_json() const
    {
        Json j;
        j["columns"] = columns;
        Json rs = Json::array();
        for (const auto& r : rows)
            rs.push_back(r);
        j["rows"] = std::move(rs);
        return j;
    }
};

std::string cell_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_float())
        return format17(v.get<double>());
    if (v.is_null())
        return "";
    return v.dump();
}

void write_table_csv(const fs::path& path, const Table& t)
{
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot write " + path.string());
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << cell_text(r[i]);
        os << '\n';
    }
    if (!os)
        throw IoError("write failed: " + path.string());
}

void write_json_file(const fs::path& path, const Json& j)
{
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot write " + path.string());
    os << dump17(j, 2) << '\n';
    if (!os)
        throw IoError("write failed: " + path.string());
}

fs::path prepare_out(const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir + "': " + ec.message());
    return fs::path(dir);
}

// ---- config access ---------------------------------------------------------

class Config {
public:
    Config(std::string command, const Json& j, std::set<std::string> allowed) : command_(std::move(command)), j_(j)
    {
        if (j_.is_null())
            j_ = Json::object();
        if (!j_.is_object())
            throw InvalidArgument(command_ + ": config must be a JSON object");
        allowed.insert({"command", "format", "out"});
        for (const auto& [key, value] : j_.items()) {
            if (!allowed.count(key))
                throw InvalidArgument(command_ + ": unknown config key '" + key + "'");
        }
        if (has("command") && (!j_["command"].is_string() || j_["command"].get<std::string>() != command_))
            throw InvalidArgument(command_ + ": config 'command' does not match");
        if (has("format")) {
            const auto f = string("format", "");
            if (f != "csv" && f != "json" && f != "table")
                throw InvalidArgument(command_ + ": format must be csv, json or table");
        }
    }

    bool has(const std::string& key) const { return j_.contains(key) && !j_[key].is_null(); }
    const Json& at(const std::string& key) const { return j_[key]; }

    [[noreturn]] void fail(const std::string& key, const std::string& what) const
    {
        throw InvalidArgument(command_ + ": '" + key + "' " + what);
    }

    double number(const std::string& key, double fallback) const
    {
        if (!has(key))
            return fallback;
        return as_number(j_[key], key);
    }

    double as_number(const Json& v, const std::string& key) const
    {
        if (!v.is_number())
            fail(key, "must be a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            fail(key, "must be finite");
        return d;
    }

    long integer(const std::string& key, long fallback) const
    {
        if (!has(key))
            return fallback;
        if (!j_[key].is_number_integer())
            fail(key, "must be an integer");
        return j_[key].get<long>();
    }

    std::string string(const std::string& key, const std::string& fallback) const
    {
        if (!has(key))
            return fallback;
        if (!j_[key].is_string())
            fail(key, "must be a string");
        return j_[key].get<std::string>();
    }

    std::vector<double> numbers(const std::string& key, std::vector<double> fallback) const
    {
        if (!has(key))
            return fallback;
        const Json& v = j_[key];
        if (v.is_number())
            return {as_number(v, key)};
        if (!v.is_array() || v.empty())
            fail(key, "must be a number or a non-empty array of numbers");
        std::vector<double> out;
        for (const auto& e : v)
            out.push_back(as_number(e, key));
        return out;
    }

    std::pair<double, double> interval(const std::string& key, std::pair<double, double> fallback) const
    {
        if (!has(key))
            return fallback;
        const auto v = numbers(key, {});
        if (v.size() != 2 || !(v[0] < v[1]))
            fail(key, "must be [a, b] with a < b");
        return {v[0], v[1]};
    }

    std::optional<std::string> out() const
    {
        if (!has("out"))
            return std::nullopt;
        auto s = string("out", "");
        if (s.empty())
            fail("out", "must be a non-empty path");
        return s;
    }

    std::vector<ProfilePtr> profiles(const std::vector<ProfilePtr>& fallback) const
    {
        if (!has("profile"))
            return fallback;
        const Json& v = j_["profile"];
        std::vector<ProfilePtr> out;
        if (v.is_string()) {
            out.push_back(find_profile(v.get<std::string>()));
        } else if (v.is_array() && !v.empty()) {
            for (const auto& e : v) {
                if (!e.is_string())
                    fail("profile", "entries must be profile names");
                out.push_back(find_profile(e.get<std::string>()));
            }
        } else {
            fail("profile", "must be a profile name or a non-empty array of names");
        }
        return out;
    }

    ProfilePtr profile() const
    {
        const auto ps = profiles({builtin_profiles().front()});
        if (ps.size() != 1)
            fail("profile", "takes exactly one profile for this command");
        return ps.front();
    }

    EpsLadder ladder() const
    {
        EpsLadder l;
        if (!has("ladder"))
            return l;
        const Json& v = j_["ladder"];
        if (v.is_string()) {
            const auto s = v.get<std::string>();
            const auto colon = s.find(':');
            if (colon == std::string::npos)
                fail("ladder", "must look like k_min:k_max");
            try {
                std::size_t used = 0;
                l.k_min = std::stoi(s.substr(0, colon), &used);
                if (used != colon)
                    fail("ladder", "must look like k_min:k_max");
                const auto tail = s.substr(colon + 1);
                l.k_max = std::stoi(tail, &used);
                if (used != tail.size())
                    fail("ladder", "must look like k_min:k_max");
            } catch (const std::logic_error&) {
                fail("ladder", "must look like k_min:k_max");
            }
        } else if (v.is_object()) {
            for (const auto& [key, value] : v.items()) {
                if (key != "k_min" && key != "k_max")
                    fail("ladder", "has unknown key '" + key + "'");
                if (!value.is_number_integer())
                    fail("ladder", "bounds must be integers");
            }
            l.k_min = v.value("k_min", l.k_min);
            l.k_max = v.value("k_max", l.k_max);
        } else {
            fail("ladder", "must be \"k_min:k_max\" or {\"k_min\", \"k_max\"}");
        }
        l.validate();
        return l;
    }

    std::vector<TestFunction> battery() const
    {
        if (!has("battery"))
            return default_battery();
        const Json& v = j_["battery"];
        if (v.is_string() && v.get<std::string>() == "default")
            return default_battery();
        if (!v.is_array() || v.empty())
            fail("battery", "must be \"default\" or a non-empty array of test functions");
        std::vector<TestFunction> out;
        for (const auto& e : v) {
            if (!e.is_object())
                fail("battery", "entries must be objects");
            TestFunction phi;
            for (const auto& [key, value] : e.items()) {
                if (key == "center")
                    phi.center = as_number(value, "battery.center");
                else if (key == "halfwidth")
                    phi.halfwidth = as_number(value, "battery.halfwidth");
                else if (key == "amplitude")
                    phi.amplitude = as_number(value, "battery.amplitude");
                else
                    fail("battery", "entry has unknown key '" + key + "'");
            }
            phi.validate();
            out.push_back(phi);
        }
        return out;
    }

    QuadratureConfig quadrature() const
    {
        QuadratureConfig q;
        if (!has("quadrature"))
            return q;
        const Json& v = j_["quadrature"];
        if (!v.is_object())
            fail("quadrature", "must be an object");
        for (const auto& [key, value] : v.items()) {
            if (key == "abs_tol")
                q.abs_tol = as_number(value, "quadrature.abs_tol");
            else if (key == "rel_tol")
                q.rel_tol = as_number(value, "quadrature.rel_tol");
            else if (key == "max_subdivisions") {
                if (!value.is_number_integer())
                    fail("quadrature", "max_subdivisions must be an integer");
                q.max_subdivisions = value.get<int>();
            } else
                fail("quadrature", "has unknown key '" + key + "'");
        }
        q.validate();
        return q;
    }

    State state(const std::string& key, State fallback) const
    {
        if (!has(key))
            return fallback;
        const Json& v = j_[key];
        State s = fallback;
        if (v.is_array()) {
            if (v.size() != 3)
                fail(key, "must be [rho, u, tau]");
            s = {as_number(v[0], key), as_number(v[1], key), as_number(v[2], key)};
        } else if (v.is_object()) {
            for (const auto& [k, value] : v.items()) {
                if (k == "rho")
                    s.rho = as_number(value, key + ".rho");
                else if (k == "u")
                    s.u = as_number(value, key + ".u");
                else if (k == "tau")
                    s.tau = as_number(value, key + ".tau");
                else
                    fail(key, "has unknown key '" + k + "'");
            }
        } else {
            fail(key, "must be {\"rho\", \"u\", \"tau\"} or [rho, u, tau]");
        }
        s.validate();
        return s;
    }

    GenFunction expression(const std::string& key, ProfilePtr profile) const
    {
        if (!has(key))
            fail(key, "is required");
        const Json& v = j_[key];
        if (v.is_object())
            return genfun_from_json(v);
        if (!v.is_string())
            fail(key, "must be an expression tree or a shorthand name");
        return shorthand(v.get<std::string>(), std::move(profile), key);
    }

private:
    GenFunction shorthand(const std::string& text, ProfilePtr profile, const std::string& key) const
    {
        std::string base = text;
        int power = 1;
        const auto caret = text.find('^');
        if (caret != std::string::npos) {
            base = text.substr(0, caret);
            try {
                std::size_t used = 0;
                power = std::stoi(text.substr(caret + 1), &used);
                if (used != text.size() - caret - 1 || power < 1)
                    throw std::invalid_argument("power");
            } catch (const std::logic_error&) {
                fail(key, "power in '" + text + "' must be a positive integer");
            }
        }
        GenFunction g;
        if (base == "heaviside" || base == "H")
            g = heaviside(profile);
        else if (base == "dirac" || base == "delta")
            g = dirac(profile);
        else
            fail(key, "unknown shorthand '" + text + "' (heaviside, dirac, optionally ^N)");
        return ipow(g, power);
    }

    std::string command_;
    Json j_;
};

Json profile_names(const std::vector<ProfilePtr>& ps)
{
    Json j = Json::array();
    for (const auto& p : ps)
        j.push_back(p->name());
    return j;
}

Json ladder_json(const EpsLadder& l)
{
    Json j;
    j["k_min"] = l.k_min;
    j["k_max"] = l.k_max;
    return j;
}

Json battery_json(const std::vector<TestFunction>& b)
{
    Json j = Json::array();
    for (const auto& phi : b)
        j.push_back(to_json(phi));
    return j;
}

Json quadrature_json(const QuadratureConfig& q)
{
    Json j;
    j["abs_tol"] = q.abs_tol;
    j["rel_tol"] = q.rel_tol;
    j["max_subdivisions"] = q.max_subdivisions;
    return j;
}

Json header(const std::string& command)
{
    Json j;
    j["command"] = command;
    return j;
}

void finish(CommandResult& r, const Table& t)
{
    r.report["passed"] = r.passed;
    r.report["table"] = t.to_json();
}

// ---- demo-minus-one-sixth ----------------------------------------------------

CommandResult cmd_demo(const Json& raw)
{
    const Config cfg("demo-minus-one-sixth", raw, {"profile", "ladder", "eps", "tolerance", "quadrature"});
    const auto profiles = cfg.profiles(builtin_profiles());
    const double tol = cfg.number("tolerance", 1e-10);
    if (!(tol > 0.0))
        cfg.fail("tolerance", "must be positive");
    const auto quad = cfg.quadrature();
    std::vector<double> eps;
    if (cfg.has("eps")) {
        if (cfg.has("ladder"))
            cfg.fail("eps", "and 'ladder' are mutually exclusive");
        eps = cfg.numbers("eps", {});
        for (double e : eps)
            if (!(e > 0.0 && e < 1.0))
                cfg.fail("eps", "values must lie in (0, 1)");
    } else {
        eps = cfg.ladder().epsilons();
    }

    constexpr double target = -1.0 / 6.0;
    CommandResult r;
    r.report = header("demo-minus-one-sixth");
    r.report["expression"] = "(H^2 - H) H'";
    r.report["target"] = target;
    r.report["tolerance"] = tol;
    r.report["profiles"] = profile_names(profiles);
    r.report["eps"] = eps;
    r.report["quadrature"] = quadrature_json(quad);

    Table t{{"profile", "eps", "value", "error_estimate", "deviation", "pass"}, {}};
    Json results = Json::array();
    double worst = 0.0;
    r.passed = true;
    for (const auto& p : profiles) {
        const auto H = heaviside(p);
        const auto g = (H * H - H) * differentiate(H);
        for (double e : eps) {
            const auto v = integrate_total(g, e, quad);
            const double dev = v.value - target;
            const bool ok = std::abs(dev) <= tol;
            r.passed = r.passed && ok;
            worst = std::max(worst, std::abs(dev));
            Json row;
            row["profile"] = p->name();
            row["eps"] = e;
            row["value"] = v.value;
            row["error_estimate"] = v.error;
            row["deviation"] = dev;
            row["pass"] = ok;
            results.push_back(row);
            t.rows.push_back({p->name(), e, v.value, v.error, dev, ok});
        }
    }
    r.report["results"] = std::move(results);
    r.report["max_abs_deviation"] = worst;
    finish(r, t);
    if (auto out = cfg.out()) {
        const auto dir = prepare_out(*out);
        write_table_csv(dir / "minus_one_sixth.csv", t);
        write_json_file(dir / "report.json", r.report);
    }
    return r;
}

// ---- schwartz ------------------------------------------------------------------

struct Check {
    std::string name;
    GenFunction lhs;
    GenFunction rhs;
    bool expected;
};

CommandResult cmd_schwartz(const Json& raw)
{
    const Config cfg("schwartz", raw, {"profile", "ladder", "battery", "powers", "quadrature"});
    const auto profile = cfg.profile();
    const auto ladder = cfg.ladder();
    const auto battery = cfg.battery();
    const auto quad = cfg.quadrature();
    std::vector<int> powers{2, 3, 4, 5};
    if (cfg.has("powers")) {
        powers.clear();
        const bool none = cfg.at("powers").is_array() && cfg.at("powers").empty();
        for (double p : none ? std::vector<double>{} : cfg.numbers("powers", {})) {
            if (p != std::floor(p) || p < 2 || p > 64)
                cfg.fail("powers", "entries must be integers in [2, 64]");
            powers.push_back(static_cast<int>(p));
        }
    }

    const auto H = heaviside(profile);
    const auto dH = differentiate(H);
    std::vector<Check> checks{
        {"2 H H' ~ H'", 2.0 * H * dH, dH, true},
        {"3 H^2 H' ~ H'", 3.0 * H * H * dH, dH, true},
        {"H H' ~ H^2 H'", H * dH, H * H * dH, false},
    };
    for (int n : powers)
        checks.push_back({"H^" + std::to_string(n) + " ~ H", ipow(H, n), H, true});

    const Thresholds th{};
    CommandResult r;
    r.report = header("schwartz");
    r.report["profile"] = profile->name();
    r.report["ladder"] = ladder_json(ladder);
    r.report["battery"] = battery_json(battery);
    r.report["thresholds"] = to_json(th);
    r.report["quadrature"] = quadrature_json(quad);

    Table t{{"check", "expected", "verdict", "test", "center", "halfwidth", "classification", "slope", "r_squared"},
            {}};
    Json checks_json = Json::array();
    Json warnings = Json::array();
    r.passed = true;
    for (const auto& c : checks) {
        const auto rep = associated(c.lhs, c.rhs, battery, ladder, th, quad);
        const bool determined = rep.verdict != Verdict::Undetermined;
        const bool matches = determined && ((rep.verdict == Verdict::True) == c.expected);
        r.passed = r.passed && matches;
        Json cj;
        cj["check"] = c.name;
        cj["expected"] = c.expected;
        cj["matches"] = matches;
        cj["report"] = to_json(rep);
        checks_json.push_back(cj);
        if (rep.battery_warning)
            warnings.push_back(c.name + ": " + rep.warning);
        for (std::size_t i = 0; i < rep.per_test.size(); ++i) {
            const auto& f = rep.per_test[i];
            t.rows.push_back({c.name, c.expected, to_string(rep.verdict), static_cast<int>(i), rep.battery[i].center,
                              rep.battery[i].halfwidth, to_string(f.classification), f.slope, f.r_squared});
        }
    }
    Json verdicts = Json::array();
    for (std::size_t i = 0; i < 3; ++i)
        verdicts.push_back(checks_json[i]["report"]["associated"]);
    r.report["triple"] = verdicts;
    r.report["checks"] = std::move(checks_json);
    r.report["warnings"] = std::move(warnings);
    finish(r, t);
    if (auto out = cfg.out()) {
        const auto dir = prepare_out(*out);
        write_table_csv(dir / "schwartz.csv", t);
        write_json_file(dir / "report.json", r.report);
    }
    return r;
}

// ---- classify --------------------------------------------------------------------

void fit_rows(Table& t, const std::string& label, const GrowthFit& f)
{
    for (const auto& p : f.points)
        t.rows.push_back({label, p.eps, p.value, p.error, to_string(f.classification), f.slope});
}

CommandResult cmd_classify(const Json& raw)
{
    const Config cfg("classify", raw,
                     {"expr", "expr2", "test", "profile", "interval", "deriv_order", "max_deriv", "ladder", "battery",
                      "quadrature"});
    const auto profile = cfg.profile();
    const auto g = cfg.expression("expr", profile);
    const auto test = cfg.string("test", "moderate");
    if (test != "associated" && (cfg.has("expr2") || cfg.has("battery")))
        throw InvalidArgument("classify: 'expr2' and 'battery' apply to test 'associated' only");
    const auto ladder = cfg.ladder();
    const auto [a, b] = cfg.interval("interval", {-2.0, 2.0});
    const Thresholds th{};

    CommandResult r;
    r.report = header("classify");
    r.report["test"] = test;
    r.report["expr"] = to_json(g);
    r.report["interval"] = Json::array({a, b});
    r.report["ladder"] = ladder_json(ladder);
    r.report["thresholds"] = to_json(th);
    Table t{{"fit", "eps", "value", "error_estimate", "classification", "slope"}, {}};

    if (test == "sup") {
        const long n = cfg.integer("deriv_order", 0);
        if (n < 0 || n > 8)
            cfg.fail("deriv_order", "must lie in [0, 8]");
        const auto fit = sup_order(g, a, b, static_cast<int>(n), ladder, th);
        r.report["deriv_order"] = n;
        r.report["result"] = to_json(fit);
        r.report["classification"] = to_string(fit.classification);
        r.passed = fit.classification != Classification::Undetermined;
        fit_rows(t, "sup d^" + std::to_string(n), fit);
    } else if (test == "moderate") {
        const long n = cfg.integer("max_deriv", 2);
        if (n < 0 || n > 8)
            cfg.fail("max_deriv", "must lie in [0, 8]");
        const auto rep = is_moderate(g, a, b, static_cast<int>(n), ladder, th);
        r.report["max_deriv"] = n;
        r.report["result"] = to_json(rep);
        r.report["moderate"] = rep.moderate;
        r.passed = rep.verified;
        for (std::size_t k = 0; k < rep.per_order.size(); ++k)
            fit_rows(t, "sup d^" + std::to_string(k), rep.per_order[k]);
    } else if (test == "null") {
        const auto rep = is_null_candidate(g, a, b, ladder, th);
        r.report["result"] = to_json(rep);
        r.report["null"] = rep.null;
        r.passed = rep.determined;
        fit_rows(t, "sup", rep.fit);
    } else if (test == "associated") {
        const auto g2 = cfg.has("expr2") ? cfg.expression("expr2", profile) : GenFunction{};
        const auto battery = cfg.battery();
        const auto quad = cfg.quadrature();
        const auto rep = associated(g, g2, battery, ladder, th, quad);
        r.report["expr2"] = to_json(g2);
        r.report["quadrature"] = quadrature_json(quad);
        r.report["result"] = to_json(rep);
        r.report["verdict"] = to_string(rep.verdict);
        r.passed = rep.verdict != Verdict::Undetermined;
        for (std::size_t i = 0; i < rep.per_test.size(); ++i)
            fit_rows(t, "phi " + std::to_string(i), rep.per_test[i]);
    } else if (test == "integral") {
        const auto quad = cfg.quadrature();
        const auto fit = growth_order(gen_integrate_total(g, quad), ladder, th);
        r.report["quadrature"] = quadrature_json(quad);
        r.report["result"] = to_json(fit);
        r.report["classification"] = to_string(fit.classification);
        r.passed = fit.classification != Classification::Undetermined;
        fit_rows(t, "integral", fit);
    } else {
        cfg.fail("test", "must be one of sup, moderate, null, associated, integral");
    }
    finish(r, t);
    if (auto out = cfg.out()) {
        const auto dir = prepare_out(*out);
        write_table_csv(dir / "classify.csv", t);
        write_json_file(dir / "report.json", r.report);
    }
    return r;
}

// ---- pair ------------------------------------------------------------------------

CommandResult cmd_pair(const Json& raw)
{
    const Config cfg("pair", raw, {"expr", "profile", "ladder", "battery", "quadrature"});
    const auto profile = cfg.profile();
    const auto g = cfg.expression("expr", profile);
    const auto ladder = cfg.ladder();
    const auto battery = cfg.battery();
    const auto quad = cfg.quadrature();
    const Thresholds th{};

    CommandResult r;
    r.report = header("pair");
    r.report["expr"] = to_json(g);
    r.report["ladder"] = ladder_json(ladder);
    r.report["battery"] = battery_json(battery);
    r.report["thresholds"] = to_json(th);
    r.report["quadrature"] = quadrature_json(quad);

    Table t{{"test", "eps", "value", "error_estimate"}, {}};
    Json fits = Json::array();
    std::vector<std::vector<LadderPoint>> ladders;
    r.passed = true;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        auto fit = classify_ladder(sample_ladder(gen_pair(g, battery[i], quad), ladder), th);
        r.passed = r.passed && fit.classification != Classification::Undetermined;
        for (const auto& p : fit.points)
            t.rows.push_back({static_cast<int>(i), p.eps, p.value, p.error});
        ladders.push_back(fit.points);
        Json fj;
        fj["test"] = to_json(battery[i]);
        fj["fit"] = to_json(fit);
        fits.push_back(std::move(fj));
    }
    r.report["pairings"] = std::move(fits);
    finish(r, t);
    if (auto out = cfg.out()) {
        const auto dir = prepare_out(*out);
        for (std::size_t i = 0; i < ladders.size(); ++i) {
            const auto path = dir / ("pair_" + std::to_string(i) + ".csv");
            std::ofstream os(path);
            if (!os)
                throw IoError("cannot write " + path.string());
            write_ladder_csv(os, ladders[i]);
        }
        write_json_file(dir / "report.json", r.report);
    }
    return r;
}

// ---- riemann -----------------------------------------------------------------------

const State kDefaultLeft{1.0, 0.0, 0.0};
constexpr double kDefaultUr = -1.0;

Json jump_defects(const ShockSolution& s)
{
    const auto& l = s.left;
    const auto& rr = s.right;
    Json j;
    j["mass"] = s.c * (rr.rho - l.rho) - (rr.rho * rr.u - l.rho * l.u);
    j["momentum"] = s.c * (rr.rho * rr.u - l.rho * l.u) - (rr.rho * rr.u * rr.u - l.rho * l.u * l.u) + (rr.tau - l.tau);
    const double du = rr.u - l.u;
    j["tau"] = (l.u + s.A * du - s.c) * (rr.tau - l.tau) - du;
    return j;
}

void solution_row(Table& t, const WaveValidation& v)
{
    const auto& s = v.solution;
    t.rows.push_back({to_string(s.formulation), s.A, v.profile_u, v.profile_tau, s.c, s.m, s.right.rho, s.right.u,
                      s.right.tau, v.strong_eq12, v.validated});
}

CommandResult cmd_riemann(const Json& raw)
{
    const Config cfg("riemann", raw, {"left", "u_r", "mode", "A", "profile", "ladder", "battery", "quadrature"});
    const auto left = cfg.state("left", kDefaultLeft);
    const double u_r = cfg.number("u_r", kDefaultUr);
    const auto mode = cfg.string("mode", "mixed");
    ValidationConfig vc;
    vc.ladder = cfg.ladder();
    vc.battery = cfg.battery();
    vc.quadrature = cfg.quadrature();

    CommandResult r;
    r.report = header("riemann");
    r.report["mode"] = mode;
    r.report["left"] = to_json(left);
    r.report["u_r"] = u_r;
    r.report["ladder"] = ladder_json(vc.ladder);
    r.report["battery"] = battery_json(vc.battery);
    r.report["thresholds"] = to_json(vc.thresholds);
    r.report["quadrature"] = quadrature_json(vc.quadrature);
    Table t{{"formulation", "A", "profile_u", "profile_tau", "c", "m", "rho_r", "u_r", "tau_r", "strong_eq12",
             "validated"},
            {}};

    if (u_r == left.u)
        throw InvalidArgument("riemann: u_r equals u_l; there is no jump to solve for");

    r.passed = true;
    if (mode == "mixed") {
        if (cfg.has("A"))
            cfg.fail("A", "applies to mode all-weak only (mixed fixes A = 1/2)");
        const auto profiles = cfg.profiles(builtin_profiles());
        const auto sols = solve_shock_mixed(left, u_r);
        Json sj = Json::array();
        for (const auto& s : sols) {
            Json e;
            e["solution"] = to_json(s);
            e["jump_defects"] = jump_defects(s);
            Json vals = Json::array();
            for (const auto& p : profiles) {
                const auto v = validate_solution(s, p, p, vc);
                r.passed = r.passed && v.validated && v.strong_eq12;
                vals.push_back(to_json(v));
                solution_row(t, v);
            }
            e["validations"] = std::move(vals);
            sj.push_back(std::move(e));
        }
        r.report["profiles"] = profile_names(profiles);
        r.report["solutions"] = std::move(sj);
    } else if (mode == "all-weak") {
        const auto As = cfg.numbers("A", {0.5, 2.0 / 3.0});
        const auto base = cfg.profile();
        const auto entries = demo_nonuniqueness(left, u_r, As, base, vc);
        Json ej = Json::array();
        Json speeds = Json::array();
        for (const auto& e : entries) {
            for (const auto& v : e.solutions) {
                r.passed = r.passed && v.validated;
                solution_row(t, v);
            }
            if (!e.solutions.empty()) {
                Json sp;
                sp["A"] = e.A;
                sp["c"] = e.solutions.front().solution.c;
                speeds.push_back(sp);
            }
            ej.push_back(to_json(e));
        }
        double spread = 0.0;
        for (const auto& x : speeds)
            for (const auto& y : speeds)
                spread = std::max(spread, std::abs(x["c"].get<double>() - y["c"].get<double>()));
        r.report["base_profile"] = base->name();
        r.report["entries"] = std::move(ej);
        r.report["leading_speeds"] = std::move(speeds);
        r.report["leading_speed_spread"] = spread;
    } else if (mode == "no-strong") {
        if (cfg.has("A") || cfg.has("profile"))
            throw InvalidArgument("riemann: mode no-strong uses the builtin profiles and A = 1/2");
        const auto rep = demo_no_strong_solution(left, u_r, vc);
        for (const auto& e : rep.entries) {
            const bool ok = !e.eq3_null && e.eq3_associated == Verdict::True;
            r.passed = r.passed && ok;
        }
        t.columns = {"profile", "c", "eq3_sup_classification", "eq3_sup_slope", "eq3_null", "eq3_associated",
                     "eq3_min_pair_slope"};
        for (const auto& e : rep.entries)
            t.rows.push_back({e.profile, e.c, to_string(e.eq3_sup.classification), e.eq3_sup.slope, e.eq3_null,
                              to_string(e.eq3_associated), e.eq3_min_pair_slope});
        r.report["result"] = to_json(rep);
    } else {
        cfg.fail("mode", "must be mixed, all-weak or no-strong");
    }
    finish(r, t);
    if (auto out = cfg.out()) {
        const auto dir = prepare_out(*out);
        write_table_csv(dir / "riemann.csv", t);
        write_json_file(dir / "report.json", r.report);
    }
    return r;
}

// ---- simulate ------------------------------------------------------------------------

CommandResult cmd_simulate(const Json& raw)
{
    const Config cfg("simulate", raw,
                     {"left", "u_r", "root", "cells", "domain", "x0", "end_time", "cfl", "scheme", "theta",
                      "snapshot_stride", "t_min", "tolerance", "max_steps"});
    const auto left = cfg.state("left", kDefaultLeft);
    const double u_r = cfg.number("u_r", kDefaultUr);
    const long cells = cfg.integer("cells", 400);
    const auto [a, b] = cfg.interval("domain", {-1.0, 1.0});
    const double x0 = cfg.number("x0", 0.0);
    if (!(x0 > a && x0 < b))
        cfg.fail("x0", "must lie inside the domain");
    if (cells < 10 || cells > 10'000'000)
        cfg.fail("cells", "must lie in [10, 1e7]");

    SimConfig sc;
    sc.end_time = cfg.number("end_time", sc.end_time);
    sc.cfl = cfg.number("cfl", sc.cfl);
    sc.path_theta = cfg.number("theta", sc.path_theta);
    sc.snapshot_stride = static_cast<int>(cfg.integer("snapshot_stride", sc.snapshot_stride));
    sc.max_steps = cfg.integer("max_steps", sc.max_steps);
    const auto scheme = cfg.string("scheme", "kinetic");
    if (scheme == "kinetic")
        sc.eq3 = Eq3Form::Kinetic;
    else if (scheme == "path")
        sc.eq3 = Eq3Form::Path;
    else
        cfg.fail("scheme", "must be kinetic or path");
    if (sc.eq3 == Eq3Form::Kinetic && cfg.has("theta"))
        cfg.fail("theta", "applies to scheme path only");
    sc.validate();
    const double t_min = cfg.number("t_min", 0.2 * sc.end_time);
    if (!(t_min >= 0.0 && t_min < sc.end_time))
        cfg.fail("t_min", "must lie in [0, end_time)");
    const double tol = cfg.number("tolerance", 0.02);
    if (!(tol > 0.0))
        cfg.fail("tolerance", "must be positive");

    const bool trivial = u_r == left.u;
    std::optional<ShockSolution> predicted;
    State right = left;
    if (!trivial) {
        const auto sols = solve_shock_mixed(left, u_r);
        const long root = cfg.integer("root", 0);
        if (root < 0 || root >= static_cast<long>(sols.size()))
            cfg.fail("root", "must index an admissible root (0.." + std::to_string(sols.size() - 1) + ")");
        predicted = sols[static_cast<std::size_t>(root)];
        right = predicted->right;
    } else if (cfg.has("root")) {
        cfg.fail("root", "has no meaning for a constant state");
    }

    const auto grid = riemann_grid(a, b, static_cast<std::size_t>(cells), x0, left, right);
    const double dx = grid.dx();
    const auto run_result = run(grid, sc);

    CommandResult r;
    r.report = header("simulate");
    Json setup;
    setup["left"] = to_json(left);
    setup["right"] = to_json(right);
    setup["cells"] = cells;
    setup["domain"] = Json::array({a, b});
    setup["x0"] = x0;
    setup["t_min"] = t_min;
    setup["tolerance"] = tol;
    setup["solver"] = to_json(sc);
    r.report["setup"] = std::move(setup);
    r.report["predicted"] = predicted ? to_json(*predicted) : Json(nullptr);
    r.report["steps"] = run_result.steps;
    r.report["final_time"] = run_result.final_time;
    r.report["max_mass_defect"] = run_result.max_mass_defect;
    r.report["max_momentum_defect"] = run_result.max_momentum_defect;
    r.report["snapshots"] = run_result.snapshots.size();

    Table t{{"quantity", "value"}, {}};
    r.passed = false;
    try {
        const auto m = measure_shock_speed(run_result.snapshots, a, dx, t_min);
        Json mj;
        mj["speed"] = m.speed;
        mj["intercept"] = m.intercept;
        mj["rms_residual"] = m.rms_residual;
        mj["std_error"] = m.std_error;
        mj["samples"] = m.samples;
        r.report["measured"] = mj;
        t.rows.push_back({"measured_speed", m.speed});
        t.rows.push_back({"speed_std_error", m.std_error});
        if (predicted) {
            const double rel = (m.speed - predicted->c) / std::abs(predicted->c);
            r.report["relative_error"] = rel;
            r.passed = std::abs(rel) <= tol;
            t.rows.push_back({"predicted_speed", predicted->c});
            t.rows.push_back({"relative_error", rel});
            const double final_pos = m.intercept + m.speed * run_result.final_time;
            const double half = 0.075 * (b - a);
            const auto win = max_overshoot(run_result.snapshots.back(), a, dx, final_pos - half, final_pos + half);
            Json ov;
            ov["window"] = Json::array({final_pos - half, final_pos + half});
            ov["rho"] = win.rho;
            ov["u"] = win.u;
            ov["tau"] = win.tau;
            r.report["overshoot_near_jump"] = ov;
            t.rows.push_back({"overshoot_rho", win.rho});
            t.rows.push_back({"overshoot_u", win.u});
            t.rows.push_back({"overshoot_tau", win.tau});
        }
    } catch (const NoJumpFound& e) {
        r.report["measured"] = nullptr;
        r.report["note"] = std::string("no jump found: ") + e.what();
        t.rows.push_back({"measured_speed", "no jump found"});
    }
    t.rows.push_back({"steps", run_result.steps});
    t.rows.push_back({"max_mass_defect", run_result.max_mass_defect});
    t.rows.push_back({"max_momentum_defect", run_result.max_momentum_defect});
    finish(r, t);

    if (auto out = cfg.out()) {
        const auto dir = prepare_out(*out);
        Json files = Json::array();
        for (std::size_t i = 0; i < run_result.snapshots.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "snapshot_%05zu.csv", i);
            std::ofstream os(dir / name);
            if (!os)
                throw IoError("cannot write " + (dir / name).string());
            write_snapshot_csv(os, run_result.snapshots[i], a, dx);
            Json f;
            f["file"] = name;
            f["time"] = run_result.snapshots[i].time;
            f["step"] = run_result.snapshots[i].step;
            files.push_back(std::move(f));
        }
        Json manifest = r.report;
        manifest.erase("table");
        manifest["snapshot_files"] = std::move(files);
        write_json_file(dir / "manifest.json", manifest);
    }
    return r;
}

using Handler = std::function<CommandResult(const Json&)>;

const std::map<std::string, Handler, std::less<>>& handlers()
{
    static const std::map<std::string, Handler, std::less<>> table{
        {"demo-minus-one-sixth", cmd_demo}, {"schwartz", cmd_schwartz}, {"classify", cmd_classify},
        {"pair", cmd_pair},                 {"riemann", cmd_riemann},   {"simulate", cmd_simulate},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"demo-minus-one-sixth", "schwartz", "classify",
                                                "pair",                 "riemann",  "simulate"};
    return names;
}

CommandResult run_command(std::string_view name, const Json& config)
{
    const auto& h = handlers();
    const auto it = h.find(name);
    if (it == h.end())
        throw InvalidArgument("unknown command '" + std::string(name) + "'");
    return it->second(config);
}

}  // namespace colombeau
