#include "colombeau/colombeau.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kPassed = 0, kFailed = 1, kBadInput = 2, kComputation = 3 };

struct Options {
    std::string config_file;
    std::vector<std::string> profiles;
    std::string ladder;
    std::string battery_file;
    std::string out;
    std::string format = "table";
    std::optional<double> tolerance;

    // command specific
    std::vector<double> eps;
    std::vector<int> powers;
    std::string expr;
    std::string expr2;
    std::string test;
    std::string interval;
    std::optional<int> deriv_order;
    std::optional<int> max_deriv;
    std::string left;
    std::optional<double> u_r;
    std::string mode;
    std::vector<double> A;
    std::optional<int> root;
    std::optional<long> cells;
    std::string domain;
    std::optional<double> x0;
    std::optional<double> end_time;
    std::optional<double> cfl;
    std::string scheme;
    std::optional<double> theta;
    std::optional<int> stride;
    std::optional<double> t_min;
};

Json read_json_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot read " + path);
    return Json::parse(is);
}

std::vector<double> split_numbers(const std::string& s, char sep)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size())
            throw std::invalid_argument("bad number '" + item + "'");
    }
    return out;
}

Json expression_value(const std::string& text)
{
    if (!text.empty() && text.front() == '{')
        return Json::parse(text);
    return text;
}

Json build_config(const std::string& command, const Options& o)
{
    Json cfg = o.config_file.empty() ? Json::object() : read_json_file(o.config_file);
    if (!cfg.is_object())
        throw std::invalid_argument("config file must hold a JSON object");
    if (o.profiles.size() == 1)
        cfg["profile"] = o.profiles.front();
    else if (!o.profiles.empty())
        cfg["profile"] = o.profiles;
    if (!o.ladder.empty())
        cfg["ladder"] = o.ladder;
    if (!o.battery_file.empty())
        cfg["battery"] = o.battery_file == "default" ? Json("default") : read_json_file(o.battery_file);
    if (!o.out.empty())
        cfg["out"] = o.out;
    if (o.tolerance)
        cfg["tolerance"] = *o.tolerance;
    if (!o.eps.empty())
        cfg["eps"] = o.eps;
    if (!o.powers.empty())
        cfg["powers"] = o.powers;
    if (!o.expr.empty())
        cfg["expr"] = expression_value(o.expr);
    if (!o.expr2.empty())
        cfg["expr2"] = expression_value(o.expr2);
    if (!o.test.empty())
        cfg["test"] = o.test;
    if (!o.interval.empty())
        cfg["interval"] = split_numbers(o.interval, ':');
    if (o.deriv_order)
        cfg["deriv_order"] = *o.deriv_order;
    if (o.max_deriv)
        cfg["max_deriv"] = *o.max_deriv;
    if (!o.left.empty()) {
        const auto v = split_numbers(o.left, ',');
        if (v.size() != 3)
            throw std::invalid_argument("--left takes rho,u,tau");
        cfg["left"] = {{"rho", v[0]}, {"u", v[1]}, {"tau", v[2]}};
    }
    if (o.u_r)
        cfg["u_r"] = *o.u_r;
    if (!o.mode.empty())
        cfg["mode"] = o.mode;
    if (!o.A.empty())
        cfg["A"] = o.A;
    if (o.root)
        cfg["root"] = *o.root;
    if (o.cells)
        cfg["cells"] = *o.cells;
    if (!o.domain.empty())
        cfg["domain"] = split_numbers(o.domain, ':');
    if (o.x0)
        cfg["x0"] = *o.x0;
    if (o.end_time)
        cfg["end_time"] = *o.end_time;
    if (o.cfl)
        cfg["cfl"] = *o.cfl;
    if (!o.scheme.empty())
        cfg["scheme"] = o.scheme;
    if (o.theta)
        cfg["theta"] = *o.theta;
    if (o.stride)
        cfg["snapshot_stride"] = *o.stride;
    if (o.t_min)
        cfg["t_min"] = *o.t_min;
    cfg["command"] = command;
    return cfg;
}

std::string cell(const Json& v, bool full_precision)
{
    char buf[64];
    if (v.is_number_float()) {
        std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6g", v.get<double>());
        return buf;
    }
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

void print_csv(const Json& table)
{
    const auto& cols = table["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i)
        std::cout << (i ? "," : "") << cols[i].get<std::string>();
    std::cout << '\n';
    for (const auto& row : table["rows"]) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << cell(row[i], true);
        std::cout << '\n';
    }
}

void print_table(const Json& report)
{
    std::cout << report["command"].get<std::string>() << ": " << (report["passed"].get<bool>() ? "PASS" : "FAIL")
              << '\n';
    for (const char* key : {"triple", "max_abs_deviation", "verdict", "classification", "moderate", "null",
                            "leading_speed_spread", "relative_error", "note"}) {
        if (report.contains(key))
            std::cout << "  " << key << ": " << cell(report[key], false) << '\n';
    }
    if (report.contains("warnings"))
        for (const auto& w : report["warnings"])
            std::cout << "  warning: " << w.get<std::string>() << '\n';

    const auto& table = report["table"];
    const auto& cols = table["columns"];
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
        width[i] = cols[i].get<std::string>().size();
    for (const auto& row : table["rows"]) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell(row[i], false));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            std::cout << (i ? "  " : "") << line[i];
            if (i + 1 < line.size())
                std::cout << std::string(width[i] - line[i].size(), ' ');
        }
        std::cout << '\n';
    };
    std::vector<std::string> head;
    for (const auto& c : cols)
        head.push_back(c.get<std::string>());
    emit(head);
    for (const auto& line : cells)
        emit(line);
}

int exit_for(cb_status s)
{
    switch (s) {
    case CB_INVALID_ARGUMENT:
    case CB_PARSE:
    case CB_IO:
        return kBadInput;
    default:
        return kComputation;
    }
}

int run(const std::string& command, const Options& o)
{
    std::string config_text;
    try {
        config_text = build_config(command, o).dump();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    char* report = nullptr;
    int passed = 0;
    const cb_status s = cb_run_command(command.c_str(), config_text.c_str(), &report, &passed);
    if (s != CB_OK) {
        std::cerr << "error (" << cb_status_name(s) << "): " << cb_last_error() << '\n';
        return exit_for(s);
    }
    const std::string text(report);
    cb_string_free(report);
    if (o.format == "json") {
        std::cout << text << '\n';
    } else {
        const auto j = Json::parse(text);
        if (o.format == "csv")
            print_csv(j["table"]);
        else
            print_table(j);
    }
    return passed ? kPassed : kFailed;
}

void common_flags(CLI::App* sub, Options& o, bool multi_profile, bool battery, bool tolerance)
{
    sub->add_option("--config", o.config_file, "JSON run config; flags override its keys")->check(CLI::ExistingFile);
    if (multi_profile)
        sub->add_option("--profile", o.profiles, "profile name, repeatable (bump, bump-squared, bump-skewed, name^n)");
    else
        sub->add_option("--profile", o.profiles, "profile name")->expected(1);
    sub->add_option("--ladder", o.ladder, "eps ladder k_min:k_max, eps = 2^-k");
    if (battery)
        sub->add_option("--battery", o.battery_file, "test-function battery JSON file, or 'default'");
    sub->add_option("--out", o.out, "output directory for report and CSV files");
    sub->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"csv", "json", "table"}));
    if (tolerance)
        sub->add_option("--tolerance", o.tolerance, "pass tolerance");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized functions, jump conditions and shock simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cb_version()));
    Options o;

    auto* demo = app.add_subcommand("demo-minus-one-sixth", "int (H^2 - H) H' dx = -1/6 across profiles and eps");
    common_flags(demo, o, true, false, true);
    demo->add_option("--eps", o.eps, "explicit eps values instead of a ladder");

    auto* schwartz = app.add_subcommand("schwartz", "association checks 2HH' ~ H', 3H^2H' ~ H', HH' ~ H^2H'");
    common_flags(schwartz, o, false, true, false);
    schwartz->add_option("--powers", o.powers, "N for the extra checks H^N ~ H");

    auto* classify = app.add_subcommand("classify", "moderateness, null, sup-growth and association tests");
    common_flags(classify, o, false, true, false);
    classify->add_option("--expr", o.expr, "expression tree JSON or heaviside|dirac[^N]");
    classify->add_option("--expr2", o.expr2, "second expression for --test associated");
    classify->add_option("--test", o.test, "test to run")
        ->check(CLI::IsMember({"sup", "moderate", "null", "associated", "integral"}));
    classify->add_option("--interval", o.interval, "sup interval a:b");
    classify->add_option("--deriv-order", o.deriv_order, "derivative order for --test sup");
    classify->add_option("--max-deriv", o.max_deriv, "highest derivative for --test moderate");

    auto* pair = app.add_subcommand("pair", "ladders of <g, phi> over the battery");
    common_flags(pair, o, false, true, false);
    pair->add_option("--expr", o.expr, "expression tree JSON or heaviside|dirac[^N]");

    auto* riemann = app.add_subcommand("riemann", "jump speeds and travelling-wave validation");
    common_flags(riemann, o, true, true, false);
    riemann->add_option("--left", o.left, "left state rho,u,tau");
    riemann->add_option("--ur", o.u_r, "right velocity");
    riemann->add_option("--mode", o.mode, "formulation")->check(CLI::IsMember({"mixed", "all-weak", "no-strong"}));
    riemann->add_option("--A", o.A, "product constants for all-weak, repeatable");

    auto* simulate = app.add_subcommand("simulate", "finite-volume Riemann run and shock-speed measurement");
    simulate->add_option("--config", o.config_file, "JSON run config; flags override its keys")
        ->check(CLI::ExistingFile);
    simulate->add_option("--out", o.out, "directory for snapshot CSVs and manifest.json");
    simulate->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"csv", "json", "table"}));
    simulate->add_option("--tolerance", o.tolerance, "relative speed tolerance");
    simulate->add_option("--left", o.left, "left state rho,u,tau");
    simulate->add_option("--ur", o.u_r, "right velocity");
    simulate->add_option("--root", o.root, "index of the admissible root, largest speed first");
    simulate->add_option("--cells", o.cells, "number of cells");
    simulate->add_option("--domain", o.domain, "domain a:b");
    simulate->add_option("--x0", o.x0, "initial jump position");
    simulate->add_option("--end-time", o.end_time, "final time");
    simulate->add_option("--cfl", o.cfl, "CFL number");
    simulate->add_option("--scheme", o.scheme, "tau-equation discretization")
        ->check(CLI::IsMember({"kinetic", "path"}));
    simulate->add_option("--theta", o.theta, "path parameter for --scheme path");
    simulate->add_option("--stride", o.stride, "steps between snapshots");
    simulate->add_option("--t-min", o.t_min, "first snapshot time used for the speed fit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }

    for (auto* sub : app.get_subcommands())
        return run(sub->get_name(), o);
    return kBadInput;
}
