#include "colombeau/serialize.hpp"

#include "colombeau/error.hpp"

#include <cmath>
#include <cstdio>

namespace colombeau {

namespace {

const char* kind_name(NodeKind k)
{
    switch (k) {
    case NodeKind::Constant: return "const";
    case NodeKind::X: return "x";
    case NodeKind::Eps: return "eps";
    case NodeKind::Profile: return "profile";
    case NodeKind::Sum: return "add";
    case NodeKind::Product: return "mul";
    case NodeKind::Power: return "pow";
    case NodeKind::Negate: return "neg";
    case NodeKind::Sin: return "sin";
    case NodeKind::Cos: return "cos";
    case NodeKind::Exp: return "exp";
    }
    return "?";
}

Json node_json(const Node& n)
{
    Json j;
    j["kind"] = kind_name(n.kind);
    switch (n.kind) {
    case NodeKind::Constant:
        j["value"] = n.value;
        return j;
    case NodeKind::X:
    case NodeKind::Eps:
        return j;
    case NodeKind::Profile:
        j["profile"] = n.profile->name();
        j["order"] = n.order;
        break;
    case NodeKind::Power:
        j["exponent"] = n.order;
        if (n.certificate)
            j["certificate"] = Json::array({n.certificate->lo, n.certificate->hi});
        break;
    default:
        break;
    }
    Json kids = Json::array();
    for (const auto& c : n.children)
        kids.push_back(node_json(*c));
    j["children"] = std::move(kids);
    return j;
}

const Json& child(const Json& j, std::size_t expected)
{
    if (!j.contains("children") || !j["children"].is_array() || j["children"].size() != expected)
        throw InvalidArgument("expression JSON: node '" + j.value("kind", std::string("?")) + "' needs "
                              + std::to_string(expected) + " child(ren)");
    return j["children"][0];
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed)
{
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            throw InvalidArgument("expression JSON: unexpected key '" + key + "'");
    }
}

GenFunction parse_node(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidArgument("expression JSON: every node needs a string 'kind'");
    const auto kind = j["kind"].get<std::string>();

    if (kind == "const") {
        reject_unknown_keys(j, {"kind", "value"});
        if (!j.contains("value") || !j["value"].is_number())
            throw InvalidArgument("expression JSON: const needs a numeric 'value'");
        return constant(j["value"].get<double>());
    }
    if (kind == "x") {
        reject_unknown_keys(j, {"kind"});
        return variable_x();
    }
    if (kind == "eps") {
        reject_unknown_keys(j, {"kind"});
        return epsilon();
    }
    if (kind == "profile") {
        reject_unknown_keys(j, {"kind", "profile", "order", "children"});
        const auto& arg = child(j, 1);
        return profile_node(find_profile(j.at("profile").get<std::string>()), j.value("order", 0), parse_node(arg));
    }
    if (kind == "add" || kind == "mul") {
        reject_unknown_keys(j, {"kind", "children"});
        if (!j.contains("children") || !j["children"].is_array() || j["children"].empty())
            throw InvalidArgument("expression JSON: '" + kind + "' needs a non-empty children array");
        GenFunction acc = kind == "add" ? constant(0.0) : constant(1.0);
        for (const auto& c : j["children"])
            acc = kind == "add" ? add(acc, parse_node(c)) : mul(acc, parse_node(c));
        return acc;
    }
    if (kind == "pow") {
        reject_unknown_keys(j, {"kind", "exponent", "certificate", "children"});
        const auto& base = child(j, 1);
        std::optional<Certificate> cert;
        if (j.contains("certificate")) {
            const auto& c = j["certificate"];
            if (!c.is_array() || c.size() != 2)
                throw InvalidArgument("expression JSON: certificate must be [lo, hi]");
            cert = Certificate{c[0].get<double>(), c[1].get<double>()};
        }
        return ipow(parse_node(base), j.at("exponent").get<int>(), cert);
    }
    if (kind == "neg" || kind == "sin" || kind == "cos" || kind == "exp") {
        reject_unknown_keys(j, {"kind", "children"});
        auto a = parse_node(child(j, 1));
        if (kind == "neg")
            return neg(a);
        if (kind == "sin")
            return sin(a);
        if (kind == "cos")
            return cos(a);
        return exp(a);
    }
    throw InvalidArgument("expression JSON: unknown node kind '" + kind + "'");
}

void write(std::string& out, const Json& j, int indent, int depth)
{
    auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
    case Json::value_t::number_float:
        out += format17(j.get<double>());
        return;
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first)
                out += ',';
            first = false;
            newline(depth + 1);
            write(out, v, indent, depth + 1);
        }
        newline(depth);
        out += ']';
        return;
    }
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, v] : j.items()) {
            if (!first)
                out += ',';
            first = false;
            newline(depth + 1);
            out += Json(key).dump();
            out += indent >= 0 ? ": " : ":";
            write(out, v, indent, depth + 1);
        }
        newline(depth);
        out += '}';
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

}  // namespace

std::string format17(double v)
{
    if (!std::isfinite(v))
        return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const GenFunction& g) { return node_json(g.node()); }

GenFunction genfun_from_json(const Json& j) { return parse_node(j); }

std::string to_json_string(const GenFunction& g) { return dump17(to_json(g)); }

GenFunction genfun_from_json_string(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("expression JSON: ") + e.what());
    }
    return parse_node(j);
}

std::string dump17(const Json& j, int indent)
{
    std::string out;
    write(out, j, indent, 0);
    return out;
}

}  // namespace colombeau
