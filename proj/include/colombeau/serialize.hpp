#pragma once

#include "colombeau/genfun.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace colombeau {

using Json = nlohmann::ordered_json;

/// Expression-tree JSON:
///   {"kind": "const", "value": 0.5}
///   {"kind": "x"} | {"kind": "eps"}
///   {"kind": "profile", "profile": "bump", "order": 0, "children": [arg]}
///   {"kind": "add" | "mul", "children": [...]}
///   {"kind": "pow", "exponent": -1, "certificate": [lo, hi], "children": [base]}
///   {"kind": "neg" | "sin" | "cos" | "exp", "children": [arg]}
Json to_json(const GenFunction& g);
GenFunction genfun_from_json(const Json& j);

/// Compact text form, doubles printed with 17 significant digits.
std::string to_json_string(const GenFunction& g);
GenFunction genfun_from_json_string(std::string_view text);

/// Serializes any JSON value with every floating-point number written as
/// %.17g (non-finite values become null). indent < 0 writes a single line.
std::string dump17(const Json& j, int indent = -1);

/// %.17g
std::string format17(double v);

}  // namespace colombeau
