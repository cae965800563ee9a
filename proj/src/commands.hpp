#pragma once

#include "colombeau/serialize.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace colombeau {

struct CommandResult {
    Json report;
    bool passed = false;
};

/// Runs one batch command on a parse-validated JSON config; unknown keys and
/// ill-typed values throw InvalidArgument before any computation. Every report
/// carries a "table" {"columns": [...], "rows": [[...], ...]} for rendering.
CommandResult run_command(std::string_view name, const Json& config);

const std::vector<std::string>& command_names();

}  // namespace colombeau
