#pragma once

#include <optional>
#include <string>

#include "mmk/json_io.hpp"

namespace mmk {

struct RunOptions {
    std::optional<std::string> theta;    // comma-separated rationals
    std::optional<std::string> out_path; // also write the JSON report here
    std::optional<std::string> dot_path; // DOT export target for `quiver`
};

struct RunResult {
    int exit_code = 0;
    std::string output; // JSON text (or DOT for quiver when requested on stdout)
    std::string error;  // human-readable message for nonzero exits
};

// command: group-info | resolve | quiver | family <validate|canonical|special|walk>
//        | fibers | moduli | lift
RunResult run_command(const std::string& command, const std::string& sub, const Json& config,
                      const RunOptions& options);

// parse a config file; exit code 1 semantics on malformed JSON
Json parse_config_text(const std::string& text); // throws validation_error with line/column

} // namespace mmk
