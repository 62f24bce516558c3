#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "trinv/errors.hpp"

namespace trinv {

// Outcome of one CLI invocation.  `payload` is the structured document (also
// filled on errors so --output structured always yields parseable JSON);
// `text` is the human rendering.  `structured` records which mode was chosen.
struct CommandResult {
    errc status = errc::ok;
    std::string message;
    nlohmann::json payload;
    std::string text;
    bool structured = false;
};

// Runs one subcommand given argv-style arguments (without the program name).
// Never throws: failures are reported through `status` and `message`.
CommandResult run_command(const std::vector<std::string>& args);

// Full process entry point: prints the result and maps status to an exit code.
int cli_main(int argc, char** argv);

}  // namespace trinv
