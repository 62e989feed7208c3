#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gecstrat/http_corrector.hpp"

namespace gecstrat {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitIoError = 2;

/// Runs the gecstrat command line. `args` excludes the program name. Errors
/// are reported on `err` and mapped to exit statuses: data and evaluation
/// failures give 1, I/O, configuration and usage errors give 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env);

}  // namespace gecstrat
