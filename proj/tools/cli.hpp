#ifndef TILTWALL_TOOLS_CLI_HPP
#define TILTWALL_TOOLS_CLI_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace tiltwall::cli {

enum ExitCode { ok = 0, negative = 1, bad_input = 2 };

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "key = value" lines; '#' starts a comment. Throws std::invalid_argument.
std::map<std::string, std::string> parse_config(const std::string& text);

/// Worker count: hardware concurrency, capped by TILTWALL_THREADS when set.
unsigned worker_threads();

}  // namespace tiltwall::cli

#endif  // TILTWALL_TOOLS_CLI_HPP
