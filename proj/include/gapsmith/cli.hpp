#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gapsmith::cli {

enum class Verb { Gaps, CheckStructure, Remove, SemiorderCheck, Synth, Enumerate, Report };

const char* to_string(Verb v);

struct Command {
    Verb verb = Verb::Gaps;
    std::map<std::string, std::string> options;  // long flag name without dashes -> value
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;

    bool has(const std::string& flag) const { return options.count(flag) != 0; }
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int structure_violated = 2;
inline constexpr int certificate_failed = 3;
inline constexpr int invalid_input = 4;
inline constexpr int usage = 64;
inline constexpr int io = 74;
}  // namespace exit_code

/// argv without the program name. Throws Error(UsageError).
Command parse_args(const std::vector<std::string>& args);

std::string usage();

/// Runs the command, writing the primary report to `out` unless an output
/// path is set. Diagnostics go to `err`. Returns the process exit code.
int execute(const Command& c, std::ostream& out, std::ostream& err);

/// parse_args + execute with usage errors mapped to exit code 64.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapsmith::cli
