#pragma once

// Command dispatch behind the bigsurf executable. Kept in the library so the
// test suites can drive it without spawning processes.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bigsurf/json_io.hpp"

namespace bigsurf::cli {

enum class Command { Classify, Check, Roots, Zariski, Enumerate, Sweep, Witness };
enum class OutputFormat { Json, Dot, Text };

Command command_from_string(const std::string& s);
std::string to_string(Command c);
OutputFormat format_from_string(const std::string& s);

struct SweepBounds {
    int max_a = 12;
    int max_b = 12;
    int max_ai = 10;
    bool operator==(const SweepBounds&) const = default;
};

using Input = std::variant<std::monostate, PointConfiguration, FamilyParams, WitnessParams>;

struct RunConfig {
    Command command = Command::Classify;
    Input input;
    OutputFormat format = OutputFormat::Json;
    std::optional<SweepBounds> sweep;
};

// Parses the JSON input document; dispatches on "model" (generic, line_conic,
// three_lines, hirzebruch_family, witness).
Input parse_input(std::string_view text);

// Checks that the input kind suits the command. `text` may be empty for sweep.
RunConfig parse_config(Command command, std::string_view text, OutputFormat format = OutputFormat::Json,
                       std::optional<SweepBounds> sweep = std::nullopt);

struct SweepReport {
    SweepBounds bounds;
    std::size_t configurations = 0;
    std::size_t big = 0;
    std::size_t disagreements = 0;     // inequality vs lattice verdicts
    std::size_t flag_dependent = 0;    // verdict changed with intersection flags alone
    std::vector<std::string> failures;  // first few offending configurations

    bool operator==(const SweepReport&) const = default;
};

// Every LineConic (a <= max_a, b <= max_b, both in {0,1,2}) and ThreeLines
// (a_i <= max_ai, all flag patterns) through cross_check. `threads` = 0 uses
// the hardware concurrency.
SweepReport run_sweep(const SweepBounds& bounds, unsigned threads = 0);

Json encode(const SweepReport& report);
void decode(const Json& j, SweepReport& out);

struct RunResult {
    int exit_code = 0;   // 0 ok, 1 domain error, 2 internal invariant failure
    std::string output;  // emitted report (empty on error)
    std::string error;
};

RunResult run(const RunConfig& config);

}  // namespace bigsurf::cli
