#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tr2dom {

inline constexpr const char * tool_name = "tr2dom";
inline constexpr const char * tool_version = "1.0.0";

namespace exit_code {
    inline constexpr int ok = 0;
    inline constexpr int violation = 1;
    inline constexpr int parse_error = 2;
    inline constexpr int infeasible = 3;
    inline constexpr int size_limit = 4;
}

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; graphs are read from `in` when no --input
/// file is given. Returns the process exit code.
auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

}
