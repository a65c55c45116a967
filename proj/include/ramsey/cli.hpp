#ifndef RAMSEY_CLI_HPP
#define RAMSEY_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ramsey {

inline constexpr const char * tool_version = "0.1.0";

/// Exit codes: decided or successful runs return 0; usage, validation and
/// property failures return 1; unknown verdicts and exhausted budgets return 2.
namespace exit_code {
    inline constexpr int ok = 0;
    inline constexpr int failure = 1;
    inline constexpr int undecided = 2;
}

/// 64-bit FNV-1a, used for report config hashes.
auto fnv1a(const std::string & text) -> std::uint64_t;

/// Runs one command line (without the program name).
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace ramsey

#endif
