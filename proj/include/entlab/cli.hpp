#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace entlab {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    double        kb      = 1.0;
    std::uint64_t seed    = 0;
    OutputFormat  format  = OutputFormat::Csv;
    std::size_t   dim_cap = 4096;
    std::string   out; // empty: stdout
};

inline constexpr int kExitOk          = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid     = 2;

/// Runs one CLI invocation (arguments exclude the program name). Output is
/// buffered and emitted only after the command finishes, so validation
/// failures never leave partial output behind.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace entlab
