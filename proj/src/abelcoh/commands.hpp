#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abelcoh {

enum class Format { Json, Csv };

struct RunConfig {
    int combinatorial_cap = 8;
    int cohomology_cap = 3;
    bool allow_rank4_cohomology = false;
    unsigned workers = 1;
    std::uint64_t seed = 42;
    /// Where block ranks of the cochain complex are cached; empty disables.
    std::string cache_dir;
    /// Seeded samples for the random-subset oracles.
    std::size_t oracle_samples = 10000;
    /// Seeded random cochains for the d^2 check.
    std::size_t d_squared_samples = 1000;
};

struct Request {
    std::string command;
    int rank = 0;
    Format format = Format::Json;
    bool list = false;
    bool histogram = false;
    bool per_weight = false;
    bool timing = false;
    /// Signed image sequence such as "[2,-1,3]"; empty when absent.
    std::string witness;
};

struct CommandOutput {
    std::string text;
    bool passed = true;
};

const std::vector<std::string>& command_names();

/// Runs one command. Usage problems throw InvalidArgument, rank caps throw
/// CapExceeded; verification failures are reported through `passed`.
CommandOutput run_command(const Request& request, const RunConfig& config);

} // namespace abelcoh
