#pragma once

#include "abelcoh/ce.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelcoh {

/// Bumped whenever root_vector() changes; cached block ranks depend on it.
inline constexpr int kRealizationVersion = 1;

/// Content-addressed key for the complex of rank n under the current
/// realization.
std::string complex_cache_key(int n);

std::optional<std::vector<BlockRank>> load_block_ranks(const std::string& dir, int n);
/// Best effort: I/O failures leave the cache untouched and are not reported.
void save_block_ranks(const std::string& dir, int n, const std::vector<BlockRank>& blocks);

} // namespace abelcoh
