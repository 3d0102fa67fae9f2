#pragma once

#include "abelcoh/report.hpp"

#include <cstddef>
#include <cstdint>

namespace abelcoh {

/// Largest rank at which every subset of Phi1 (2^{n(n+1)/2} of them) is
/// scanned; above it the scan is replaced by seeded samples.
inline constexpr int kExhaustiveUpperRank = 5;
/// Largest rank at which every subset of Phi+ is scanned for the rejection of
/// e_i-e_j roots.
inline constexpr int kExhaustiveFullRank = 4;

/// Up-set test against the dotted-sum test on subsets of Phi1, and rejection
/// of every candidate containing an e_i-e_j root.
VerificationReport verify_ideal_oracles(int n, std::size_t samples, std::uint64_t seed);

/// Dotted-sum test against the structure-table test: every subset of Phi1 for
/// n <= 4 plus `samples` seeded subsets of Phi+. Also checks antisymmetry,
/// Jacobi and the weight-vector property of the realization.
VerificationReport verify_lie_oracle(int n, std::size_t samples, std::uint64_t seed);

} // namespace abelcoh
