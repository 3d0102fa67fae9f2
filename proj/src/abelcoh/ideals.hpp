#pragma once

#include "abelcoh/roots.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace abelcoh {

class IntPolynomial;

/// An up-set of (Phi1, precedes), i.e. an abelian ideal of the Borel
/// subalgebra in root form. Row t (1-based) holds e_t + e_j for t <= j <= b_t;
/// the non-empty rows form a prefix and the bounds are non-increasing.
class IncreasingSet {
public:
    IncreasingSet() = default;
    /// The empty ideal.
    explicit IncreasingSet(int n);

    /// Validates the profile: b_1 >= b_2 >= ... , b_t >= t, b_1 <= n.
    static IncreasingSet from_bounds(int n, std::vector<int> bounds);
    /// Throws InvalidArgument unless `members` is increasing.
    static IncreasingSet from_members(const RootSet& members);
    /// Inverse of code(): bit (l-1) set means a row of length l is present.
    static IncreasingSet from_code(int n, std::uint32_t code);

    int rank() const { return n_; }
    /// Row bounds b_1 >= ... >= b_k for the k non-empty rows.
    const std::vector<int>& bounds() const { return bounds_; }
    int row_count() const { return static_cast<int>(bounds_.size()); }
    const RootSet& members() const { return members_; }
    int dimension() const { return members_.size(); }

    /// Row lengths are distinct parts in 1..n; the code is their bitmask, a
    /// bijection onto [0, 2^n).
    std::uint32_t code() const;

    friend bool operator==(const IncreasingSet& a, const IncreasingSet& b) {
        return a.members_ == b.members_;
    }

private:
    int n_ = 0;
    std::vector<int> bounds_;
    RootSet members_;
};

/// All 2^n increasing subsets, generated from boundary profiles.
std::vector<IncreasingSet> enumerate_increasing(int n);
void for_each_increasing(int n, const std::function<void(const IncreasingSet&)>& f);

/// Up-set test over the full partial order. Throws InvalidArgument when the
/// set contains an e_i-e_j root.
bool is_increasing(const RootSet& s);

/// Psi+Phi+ closed in Psi and Psi+Psi disjoint from Phi+, for any S within
/// Phi+.
bool is_abelian_ideal_combinatorial(const RootSet& s);
bool is_abelian_ideal_combinatorial(const RootSet& s, const RootSystem& rs);

/// Coefficient of t^k counts the increasing sets of size k.
IntPolynomial dimension_histogram(int n);

} // namespace abelcoh
