#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abelcoh {

/// Largest rank any root-level structure supports; n^2 positive roots must fit
/// the 128-bit RootSet.
inline constexpr int kMaxRank = 11;

/// Throws InvalidArgument unless 1 <= n <= kMaxRank.
void validate_rank(int n);

enum class RootKind : std::uint8_t { Diff, Sum, Long };

/// A positive root of type C_n. Indices are 1-based.
///   Diff(i,j) = e_i - e_j, Sum(i,j) = e_i + e_j (i < j), Long(i) = 2e_i.
/// For Long, j == i so that (i, j) is also the pair used by the partial order.
struct Root {
    RootKind kind = RootKind::Long;
    int i = 1;
    int j = 1;

    static constexpr Root diff(int a, int b) { return {RootKind::Diff, a, b}; }
    static constexpr Root sum(int a, int b) { return {RootKind::Sum, a, b}; }
    static constexpr Root twice(int a) { return {RootKind::Long, a, a}; }

    /// e_i + e_j with i <= j; Sum when i < j, Long when i == j.
    static constexpr Root upper(int a, int b) {
        if (a > b) std::swap(a, b);
        return a == b ? twice(a) : sum(a, b);
    }

    constexpr bool is_diff() const { return kind == RootKind::Diff; }

    friend constexpr bool operator==(const Root&, const Root&) = default;
};

struct SignedRoot {
    int sign = 1;
    Root root;

    friend constexpr bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// Display syntax: `2e1`, `e1+e2`, `e1-e2`.
std::string to_string(const Root& r);
std::string to_string(const SignedRoot& r);
Root parse_root(std::string_view text);

/// Throws InvalidArgument if r is not a positive root of rank n.
void validate_root(const Root& r, int n);

/// Canonical global order: Diff(i,j) lexicographic, then Sum(i,j)
/// lexicographic, then Long(1..n).
int root_index(const Root& r, int n);
Root root_at(int index, int n);
inline constexpr int root_count(int n) { return n * n; }
inline constexpr int diff_count(int n) { return n * (n - 1) / 2; }

std::vector<Root> positive_roots(int n);

/// e_k coefficients of r, length n.
std::vector<int> coefficients(const Root& r, int n);

/// Classifies a coefficient vector as plus or minus a positive root.
std::optional<SignedRoot> classify(std::span<const int> coeffs);

/// Subset of the positive roots of a fixed rank, stored as a 128-bit mask over
/// the canonical order.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(int n) : rank_(static_cast<std::uint8_t>(n)) {}
    RootSet(int n, std::span<const Root> roots);

    static RootSet from_words(int n, std::uint64_t lo, std::uint64_t hi);

    int rank() const { return rank_; }
    std::uint64_t low_word() const { return words_[0]; }
    std::uint64_t high_word() const { return words_[1]; }

    bool contains(int index) const {
        return (words_[index >> 6] >> (index & 63)) & 1U;
    }
    bool contains(const Root& r) const;
    void insert(int index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
    void insert(const Root& r);
    void erase(int index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

    int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    bool empty() const { return (words_[0] | words_[1]) == 0; }

    bool is_subset_of(const RootSet& other) const {
        return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
    }

    /// Number of members with index strictly greater than `index`.
    int count_above(int index) const;

    std::vector<int> indices() const;
    std::vector<Root> roots() const;
    std::vector<std::string> names() const;

    template <class F>
    void for_each_index(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    friend RootSet operator|(RootSet a, const RootSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }
    friend RootSet operator&(RootSet a, const RootSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }
    friend RootSet operator-(RootSet a, const RootSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }

    friend bool operator==(const RootSet&, const RootSet&) = default;
    friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
        if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
        if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
        return a.words_[0] <=> b.words_[0];
    }

private:
    std::array<std::uint64_t, 2> words_{};
    std::uint8_t rank_ = 0;
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const noexcept {
        std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ULL;
        h ^= s.high_word() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.rank()));
    }
};

RootSet all_positive(int n);

/// (Phi0, Phi1): the Diff roots and the Sum/Long roots.
std::pair<RootSet, RootSet> split(int n);

/// alpha + beta when the vector sum is again a positive root.
std::optional<Root> dotted_sum(const Root& alpha, const Root& beta, int n);

/// x "precedes" y on Phi1: e_{i1}+e_{j1} below e_{i2}+e_{j2} iff i1 >= i2 and
/// j1 >= j2. Reflexive (x precedes x); callers wanting the strict relation
/// test x != y themselves. Throws InvalidArgument on Diff roots.
bool precedes(const Root& x, const Root& y);

/// Per-rank lookup tables built once from the definitions above.
class RootSystem {
public:
    explicit RootSystem(int n);

    int rank() const { return n_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const Root& root(int index) const { return roots_[static_cast<std::size_t>(index)]; }
    const std::vector<Root>& roots() const { return roots_; }
    int index(const Root& r) const { return root_index(r, n_); }

    /// Index of root(a) + root(b), or -1 when the sum is not a positive root.
    int sum_index(int a, int b) const {
        return sums_[static_cast<std::size_t>(a * size() + b)];
    }

    const RootSet& diff_roots() const { return diff_; }
    const RootSet& upper_roots() const { return upper_; }
    const RootSet& all() const { return all_; }

    /// Coefficient vector of root(index).
    std::span<const int> coefficients(int index) const {
        return {coeffs_.data() + static_cast<std::size_t>(index * n_), static_cast<std::size_t>(n_)};
    }

private:
    int n_;
    std::vector<Root> roots_;
    std::vector<int> sums_;
    std::vector<int> coeffs_;
    RootSet diff_, upper_, all_;
};

} // namespace abelcoh
