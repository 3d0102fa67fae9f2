#pragma once

#include "abelcoh/roots.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelcoh {

/// Permutation of {1..n} written as its image sequence (i_1, ..., i_n), i.e.
/// the map m -> i_m.
class Perm {
public:
    Perm() = default;

    static Perm identity(int n);
    /// (n, n-1, ..., 1), the longest element of S_n.
    static Perm longest(int n);
    /// Validates that `images` is a permutation of {1..n}.
    static Perm from_images(std::span<const int> images);
    static Perm parse(std::string_view text);

    int size() const { return n_; }
    int operator()(int m) const { return img_[static_cast<std::size_t>(m - 1)]; }
    std::vector<int> images() const;

    Perm inverse() const;
    bool is_identity() const;

    /// Advances to the lexicographically next permutation; false after the last.
    bool next() { return std::next_permutation(img_.begin(), img_.begin() + n_); }

    /// (a * b)(m) = a(b(m)).
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

    std::string to_string() const;

private:
    std::array<std::uint8_t, kMaxRank> img_{};
    std::uint8_t n_ = 0;
};

/// Lexicographic rank of a permutation in [0, n!).
std::uint64_t perm_rank(const Perm& p);
std::uint64_t factorial(int n);

/// Element of the hyperoctahedral group: apply `perm`, then negate the output
/// values in the `negated` set. w(e_m) = -e_{perm(m)} exactly when perm(m) is
/// negated. With J the negated set this is r_{j1}...r_{jk} * sigma0.
class SignedPerm {
public:
    SignedPerm() = default;
    /// Bit (v-1) of `negated_values` marks output value v as negated.
    SignedPerm(Perm perm, std::uint32_t negated_values);

    static SignedPerm identity(int n) { return {Perm::identity(n), 0}; }
    /// The sign change r_j: e_j -> -e_j.
    static SignedPerm reflection(int n, int j);
    static SignedPerm from_signed_images(std::span<const int> images);
    /// Text form `[2,-1,3]`: w(1)=e_2, w(2)=-e_1, w(3)=e_3.
    static SignedPerm parse(std::string_view text);

    int rank() const { return perm_.size(); }
    const Perm& perm() const { return perm_; }
    std::uint32_t negated() const { return negated_; }
    bool is_negated(int value) const { return (negated_ >> (value - 1)) & 1U; }
    int negated_count() const;

    /// Signed image of index m: +-perm(m).
    int image(int m) const { return is_negated(perm_(m)) ? -perm_(m) : perm_(m); }
    std::vector<int> signed_images() const;

    SignedPerm inverse() const;
    friend SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

    std::string to_string() const;

private:
    Perm perm_;
    std::uint32_t negated_ = 0;
};

std::uint64_t group_order(int n);

SignedRoot act_on_root(const SignedPerm& w, const Root& alpha);
SignedRoot act_on_root(const Perm& sigma, const Root& alpha);

/// Phi_w = w(-Phi+) cap Phi+ = { alpha > 0 : w^{-1}(alpha) < 0 }.
RootSet inversion_set(const SignedPerm& w);
int length(const SignedPerm& w);

/// { e_i - e_j : i < j, sigma^{-1}(i) > sigma^{-1}(j) }.
RootSet perm_inversions(const Perm& sigma);

/// The unique sigma with perm_inversions(sigma) == s, if any.
std::optional<Perm> perm_from_inversions(const RootSet& s);

/// How the negated indices are ordered in a standard form.
enum class JOrder {
    ByImage,    ///< sigma0(j_1) < sigma0(j_2) < ...  (normative)
    ByPosition, ///< sigma0^{-1}(j_1) < sigma0^{-1}(j_2) < ...  (left-to-right in the sequence)
};

/// w = r_{j_1} ... r_{j_k} * sigma0.
struct StandardForm {
    std::vector<int> j_list;
    Perm sigma0;

    friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

StandardForm standard_form(const SignedPerm& w, JOrder order = JOrder::ByImage);
SignedPerm recompose(const StandardForm& sf);

/// Visits every element with negated-set mask in [mask_begin, mask_end); within
/// a mask, permutations run in lexicographic order.
template <class F>
void for_each_element(int n, std::uint32_t mask_begin, std::uint32_t mask_end, F&& f) {
    for (std::uint32_t mask = mask_begin; mask < mask_end; ++mask) {
        Perm p = Perm::identity(n);
        do {
            f(SignedPerm(p, mask));
        } while (p.next());
    }
}

/// Every element of W(C_n) once: signs outer, permutations inner. Throws
/// CapExceeded when n > cap.
template <class F>
void enumerate_group(int n, int cap, F&& f);

/// Every permutation of S_n in lexicographic order.
template <class F>
void enumerate_perms(int n, F&& f) {
    Perm p = Perm::identity(n);
    do {
        f(p);
    } while (p.next());
}

void check_group_cap(int n, int cap);

template <class F>
void enumerate_group(int n, int cap, F&& f) {
    check_group_cap(n, cap);
    for_each_element(n, 0, std::uint32_t{1} << n, f);
}

} // namespace abelcoh
