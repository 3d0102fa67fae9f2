#pragma once

#include "abelcoh/ideals.hpp"
#include "abelcoh/report.hpp"
#include "abelcoh/weyl.hpp"

#include <cstddef>

namespace abelcoh {

/// (eta(w), xi(w)) in S_n x {increasing sets}.
struct CorrespondencePair {
    Perm eta;
    IncreasingSet xi;

    friend bool operator==(const CorrespondencePair&, const CorrespondencePair&) = default;
};

/// Image of a Phi1 set under index relabeling e_a+e_b -> e_{pi(a)}+e_{pi(b)}.
RootSet relabel_upper(const RootSet& s, const Perm& pi);

/// The unique permutation whose inversion set is Phi_w cap Phi0.
/// Throws InternalInconsistency if that set is not a permutation inversion set.
Perm eta(const SignedPerm& w);

/// Closed form: delete j_1..j_k from the image sequence of sigma0 and append
/// j_k, ..., j_1. Agreement with eta() depends on how the j's are ordered.
Perm eta_formula(const StandardForm& sf);

/// sigma_l eta_w^{-1} (Phi_w cap Phi1). Throws InternalInconsistency when the
/// result is not increasing.
IncreasingSet xi(const SignedPerm& w);

/// How the upper bound of row i is read in the closed form for xi:
///   { e_i + e_j : 1 <= i <= k, i <= j <= bound(i) }.
enum class BoundReading {
    Subscripted, ///< n + 1 - sigma0^{-1}(j_i)  (normative)
    Literal,     ///< n + 1 - sigma0^{-1}(i)
    Offset,      ///< n + i - sigma0^{-1}(j_i), from the surjectivity construction
};

RootSet xi_formula(const StandardForm& sf, BoundReading reading = BoundReading::Subscripted);

CorrespondencePair pair(const SignedPerm& w);

struct InverseResult {
    SignedPerm element;
    /// The constructive recipe failed self-validation and exhaustive search
    /// over the group produced the preimage instead.
    bool used_fallback = false;
};

/// The unique w with pair(w) == (sigma, psi), built by inserting the negated
/// indices into sigma's leading block and self-validated; falls back to a
/// search over W (bounded by `search_cap`) when validation fails.
InverseResult inverse_traced(const Perm& sigma, const IncreasingSet& psi, int search_cap = 8);
SignedPerm inverse(const Perm& sigma, const IncreasingSet& psi);

/// Roots indexing the wedge factors of L(sigma, I_psi):
/// Phi_sigma together with sigma sigma_l (psi). The union is disjoint.
RootSet l_support(const Perm& sigma, const IncreasingSet& psi);

struct BijectionOptions {
    int cap = 8;
    unsigned workers = 1;
    /// Number of formula disagreements listed verbatim per variant.
    std::size_t listed = 10;
};

/// Exhaustive check of the bijection W <-> S_n x {increasing sets} and the
/// identities that come with it; closed-form disagreements go to
/// data["formula_crosscheck"] and do not fail the report.
VerificationReport verify_bijection(int n, const BijectionOptions& options = {});

/// Phi_w, standard forms, eta, xi and the support for one element.
Json witness_trace(const SignedPerm& w);

} // namespace abelcoh
