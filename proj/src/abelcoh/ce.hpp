#pragma once

#include "abelcoh/correspondence.hpp"
#include "abelcoh/exact_rank.hpp"
#include "abelcoh/liealg.hpp"
#include "abelcoh/report.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace abelcoh {

/// Element of the exterior power of n*, sparse over wedge monomials
/// f_S = f_{s_1} ^ ... ^ f_{s_p} with s_1 < ... < s_p in canonical root order.
class Cochain {
public:
    Cochain(int n, int degree);

    static Cochain monomial(const RootSet& s, const mpq_class& coeff = 1);

    int rank() const { return n_; }
    int degree() const { return degree_; }
    const std::map<RootSet, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * f_s; zero coefficients are dropped. Throws InvalidArgument
    /// if |s| differs from the degree.
    void add(const RootSet& s, const mpq_class& coeff);

    Cochain& operator+=(const Cochain& other);
    friend Cochain operator*(const mpq_class& scalar, Cochain c);
    friend bool operator==(const Cochain&, const Cochain&) = default;

    Json to_json() const;

private:
    int n_;
    int degree_;
    std::map<RootSet, mpq_class> terms_;
};

/// Sign of the permutation that sorts `factors`; 0 when a factor repeats
/// (the wedge vanishes).
int wedge_sign(std::span<const int> factors);

/// Total weight sum_{alpha in S} alpha as e_k coefficients.
std::vector<int> weight_of(const RootSet& s);

/// Chevalley-Eilenberg differential with trivial coefficients:
///   d f_gamma = - sum_{alpha < beta, [e_alpha, e_beta] = c e_gamma} c f_alpha ^ f_beta,
/// extended as an antiderivation, d(f_S) = sum_k (-1)^k f_{S \ s_k} ^ d f_{s_k}.
class Differential {
public:
    struct GeneratorTerm {
        int alpha;
        int beta;
        std::int64_t coeff;
    };

    explicit Differential(const StructureTable& table);

    int rank() const { return n_; }
    const std::vector<GeneratorTerm>& generator(int gamma) const {
        return generators_[static_cast<std::size_t>(gamma)];
    }

    /// d f_S as (monomial, integer coefficient) pairs with distinct monomials.
    std::vector<std::pair<RootSet, std::int64_t>> apply_monomial(const RootSet& s) const;
    Cochain apply(const Cochain& c) const;

private:
    int n_;
    std::vector<std::vector<GeneratorTerm>> generators_;
};

/// Convenience: differential with the structure table of c's rank.
Cochain differential(const Cochain& c);

struct BlockKey {
    int degree;
    std::vector<int> weight;

    friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
    friend bool operator==(const BlockKey&, const BlockKey&) = default;
};

struct BlockRank {
    BlockKey key;
    std::size_t dim = 0;
    /// Rank of d restricted to this block (into degree + 1, same weight).
    std::size_t rank_out = 0;
};

/// Exterior algebra of n* split into (degree, weight) blocks; d preserves the
/// weight, so the complex is a direct sum of the per-weight complexes.
class ChainComplex {
public:
    explicit ChainComplex(const Differential& d);

    int rank() const { return d_->rank(); }
    const Differential& differential() const { return *d_; }
    const std::map<BlockKey, std::vector<RootSet>>& blocks() const { return blocks_; }
    const std::vector<RootSet>* basis(const BlockKey& key) const;
    std::size_t monomial_count() const { return monomials_; }

    /// Matrix of d from block `key` to block (degree + 1, weight): rows index
    /// the target basis, columns the source basis.
    BigIntMatrix block_matrix(const BlockKey& key) const;

private:
    const Differential* d_;
    std::map<BlockKey, std::vector<RootSet>> blocks_;
    std::size_t monomials_ = 0;
};

struct CohomologyOptions {
    int cap = 3;
    bool allow_rank4 = false;
    unsigned workers = 1;
    /// Block ranks are cached here when non-empty.
    std::string cache_dir;
};

/// Throws CapExceeded when n exceeds the configured cohomology cap (or 4 with
/// the opt-in).
void check_cohomology_cap(int n, const CohomologyOptions& options);

std::vector<BlockRank> compute_block_ranks(const ChainComplex& complex, unsigned workers);

struct BettiResult {
    std::vector<std::int64_t> betti;
    std::vector<BlockRank> blocks;
    bool from_cache = false;
};

/// b_p = sum over weights of dim C^p - rank d_p - rank d_{p-1}.
std::vector<std::int64_t> betti_from_blocks(int n, const std::vector<BlockRank>& blocks);
BettiResult betti_numbers(int n, const CohomologyOptions& options);

/// f_{Phi_w} with coefficient 1.
Cochain monomial_cocycle(const SignedPerm& w);

/// (wedge_{Phi_sigma} f) ^ sigma sigma_l (wedge^max I_psi^*): the Phi_sigma
/// factors in canonical order followed by the relabeled ideal factors (taken
/// in the ideal's canonical order), sorted into a signed monomial.
Cochain l_cochain(const Perm& sigma, const IncreasingSet& psi);

/// Closedness, count and independence of the classes [f_{Phi_w}], and
/// L(sigma, psi) = +-f_{Phi_w} for w = inverse(sigma, psi).
VerificationReport verify_main_theorem(int n, const CohomologyOptions& options);

/// d(d f) = 0 on every generator and on `samples` random cochains.
VerificationReport verify_d_squared(int n, std::size_t samples, std::uint64_t seed);

} // namespace abelcoh
