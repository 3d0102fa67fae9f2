#include "abelcoh/ce.hpp"

#include "abelcoh/cache.hpp"
#include "abelcoh/error.hpp"
#include "abelcoh/workers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace abelcoh {

Cochain::Cochain(int n, int degree) : n_(n), degree_(degree) {
    validate_rank(n);
    if (degree < 0 || degree > root_count(n)) throw InvalidArgument("cochain degree out of range");
}

Cochain Cochain::monomial(const RootSet& s, const mpq_class& coeff) {
    Cochain c(s.rank(), s.size());
    c.add(s, coeff);
    return c;
}

void Cochain::add(const RootSet& s, const mpq_class& coeff) {
    if (s.rank() != n_ || s.size() != degree_) {
        throw InvalidArgument("monomial of size " + std::to_string(s.size()) + " added to a degree " +
                              std::to_string(degree_) + " cochain");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Cochain& Cochain::operator+=(const Cochain& other) {
    if (other.n_ != n_ || other.degree_ != degree_) throw InvalidArgument("adding cochains of different shape");
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
}

Cochain operator*(const mpq_class& scalar, Cochain c) {
    if (scalar == 0) {
        c.terms_.clear();
        return c;
    }
    for (auto& [s, v] : c.terms_) v *= scalar;
    return c;
}

Json Cochain::to_json() const {
    Json terms = Json::array();
    for (const auto& [s, c] : terms_) terms.push_back(Json{{"factors", s.names()}, {"coeff", c.get_str()}});
    return Json{{"degree", degree_}, {"terms", std::move(terms)}};
}

int wedge_sign(std::span<const int> factors) {
    int inversions = 0;
    for (std::size_t a = 0; a < factors.size(); ++a)
        for (std::size_t b = a + 1; b < factors.size(); ++b) {
            if (factors[a] == factors[b]) return 0;
            if (factors[a] > factors[b]) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> weight_of(const RootSet& s) {
    const int n = s.rank();
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    s.for_each_index([&](int k) {
        const auto c = coefficients(root_at(k, n), n);
        for (int i = 0; i < n; ++i) w[i] += c[i];
    });
    return w;
}

Differential::Differential(const StructureTable& table)
    : n_(table.rank()), generators_(static_cast<std::size_t>(table.size())) {
    for (int a = 0; a < table.size(); ++a)
        for (int b = a + 1; b < table.size(); ++b) {
            const auto& e = table(a, b);
            if (e.target >= 0 && e.coeff != 0) generators_[e.target].push_back({a, b, -e.coeff});
        }
}

std::vector<std::pair<RootSet, std::int64_t>> Differential::apply_monomial(const RootSet& s) const {
    std::map<RootSet, std::int64_t> acc;
    int position = 0;
    s.for_each_index([&](int gamma) {
        const int position_sign = position % 2 == 0 ? 1 : -1;
        ++position;
        RootSet rest = s;
        rest.erase(gamma);
        for (const auto& t : generators_[static_cast<std::size_t>(gamma)]) {
            if (rest.contains(t.alpha) || rest.contains(t.beta)) continue;
            // f_rest ^ f_alpha ^ f_beta sorted into canonical order
            const int s_alpha = rest.count_above(t.alpha) % 2 == 0 ? 1 : -1;
            RootSet target = rest;
            target.insert(t.alpha);
            const int s_beta = target.count_above(t.beta) % 2 == 0 ? 1 : -1;
            target.insert(t.beta);
            acc[target] += position_sign * s_alpha * s_beta * t.coeff;
        }
    });
    std::vector<std::pair<RootSet, std::int64_t>> out;
    for (const auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, c);
    return out;
}

Cochain Differential::apply(const Cochain& c) const {
    if (c.rank() != n_) throw InvalidArgument("cochain rank does not match the differential");
    if (c.degree() == root_count(n_)) return Cochain(n_, c.degree());
    Cochain out(n_, c.degree() + 1);
    for (const auto& [s, coeff] : c.terms())
        for (const auto& [m, k] : apply_monomial(s)) out.add(m, coeff * k);
    return out;
}

Cochain differential(const Cochain& c) {
    return Differential(StructureTable(c.rank())).apply(c);
}

ChainComplex::ChainComplex(const Differential& d) : d_(&d) {
    const int n = d.rank();
    const int size = root_count(n);
    if (size > 30) throw CapExceeded("exterior algebra too large to materialize for rank " + std::to_string(n));
    std::vector<std::vector<int>> coeffs;
    for (int k = 0; k < size; ++k) coeffs.push_back(coefficients(root_at(k, n), n));
    const std::uint64_t count = std::uint64_t{1} << size;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const RootSet s = RootSet::from_words(n, mask, 0);
        BlockKey key{s.size(), std::vector<int>(static_cast<std::size_t>(n), 0)};
        s.for_each_index([&](int k) {
            for (int i = 0; i < n; ++i) key.weight[i] += coeffs[k][i];
        });
        blocks_[std::move(key)].push_back(s);
    }
    monomials_ = count;
}

const std::vector<RootSet>* ChainComplex::basis(const BlockKey& key) const {
    const auto it = blocks_.find(key);
    return it == blocks_.end() ? nullptr : &it->second;
}

BigIntMatrix ChainComplex::block_matrix(const BlockKey& key) const {
    const auto* source = basis(key);
    if (source == nullptr) throw InvalidArgument("no such block");
    const auto* target = basis(BlockKey{key.degree + 1, key.weight});
    if (target == nullptr) return BigIntMatrix(0, source->size());
    BigIntMatrix m(target->size(), source->size());
    for (std::size_t col = 0; col < source->size(); ++col) {
        for (const auto& [mono, c] : d_->apply_monomial((*source)[col])) {
            const auto it = std::lower_bound(target->begin(), target->end(), mono);
            if (it == target->end() || *it != mono) {
                throw InternalInconsistency("differential leaves its weight block");
            }
            m(static_cast<std::size_t>(it - target->begin()), col) = static_cast<long>(c);
        }
    }
    return m;
}

void check_cohomology_cap(int n, const CohomologyOptions& options) {
    validate_rank(n);
    const int cap = options.allow_rank4 ? std::max(options.cap, 4) : options.cap;
    if (n > cap) {
        std::string msg = "rank " + std::to_string(n) + " exceeds the cohomology cap " + std::to_string(cap);
        if (n == 4) msg += " (rank 4 requires the explicit opt-in)";
        throw CapExceeded(msg);
    }
    if (n > 4) throw CapExceeded("cohomology is supported up to rank 4");
}

std::vector<BlockRank> compute_block_ranks(const ChainComplex& complex, unsigned workers) {
    std::vector<const std::pair<const BlockKey, std::vector<RootSet>>*> entries;
    for (const auto& entry : complex.blocks()) entries.push_back(&entry);
    return map_chunks<BlockRank>(entries.size(), workers, [&](std::size_t i) {
        const auto& [key, basis] = *entries[i];
        return BlockRank{key, basis.size(), bareiss_rank(complex.block_matrix(key))};
    });
}

std::vector<std::int64_t> betti_from_blocks(int n, const std::vector<BlockRank>& blocks) {
    std::map<BlockKey, std::size_t> rank_out;
    for (const auto& b : blocks) rank_out[b.key] = b.rank_out;
    std::vector<std::int64_t> betti(static_cast<std::size_t>(root_count(n) + 1), 0);
    for (const auto& b : blocks) {
        std::int64_t contribution = static_cast<std::int64_t>(b.dim) - static_cast<std::int64_t>(b.rank_out);
        if (const auto it = rank_out.find(BlockKey{b.key.degree - 1, b.key.weight}); it != rank_out.end()) {
            contribution -= static_cast<std::int64_t>(it->second);
        }
        betti[static_cast<std::size_t>(b.key.degree)] += contribution;
    }
    return betti;
}

namespace {

std::pair<std::vector<BlockRank>, bool> block_ranks_for(int n, const ChainComplex& complex,
                                                        const CohomologyOptions& options) {
    if (auto cached = load_block_ranks(options.cache_dir, n)) return {std::move(*cached), true};
    auto blocks = compute_block_ranks(complex, options.workers);
    save_block_ranks(options.cache_dir, n, blocks);
    return {std::move(blocks), false};
}

} // namespace

BettiResult betti_numbers(int n, const CohomologyOptions& options) {
    check_cohomology_cap(n, options);
    if (auto cached = load_block_ranks(options.cache_dir, n)) {
        auto betti = betti_from_blocks(n, *cached);
        return {std::move(betti), std::move(*cached), true};
    }
    const StructureTable table(n);
    const Differential d(table);
    const ChainComplex complex(d);
    auto [blocks, from_cache] = block_ranks_for(n, complex, options);
    auto betti = betti_from_blocks(n, blocks);
    return {std::move(betti), std::move(blocks), from_cache};
}

Cochain monomial_cocycle(const SignedPerm& w) {
    return Cochain::monomial(inversion_set(w));
}

Cochain l_cochain(const Perm& sigma, const IncreasingSet& psi) {
    const int n = sigma.size();
    if (psi.rank() != n) throw InvalidArgument("rank mismatch between permutation and ideal");
    const Perm relabel = sigma * Perm::longest(n);
    std::vector<int> factors = perm_inversions(sigma).indices();
    psi.members().for_each_index([&](int k) {
        const Root r = root_at(k, n);
        factors.push_back(root_index(Root::upper(relabel(r.i), relabel(r.j)), n));
    });
    const int sign = wedge_sign(factors);
    if (sign == 0) throw InternalInconsistency("L(sigma, I) has a repeated factor");
    RootSet support(n);
    for (int f : factors) support.insert(f);
    return Cochain::monomial(support, sign);
}

VerificationReport verify_main_theorem(int n, const CohomologyOptions& options) {
    check_cohomology_cap(n, options);
    VerificationReport report(n, "classes");
    const StructureTable table(n);
    const Differential d(table);
    const ChainComplex complex(d);

    Stopwatch rank_clock;
    const auto [blocks, from_cache] = block_ranks_for(n, complex, options);
    const auto betti = betti_from_blocks(n, blocks);
    std::map<BlockKey, std::size_t> rank_out;
    for (const auto& b : blocks) rank_out[b.key] = b.rank_out;
    const double rank_seconds = rank_clock.seconds();

    Stopwatch class_clock;
    std::map<BlockKey, std::vector<RootSet>> cocycles;
    std::vector<std::int64_t> per_degree(betti.size(), 0);
    std::vector<std::string> not_closed;
    std::int64_t closed = 0;
    enumerate_group(n, 8, [&](const SignedPerm& w) {
        const RootSet s = inversion_set(w);
        if (d.apply_monomial(s).empty()) {
            ++closed;
        } else if (not_closed.size() < 10) {
            not_closed.push_back(w.to_string());
        }
        ++per_degree[static_cast<std::size_t>(s.size())];
        cocycles[BlockKey{s.size(), weight_of(s)}].push_back(s);
    });
    const auto order = static_cast<std::int64_t>(group_order(n));
    report.add("cocycles.closed", "d f_{Phi_w} = 0 for every w", closed == order,
               Json{{"closed", closed}, {"elements", order}, {"examples", not_closed}});
    report.add("classes.count", "#{w : |Phi_w| = p} = b_p", per_degree == betti,
               Json{{"classes_per_degree", per_degree}, {"betti", betti}, {"ranks_from_cache", from_cache}},
               rank_seconds);

    std::vector<std::int64_t> independent_per_degree(betti.size(), 0);
    Json failures = Json::array();
    std::size_t shared_blocks = 0;
    for (const auto& [key, monos] : cocycles) {
        if (monos.size() > 1) ++shared_blocks;
        const auto* target = complex.basis(key);
        const BlockKey previous{key.degree - 1, key.weight};
        const auto* source = complex.basis(previous);
        const std::size_t image_rank = source != nullptr ? rank_out.at(previous) : 0;
        const std::size_t image_cols = source != nullptr ? source->size() : 0;
        BigIntMatrix m(target->size(), monos.size() + image_cols);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            const auto it = std::lower_bound(target->begin(), target->end(), monos[c]);
            m(static_cast<std::size_t>(it - target->begin()), c) = 1;
        }
        if (source != nullptr) {
            const BigIntMatrix image = complex.block_matrix(previous);
            for (std::size_t r = 0; r < image.rows(); ++r)
                for (std::size_t c = 0; c < image.cols(); ++c) m(r, monos.size() + c) = image(r, c);
        }
        const std::size_t combined = bareiss_rank(std::move(m));
        if (combined == monos.size() + image_rank) {
            independent_per_degree[static_cast<std::size_t>(key.degree)] += static_cast<std::int64_t>(monos.size());
        } else if (failures.size() < 10) {
            failures.push_back(Json{{"degree", key.degree}, {"weight", key.weight}, {"classes", monos.size()},
                                    {"combined_rank", combined}, {"image_rank", image_rank}});
        }
    }
    report.add("classes.independent", "classes [f_{Phi_w}], |Phi_w| = p, are independent modulo im d_{p-1}",
               failures.empty() && independent_per_degree == betti,
               Json{{"independent_per_degree", independent_per_degree}, {"failures", failures}},
               class_clock.seconds());

    Stopwatch l_clock;
    std::int64_t matches = 0;
    std::int64_t positive = 0;
    std::int64_t pairs = 0;
    Json mismatches = Json::array();
    for_each_increasing(n, [&](const IncreasingSet& psi) {
        enumerate_perms(n, [&](const Perm& sigma) {
            ++pairs;
            const Cochain l = l_cochain(sigma, psi);
            const SignedPerm w = inverse(sigma, psi);
            const RootSet phi_w = inversion_set(w);
            const bool degree_ok = l.degree() == perm_inversions(sigma).size() + psi.dimension();
            const bool same_line = l.terms().size() == 1 && l.terms().begin()->first == phi_w;
            if (degree_ok && same_line) {
                ++matches;
                if (l.terms().begin()->second > 0) ++positive;
            } else if (mismatches.size() < 10) {
                mismatches.push_back(Json{{"sigma", sigma.to_string()}, {"ideal", psi.members().names()},
                                          {"element", w.to_string()}});
            }
        });
    });
    report.add("l_cochain.matches", "L(sigma, I) = +-f_{Phi_w} with deg = |Phi_sigma| + dim I", matches == pairs,
               Json{{"pairs", pairs}, {"matches", matches}, {"mismatches", mismatches}}, l_clock.seconds());

    report.data()["betti"] = betti;
    report.data()["classes_per_degree"] = per_degree;
    report.data()["l_cochain_signs"] = Json{{"positive", positive}, {"negative", matches - positive}};
    report.data()["cocycle_weights_distinct"] =
        Json{{"blocks_with_classes", cocycles.size()}, {"blocks_with_several_classes", shared_blocks}};
    report.data()["block_count"] = blocks.size();
    return report;
}

namespace {

Cochain random_cochain(int n, std::mt19937_64& rng) {
    const int size = root_count(n);
    std::uniform_int_distribution<int> degree_dist(0, size);
    std::uniform_int_distribution<int> terms_dist(1, 4);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    const int degree = degree_dist(rng);
    Cochain c(n, degree);
    std::vector<int> order(static_cast<std::size_t>(size));
    std::iota(order.begin(), order.end(), 0);
    const int terms = terms_dist(rng);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        RootSet s(n);
        for (int k = 0; k < degree; ++k) s.insert(order[static_cast<std::size_t>(k)]);
        mpq_class coeff(num_dist(rng), den_dist(rng));
        coeff.canonicalize();
        c.add(s, coeff);
    }
    return c;
}

} // namespace

VerificationReport verify_d_squared(int n, std::size_t samples, std::uint64_t seed) {
    validate_rank(n);
    VerificationReport report(n, "d_squared");
    const StructureTable table(n);
    const Differential d(table);

    Stopwatch generator_clock;
    std::int64_t weight_failures = 0;
    std::int64_t generator_failures = 0;
    for (int g = 0; g < table.size(); ++g) {
        RootSet single(n);
        single.insert(g);
        for (const auto& [mono, c] : d.apply_monomial(single)) {
            if (weight_of(mono) != weight_of(single)) ++weight_failures;
        }
        if (!d.apply(d.apply(Cochain::monomial(single))).is_zero()) ++generator_failures;
    }
    report.add("d.weight", "d preserves the weight of every generator", weight_failures == 0,
               Json{{"failures", weight_failures}});
    report.add("d.squared.generators", "d(d f_gamma) = 0 for every positive root gamma", generator_failures == 0,
               Json{{"generators", table.size()}, {"failures", generator_failures}}, generator_clock.seconds());

    Stopwatch random_clock;
    std::mt19937_64 rng(seed);
    std::int64_t random_failures = 0;
    Json examples = Json::array();
    for (std::size_t k = 0; k < samples; ++k) {
        const Cochain c = random_cochain(n, rng);
        const Cochain dd = d.apply(d.apply(c));
        if (!dd.is_zero()) {
            ++random_failures;
            if (examples.size() < 3) examples.push_back(c.to_json());
        }
    }
    report.add("d.squared.random", "d(d c) = 0 on seeded random rational cochains", random_failures == 0,
               Json{{"samples", samples}, {"seed", seed}, {"failures", random_failures}, {"examples", examples}},
               random_clock.seconds());
    return report;
}

} // namespace abelcoh
