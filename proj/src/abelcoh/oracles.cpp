#include "abelcoh/oracles.hpp"

#include "abelcoh/ideals.hpp"
#include "abelcoh/liealg.hpp"

#include <random>

namespace abelcoh {

namespace {

// Subset of Phi1 whose k-th bit selects the k-th Sum/Long root.
RootSet upper_subset(const RootSystem& rs, std::uint64_t bits) {
    RootSet s(rs.rank());
    const int offset = diff_count(rs.rank());
    const int count = rs.size() - offset;
    for (int k = 0; k < count; ++k)
        if ((bits >> k) & 1U) s.insert(offset + k);
    return s;
}

RootSet random_subset(const RootSet& pool, std::mt19937_64& rng) {
    RootSet s(pool.rank());
    pool.for_each_index([&](int k) {
        if (rng() & 1U) s.insert(k);
    });
    return s;
}

// Half of the random candidates are ideals with one root toggled, so both
// answers of the predicates get exercised.
RootSet random_candidate(const RootSystem& rs, const RootSet& pool, std::mt19937_64& rng, bool near_ideal) {
    if (!near_ideal) return random_subset(pool, rng);
    const int n = rs.rank();
    const auto code = static_cast<std::uint32_t>(rng() % (std::uint64_t{1} << n));
    RootSet s = IncreasingSet::from_code(n, code).members();
    const auto members = pool.indices();
    const int k = members[static_cast<std::size_t>(rng() % members.size())];
    if (rng() % 4 != 0) {
        if (s.contains(k)) s.erase(k); else s.insert(k);
    }
    return s;
}

Json listed(const std::vector<RootSet>& bad) {
    Json out = Json::array();
    for (const auto& s : bad) out.push_back(s.names());
    return out;
}

constexpr std::size_t kListed = 5;

} // namespace

VerificationReport verify_ideal_oracles(int n, std::size_t samples, std::uint64_t seed) {
    validate_rank(n);
    VerificationReport report(n, "oracle.ideals");
    const RootSystem rs(n);
    const int upper = rs.size() - diff_count(n);

    {
        Stopwatch clock;
        std::vector<RootSet> bad;
        std::uint64_t scanned = 0, increasing = 0;
        auto check = [&](const RootSet& s) {
            ++scanned;
            const bool inc = is_increasing(s);
            increasing += inc;
            if (inc != is_abelian_ideal_combinatorial(s, rs) && bad.size() < kListed) bad.push_back(s);
            return inc == is_abelian_ideal_combinatorial(s, rs);
        };
        bool ok = true;
        const bool exhaustive = n <= kExhaustiveUpperRank;
        if (exhaustive) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << upper); ++bits) ok &= check(upper_subset(rs, bits));
        } else {
            std::mt19937_64 rng(seed);
            for (std::size_t k = 0; k < samples; ++k)
                ok &= check(random_candidate(rs, rs.upper_roots(), rng, k % 2 == 1));
        }
        report.add("oracle.up_set_vs_dotted_sum",
                   "S within Phi1: S increasing <=> S + Phi+ closed in S and S + S disjoint from Phi+", ok,
                   Json{{"mode", exhaustive ? "exhaustive" : "sampled"},
                        {"scanned", scanned},
                        {"increasing", increasing},
                        {"discrepancies", listed(bad)}},
                   clock.seconds());
    }

    {
        Stopwatch clock;
        std::vector<RootSet> bad;
        std::uint64_t scanned = 0;
        bool ok = true;
        auto check = [&](const RootSet& s) {
            if ((s & rs.diff_roots()).empty()) return;
            ++scanned;
            if (is_abelian_ideal_combinatorial(s, rs)) {
                ok = false;
                if (bad.size() < kListed) bad.push_back(s);
            }
        };
        const bool exhaustive = n <= kExhaustiveFullRank;
        if (exhaustive) {
            const int total = rs.size();
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits)
                check(RootSet::from_words(n, bits, 0));
        } else {
            std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
            for (std::size_t k = 0; k < samples; ++k) {
                RootSet s = random_subset(rs.all(), rng);
                if ((s & rs.diff_roots()).empty()) s.insert(static_cast<int>(rng() % diff_count(n)));
                check(s);
            }
        }
        report.add("oracle.no_diff_roots", "an abelian ideal contains no e_i - e_j root", ok,
                   Json{{"mode", exhaustive ? "exhaustive" : "sampled"},
                        {"scanned", scanned},
                        {"violations", listed(bad)}},
                   clock.seconds());
    }
    return report;
}

VerificationReport verify_lie_oracle(int n, std::size_t samples, std::uint64_t seed) {
    validate_rank(n);
    VerificationReport report(n, "oracle.lie");
    const RootSystem rs(n);
    Stopwatch build;
    const StructureTable table(n);

    report.add("lie.weight_vectors", "[h_k, e_alpha] = alpha(h_k) e_alpha and X^T J + J X = 0",
               root_vectors_are_weight_vectors(n));
    report.add("lie.antisymmetry", "[e_alpha, e_beta] = -[e_beta, e_alpha]", table.is_antisymmetric());
    report.add("lie.jacobi", "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0", table.satisfies_jacobi(), Json::object(),
               build.seconds());

    const int upper = rs.size() - diff_count(n);
    if (n <= 4) {
        Stopwatch clock;
        std::vector<RootSet> bad;
        std::uint64_t ideals = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << upper); ++bits) {
            const RootSet s = upper_subset(rs, bits);
            const bool lie = is_abelian_ideal_lie(table, s);
            ideals += lie;
            if (lie != is_abelian_ideal_combinatorial(s, rs) && bad.size() < kListed) bad.push_back(s);
        }
        report.add("lie.upper_subsets", "matrix-level abelian ideal <=> dotted-sum test, all S within Phi1",
                   bad.empty(),
                   Json{{"scanned", std::uint64_t{1} << upper}, {"ideals", ideals}, {"discrepancies", listed(bad)}},
                   clock.seconds());
    }

    Stopwatch clock;
    std::mt19937_64 rng(seed);
    std::vector<RootSet> bad;
    std::uint64_t ideals = 0, with_diff = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        const RootSet s = random_candidate(rs, rs.all(), rng, k % 2 == 1);
        with_diff += !(s & rs.diff_roots()).empty();
        const bool lie = is_abelian_ideal_lie(table, s);
        ideals += lie;
        if (lie != is_abelian_ideal_combinatorial(s, rs) && bad.size() < kListed) bad.push_back(s);
    }
    report.add("lie.random_subsets", "matrix-level abelian ideal <=> dotted-sum test, seeded S within Phi+",
               bad.empty(),
               Json{{"samples", samples},
                    {"seed", seed},
                    {"ideals", ideals},
                    {"containing_diff_roots", with_diff},
                    {"discrepancies", listed(bad)}},
               clock.seconds());
    return report;
}

} // namespace abelcoh
