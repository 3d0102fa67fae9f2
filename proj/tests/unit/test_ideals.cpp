#include "abelcoh/error.hpp"
#include "abelcoh/ideals.hpp"
#include "abelcoh/oracles.hpp"
#include "abelcoh/poincare.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace abelcoh;

namespace {

RootSet of(int n, std::initializer_list<Root> roots) {
    RootSet s(n);
    for (const Root& r : roots) s.insert(r);
    return s;
}

std::set<std::pair<int, int>> pairs_of(const RootSet& s) {
    std::set<std::pair<int, int>> out;
    for (const Root& r : s.roots()) out.insert({r.i, r.j});
    return out;
}

} // namespace

TEST_CASE("enumeration of increasing sets") {
    CHECK(enumerate_increasing(1).size() == 2);
    const auto two = enumerate_increasing(2);
    std::set<RootSet> got;
    for (const auto& s : two) got.insert(s.members());
    CHECK(got == std::set<RootSet>{RootSet(2), of(2, {Root::twice(1)}), of(2, {Root::twice(1), Root::sum(1, 2)}),
                                   of(2, {Root::twice(1), Root::sum(1, 2), Root::twice(2)})});
    CHECK(enumerate_increasing(8).size() == 256);

    // brute force over all subsets of Phi1 with the pair-level up-set test
    for (int n = 1; n <= 5; ++n) {
        std::set<RootSet> brute;
        const RootSystem rs(n);
        const auto upper = rs.upper_roots().indices();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << upper.size()); ++bits) {
            RootSet s(n);
            for (std::size_t k = 0; k < upper.size(); ++k)
                if ((bits >> k) & 1U) s.insert(upper[k]);
            if (oracle::is_up_set(n, pairs_of(s))) brute.insert(s);
        }
        std::set<RootSet> enumerated;
        std::set<std::uint32_t> codes;
        for (const auto& s : enumerate_increasing(n)) {
            enumerated.insert(s.members());
            codes.insert(s.code());
            CHECK(IncreasingSet::from_code(n, s.code()) == s);
            CHECK(IncreasingSet::from_members(s.members()) == s);
            CHECK(IncreasingSet::from_bounds(n, s.bounds()) == s);
        }
        CHECK(enumerated == brute);
        CHECK(codes.size() == (std::size_t{1} << n));
    }
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_increasing(n).size() == (std::size_t{1} << n));
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(IncreasingSet::from_bounds(3, {2, 3}), InvalidArgument);
    CHECK_THROWS_AS(IncreasingSet::from_bounds(3, {4}), InvalidArgument);
    CHECK_THROWS_AS(IncreasingSet::from_bounds(3, {3, 1}), InvalidArgument);
    CHECK_THROWS_AS(IncreasingSet::from_members(of(2, {Root::twice(2)})), InvalidArgument);
    CHECK(IncreasingSet::from_bounds(3, {3, 2}).dimension() == 4);
}

TEST_CASE("up-set predicate") {
    CHECK(is_increasing(of(2, {Root::twice(1)})));
    CHECK_FALSE(is_increasing(of(2, {Root::twice(2)})));
    CHECK(is_increasing(RootSet(4)));
    CHECK_THROWS_AS(is_increasing(of(2, {Root::diff(1, 2)})), InvalidArgument);
}

TEST_CASE("dotted-sum predicate") {
    CHECK_FALSE(is_abelian_ideal_combinatorial(of(2, {Root::diff(1, 2)})));
    CHECK(is_abelian_ideal_combinatorial(of(2, {Root::twice(1), Root::sum(1, 2)})));
    for (int n = 1; n <= 8; ++n) CHECK(is_abelian_ideal_combinatorial(split(n).second));
    CHECK(is_abelian_ideal_combinatorial(RootSet(3)));
}

TEST_CASE("up-set test agrees with the dotted-sum test") {
    for (int n = 1; n <= 6; ++n) {
        const auto report = verify_ideal_oracles(n, 10000, 7);
        CHECK(report.passed());
        const auto* up = report.find("oracle.up_set_vs_dotted_sum");
        REQUIRE(up != nullptr);
        if (n <= 5) CHECK(up->detail.at("scanned").get<std::uint64_t>() == (std::uint64_t{1} << (n * (n + 1) / 2)));
        CHECK(up->detail.at("increasing").get<std::uint64_t>() > 0);
    }
}

TEST_CASE("no abelian ideal contains a difference root, exhaustively to rank 5") {
    for (int n = 2; n <= 5; ++n) {
        const RootSystem rs(n);
        const std::uint64_t diffs = (std::uint64_t{1} << diff_count(n)) - 1;
        std::uint64_t violations = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
            if ((bits & diffs) == 0) continue;
            violations += is_abelian_ideal_combinatorial(RootSet::from_words(n, bits, 0), rs);
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("dimension histogram") {
    CHECK(dimension_histogram(1).coefficients() == std::vector<std::int64_t>{1, 1});
    CHECK(dimension_histogram(2).coefficients() == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(dimension_histogram(3).coefficients() == std::vector<std::int64_t>{1, 1, 1, 2, 1, 1, 1});
    for (int n = 1; n <= 10; ++n) CHECK(dimension_histogram(n).coefficients() == oracle::distinct_parts(n));
}
