#include "abelcoh/error.hpp"
#include "abelcoh/roots.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace abelcoh;

TEST_CASE("positive roots: counts, order and split") {
    CHECK(positive_roots(1) == std::vector<Root>{Root::twice(1)});
    CHECK(positive_roots(2) == std::vector<Root>{Root::diff(1, 2), Root::sum(1, 2), Root::twice(1), Root::twice(2)});
    CHECK(positive_roots(5).size() == 25);
    for (int n = 1; n <= 8; ++n) {
        const auto roots = positive_roots(n);
        CHECK(static_cast<int>(roots.size()) == n * n);
        const auto [phi0, phi1] = split(n);
        CHECK(phi0.size() == n * (n - 1) / 2);
        CHECK(phi1.size() == n * (n + 1) / 2);
        CHECK((phi0 & phi1).empty());
        CHECK((phi0 | phi1) == all_positive(n));
        // canonical order agrees with the hand-written coefficient list
        const auto vecs = oracle::root_vectors(n);
        for (int k = 0; k < n * n; ++k) {
            CHECK(coefficients(roots[static_cast<std::size_t>(k)], n) == vecs[static_cast<std::size_t>(k)]);
            CHECK(root_index(roots[static_cast<std::size_t>(k)], n) == k);
            CHECK(root_at(k, n) == roots[static_cast<std::size_t>(k)]);
        }
    }
    const auto [phi0, phi1] = split(2);
    CHECK(phi0.roots() == std::vector<Root>{Root::diff(1, 2)});
    CHECK(phi1.roots() == std::vector<Root>{Root::sum(1, 2), Root::twice(1), Root::twice(2)});
    CHECK(split(1).first.empty());
    CHECK(split(3).first.size() == 3);
    CHECK(split(3).second.size() == 6);
}

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(positive_roots(0), InvalidArgument);
    CHECK_THROWS_AS(validate_rank(kMaxRank + 1), InvalidArgument);
    CHECK_THROWS_AS(validate_root(Root::diff(2, 1), 3), InvalidArgument);
    CHECK_THROWS_AS(validate_root(Root::twice(4), 3), InvalidArgument);
}

TEST_CASE("display syntax round-trips") {
    CHECK(to_string(Root::twice(1)) == "2e1");
    CHECK(to_string(Root::sum(1, 2)) == "e1+e2");
    CHECK(to_string(Root::diff(1, 2)) == "e1-e2");
    for (int n = 1; n <= kMaxRank; ++n)
        for (const Root& r : positive_roots(n)) CHECK(parse_root(to_string(r)) == r);
    CHECK_THROWS_AS(parse_root("e2-e1"), InvalidArgument);
    CHECK_THROWS_AS(parse_root("3e1"), InvalidArgument);
    CHECK_THROWS_AS(parse_root(""), InvalidArgument);
    CHECK_THROWS_AS(parse_root("e1+e1"), InvalidArgument);
    CHECK_THROWS_AS(parse_root("e1*e2"), InvalidArgument);
}

TEST_CASE("dotted sums") {
    CHECK(dotted_sum(Root::diff(1, 2), Root::twice(2), 2) == Root::sum(1, 2));
    CHECK(dotted_sum(Root::diff(1, 2), Root::sum(1, 2), 2) == Root::twice(1));
    CHECK_FALSE(dotted_sum(Root::twice(1), Root::twice(2), 2).has_value());
    for (int n = 1; n <= 8; ++n) {
        const auto roots = positive_roots(n);
        const auto vecs = oracle::root_vectors(n);
        for (std::size_t a = 0; a < roots.size(); ++a)
            for (std::size_t b = 0; b < roots.size(); ++b) {
                const auto s = dotted_sum(roots[a], roots[b], n);
                CHECK(s == dotted_sum(roots[b], roots[a], n));
                std::vector<int> v(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) v[k] = vecs[a][k] + vecs[b][k];
                const int idx = oracle::find_root(vecs, v);
                CHECK(s.has_value() == (idx >= 0));
                if (s) CHECK(root_index(*s, n) == idx);
            }
    }
}

TEST_CASE("partial order on Phi1") {
    CHECK(precedes(Root::twice(2), Root::sum(1, 2)));
    CHECK(precedes(Root::sum(1, 2), Root::sum(1, 2)));
    CHECK_FALSE(precedes(Root::sum(1, 3), Root::twice(2)));
    CHECK_FALSE(precedes(Root::twice(2), Root::sum(1, 3)));
    CHECK_THROWS_AS(precedes(Root::diff(1, 2), Root::twice(1)), InvalidArgument);
    for (int n = 1; n <= 8; ++n) {
        const auto upper = split(n).second.roots();
        for (const Root& x : upper) {
            CHECK(precedes(x, Root::twice(1)));
            for (const Root& y : upper) {
                if (precedes(x, y) && precedes(y, x)) CHECK(x == y);
                for (const Root& z : upper)
                    if (precedes(x, y) && precedes(y, z)) CHECK(precedes(x, z));
            }
        }
    }
}

TEST_CASE("root sets") {
    RootSet s(3);
    s.insert(Root::twice(1));
    s.insert(Root::diff(1, 2));
    CHECK(s.size() == 2);
    CHECK(s.names() == std::vector<std::string>{"e1-e2", "2e1"});
    CHECK(s.contains(Root::twice(1)));
    CHECK_FALSE(s.contains(Root::twice(2)));
    CHECK(s.count_above(0) == 1);
    const RootSet big = all_positive(kMaxRank);
    CHECK(big.size() == kMaxRank * kMaxRank);
    CHECK(big.indices().back() == kMaxRank * kMaxRank - 1);
}
