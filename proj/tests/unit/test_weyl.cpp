#include "abelcoh/error.hpp"
#include "abelcoh/weyl.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace abelcoh;

namespace {

RootSet from_indices(int n, const std::set<int>& idx) {
    RootSet s(n);
    for (int k : idx) s.insert(k);
    return s;
}

RootSet of(int n, std::initializer_list<Root> roots) {
    RootSet s(n);
    for (const Root& r : roots) s.insert(r);
    return s;
}

} // namespace

TEST_CASE("group enumeration") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> seen;
        std::uint64_t count = 0;
        enumerate_group(n, 8, [&](const SignedPerm& w) {
            ++count;
            seen.insert(w.signed_images());
        });
        CHECK(count == group_order(n));
        CHECK(seen.size() == count);
    }
    CHECK(group_order(1) == 2);
    CHECK(group_order(2) == 8);
    CHECK(group_order(8) == 10321920);
    CHECK_THROWS_AS(check_group_cap(9, 8), CapExceeded);
}

TEST_CASE("element syntax") {
    const SignedPerm w = SignedPerm::parse("[2,-1,3]");
    CHECK(w.image(1) == 2);
    CHECK(w.image(2) == -1);
    CHECK(w.image(3) == 3);
    CHECK(w.to_string() == "[2,-1,3]");
    CHECK(Perm::parse("(3,1,2)").to_string() == "(3,1,2)");
    CHECK_THROWS_AS(SignedPerm::parse("[2,2]"), InvalidArgument);
    CHECK_THROWS_AS(SignedPerm::parse("[1,-3]"), InvalidArgument);
    CHECK_THROWS_AS(Perm::parse("(1,2"), InvalidArgument);
}

TEST_CASE("action on roots") {
    const SignedPerm r1 = SignedPerm::reflection(2, 1);
    CHECK(act_on_root(r1, Root::diff(1, 2)) == SignedRoot{-1, Root::sum(1, 2)});
    CHECK(act_on_root(SignedPerm::identity(3), Root::sum(2, 3)) == SignedRoot{1, Root::sum(2, 3)});
    CHECK(act_on_root(SignedPerm(Perm::parse("(2,1)"), 0), Root::twice(1)) == SignedRoot{1, Root::twice(2)});

    // composition, exhaustive for n <= 3
    for (int n = 1; n <= 3; ++n) {
        std::vector<SignedPerm> all;
        enumerate_group(n, 8, [&](const SignedPerm& w) { all.push_back(w); });
        for (const auto& u : all)
            for (const auto& v : all)
                for (const Root& a : positive_roots(n)) {
                    const SignedRoot va = act_on_root(v, a);
                    SignedRoot uva = act_on_root(u, va.root);
                    uva.sign *= va.sign;
                    CHECK(act_on_root(u * v, a) == uva);
                }
    }
}

TEST_CASE("inversion sets") {
    const SignedPerm r1 = SignedPerm::reflection(2, 1);
    const SignedPerm r2 = SignedPerm::reflection(2, 2);
    CHECK(inversion_set(r1) == of(2, {Root::diff(1, 2), Root::sum(1, 2), Root::twice(1)}));
    CHECK(inversion_set(r2) == of(2, {Root::twice(2)}));
    CHECK(inversion_set(SignedPerm::identity(4)).empty());

    for (int n = 1; n <= 5; ++n) {
        std::set<RootSet> distinct;
        enumerate_group(n, 8, [&](const SignedPerm& w) {
            const RootSet phi = inversion_set(w);
            CHECK(phi == from_indices(n, oracle::inversion_indices(w)));
            CHECK(length(w) == phi.size());
            CHECK(distinct.insert(phi).second); // the inversion set determines w
            if (w.negated() == 0) CHECK(phi == perm_inversions(w.perm()));
        });
    }
    // longest element
    const SignedPerm w0 = SignedPerm::from_signed_images(std::vector<int>{-1, -2, -3});
    CHECK(inversion_set(w0) == all_positive(3));
}

TEST_CASE("permutation inversion sets") {
    CHECK(perm_inversions(Perm::parse("(2,1)")) == of(2, {Root::diff(1, 2)}));
    CHECK(perm_inversions(Perm::identity(5)).empty());
    // sigma = (3,1,2): sigma^{-1} = (2,3,1), so the pairs (1,3) and (2,3) invert
    CHECK(perm_inversions(Perm::parse("(3,1,2)")) == of(3, {Root::diff(1, 3), Root::diff(2, 3)}));

    CHECK(perm_from_inversions(RootSet(3)) == Perm::identity(3));
    CHECK(perm_from_inversions(of(2, {Root::diff(1, 2)})) == Perm::parse("(2,1)"));
    CHECK_FALSE(perm_from_inversions(of(3, {Root::diff(1, 3)})).has_value());

    for (int n = 1; n <= 6; ++n) {
        std::uint64_t valid = 0;
        const int d = diff_count(n);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
            const RootSet s = RootSet::from_words(n, bits, 0);
            const auto p = perm_from_inversions(s);
            if (p) {
                ++valid;
                CHECK(perm_inversions(*p) == s);
            }
        }
        CHECK(valid == factorial(n));
    }
}

TEST_CASE("standard form") {
    const SignedPerm r1 = SignedPerm::reflection(2, 1);
    auto sf = standard_form(r1);
    CHECK(sf.j_list == std::vector<int>{1});
    CHECK(sf.sigma0 == Perm::identity(2));
    sf = standard_form(SignedPerm::identity(3));
    CHECK(sf.j_list.empty());
    const SignedPerm w(Perm::parse("(2,1)"), 0b11);
    sf = standard_form(w);
    CHECK(sf.j_list == std::vector<int>{2, 1});
    CHECK(sf.sigma0 == Perm::parse("(2,1)"));

    for (int n = 1; n <= 6; ++n)
        enumerate_group(n, 8, [&](const SignedPerm& x) {
            for (JOrder order : {JOrder::ByImage, JOrder::ByPosition}) {
                const auto s = standard_form(x, order);
                CHECK(recompose(s) == x);
            }
            const auto s = standard_form(x);
            for (std::size_t k = 1; k < s.j_list.size(); ++k)
                CHECK(s.sigma0(s.j_list[k - 1]) < s.sigma0(s.j_list[k]));
        });
}

TEST_CASE("group law") {
    for (int n = 1; n <= 4; ++n)
        enumerate_group(n, 8, [&](const SignedPerm& w) {
            CHECK(w * w.inverse() == SignedPerm::identity(n));
            CHECK(w.inverse() * w == SignedPerm::identity(n));
        });
}
