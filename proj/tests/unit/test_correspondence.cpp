#include "abelcoh/correspondence.hpp"
#include "abelcoh/error.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace abelcoh;

namespace {

RootSet of(int n, std::initializer_list<Root> roots) {
    RootSet s(n);
    for (const Root& r : roots) s.insert(r);
    return s;
}

IncreasingSet ideal(int n, std::initializer_list<Root> roots) { return IncreasingSet::from_members(of(n, roots)); }

const SignedPerm r1 = SignedPerm::reflection(2, 1);
const SignedPerm r2 = SignedPerm::reflection(2, 2);
const Perm swap2 = Perm::parse("(2,1)");

} // namespace

TEST_CASE("eta") {
    CHECK(eta(r1) == swap2);
    CHECK(eta(r2) == Perm::identity(2));
    enumerate_perms(4, [](const Perm& s) { CHECK(eta(SignedPerm(s, 0)) == s); });
}

TEST_CASE("closed form for eta") {
    CHECK(eta_formula(standard_form(r1)) == swap2);
    CHECK(eta_formula(standard_form(r2)) == Perm::identity(2));
    CHECK(eta_formula(standard_form(SignedPerm(Perm::parse("(3,1,2)"), 0))) == Perm::parse("(3,1,2)"));
    // with the j's ordered by their position in sigma0 the closed form is exact
    for (int n = 1; n <= 6; ++n)
        enumerate_group(n, 8, [](const SignedPerm& w) {
            CHECK(eta_formula(standard_form(w, JOrder::ByPosition)) == eta(w));
        });
    // ordering by image differs once two reflections are present
    const SignedPerm w = SignedPerm::parse("[-2,3,-1]");
    CHECK(eta_formula(standard_form(w, JOrder::ByImage)) != eta(w));
}

TEST_CASE("xi") {
    CHECK(xi(r1).members() == of(2, {Root::twice(1), Root::sum(1, 2)}));
    CHECK(xi(r2).members() == of(2, {Root::twice(1)}));
    enumerate_perms(4, [](const Perm& s) { CHECK(xi(SignedPerm(s, 0)).members().empty()); });
}

TEST_CASE("closed form for xi under the three bound readings") {
    CHECK(xi_formula(standard_form(r1)) == of(2, {Root::twice(1), Root::sum(1, 2)}));
    CHECK(xi_formula(standard_form(r2)) == of(2, {Root::twice(1)}));
    CHECK(xi_formula(standard_form(r2), BoundReading::Literal) != xi(r2).members());
    CHECK(xi_formula(standard_form(SignedPerm::identity(3))).empty());

    for (int n = 1; n <= 6; ++n)
        enumerate_group(n, 8, [](const SignedPerm& w) {
            const RootSet truth = xi(w).members();
            CHECK(xi_formula(standard_form(w, JOrder::ByPosition), BoundReading::Offset) == truth);
            if (w.negated_count() <= 1)
                CHECK(xi_formula(standard_form(w), BoundReading::Subscripted) == truth);
        });
    // two reflections: the subscripted bound loses e2+e2's row
    const SignedPerm both = SignedPerm::parse("[-1,-2]");
    CHECK(xi(both).members() == split(2).second);
    CHECK(xi_formula(standard_form(both), BoundReading::Subscripted) != xi(both).members());
}

TEST_CASE("pair, inverse and support") {
    CHECK(pair(r1) == CorrespondencePair{swap2, ideal(2, {Root::twice(1), Root::sum(1, 2)})});
    CHECK(pair(SignedPerm::identity(3)) == CorrespondencePair{Perm::identity(3), IncreasingSet(3)});
    CHECK(pair(r2) == CorrespondencePair{Perm::identity(2), ideal(2, {Root::twice(1)})});

    CHECK(inverse(Perm::identity(3), IncreasingSet(3)) == SignedPerm::identity(3));
    CHECK(inverse(swap2, ideal(2, {Root::twice(1), Root::sum(1, 2)})) == r1);
    CHECK(inverse(Perm::identity(2), ideal(2, {Root::twice(1)})) == r2);

    CHECK(l_support(Perm::identity(2), IncreasingSet(2)).empty());
    CHECK(l_support(swap2, ideal(2, {Root::twice(1), Root::sum(1, 2)})) == inversion_set(r1));
    CHECK(l_support(Perm::identity(2), ideal(2, {Root::twice(1)})) == of(2, {Root::twice(2)}));
}

TEST_CASE("round trips both ways") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::pair<Perm, std::uint32_t>, SignedPerm> image;
        enumerate_group(n, 8, [&](const SignedPerm& w) {
            const auto p = pair(w);
            CHECK(image.emplace(std::make_pair(p.eta, p.xi.code()), w).second);
            const auto traced = inverse_traced(p.eta, p.xi);
            CHECK(traced.element == w);
            CHECK_FALSE(traced.used_fallback);
            CHECK(l_support(p.eta, p.xi) == inversion_set(w));
            CHECK(length(w) == perm_inversions(p.eta).size() + p.xi.dimension());
        });
        std::uint64_t hits = 0;
        enumerate_perms(n, [&](const Perm& s) {
            for (const auto& psi : enumerate_increasing(n)) {
                CHECK(pair(inverse(s, psi)) == CorrespondencePair{s, psi});
                hits += image.count({s, psi.code()});
            }
        });
        CHECK(hits == group_order(n));
    }
}

TEST_CASE("sigma_l reverses the order on Phi1") {
    for (int n = 1; n <= 6; ++n) {
        const Perm l = Perm::longest(n);
        CHECK(l * l == Perm::identity(n));
        const auto upper = split(n).second.roots();
        for (const Root& x : upper)
            for (const Root& y : upper) {
                const Root lx = Root::upper(l(x.i), l(x.j));
                const Root ly = Root::upper(l(y.i), l(y.j));
                CHECK(precedes(x, y) == precedes(ly, lx));
            }
    }
}

TEST_CASE("bijection report") {
    for (int n = 1; n <= 5; ++n) {
        BijectionOptions o;
        o.workers = 2;
        const auto report = verify_bijection(n, o);
        CHECK(report.passed());
        CHECK(report.data().at("elements").get<std::uint64_t>() == group_order(n));
        CHECK(report.data().at("inverse_fallbacks").get<std::uint64_t>() == 0);
        // worker count does not change the output
        CHECK(report.to_json().dump() == verify_bijection(n).to_json().dump());
    }
    CHECK_THROWS_AS(verify_bijection(9), CapExceeded);
}

TEST_CASE("witness trace") {
    const Json t = witness_trace(SignedPerm::parse("[2,-1]"));
    CHECK(t.at("inversion_set") == Json{"e1-e2", "2e1"});
    CHECK(t.at("support_matches") == true);
    CHECK(t.at("inverse") == "[2,-1]");
}
