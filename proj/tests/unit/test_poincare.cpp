#include "abelcoh/error.hpp"
#include "abelcoh/identities.hpp"
#include "abelcoh/ideals.hpp"
#include "abelcoh/poincare.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace abelcoh;

using C = std::vector<std::int64_t>;

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial a({1, 1});
    const IntPolynomial b({1, 0, 1});
    CHECK((a * b).coefficients() == C{1, 1, 1, 1});
    CHECK((a + b).coefficients() == C{2, 1, 1});
    CHECK((a - a).is_zero());
    CHECK(IntPolynomial({1, 2, 0, 0}).coefficients() == C{1, 2});
    CHECK(IntPolynomial::geometric(3).coefficients() == C{1, 1, 1});
    const auto [q, r] = IntPolynomial({1, 0, 0, -1}).divmod(IntPolynomial({1, -1}));
    CHECK(q.coefficients() == C{1, 1, 1});
    CHECK(r.is_zero());
    CHECK_THROWS_AS(IntPolynomial({1, 0, 1}).exact_div(IntPolynomial({1, 1})), InternalInconsistency);
    CHECK(IntPolynomial({1, 2, 1}).is_palindromic());
    CHECK_FALSE(IntPolynomial({1, 2}).is_palindromic());
    CHECK(IntPolynomial({1, 2, 1}).to_string() == "1 + 2t + t^2");
}

TEST_CASE("generating functions") {
    CHECK(weyl_poincare(1).coefficients() == C{1, 1});
    CHECK(weyl_poincare(2).coefficients() == C{1, 2, 2, 2, 1});
    CHECK(weyl_poincare(3).sum() == 48);
    CHECK(sym_poincare(1).coefficients() == C{1});
    CHECK(sym_poincare(2).coefficients() == C{1, 1});
    CHECK(sym_poincare(3).coefficients() == C{1, 2, 2, 1});
    CHECK(ideal_generating(2).coefficients() == C{1, 1, 1, 1});
    CHECK(ideal_generating(3).coefficients() == C{1, 1, 1, 2, 1, 1, 1});
    for (int n = 1; n <= 10; ++n) {
        CHECK(weyl_poincare(n).coefficients() == oracle::geometric_product(n, 2));
        CHECK(sym_poincare(n).coefficients() == oracle::geometric_product(n, 1));
        CHECK(ideal_generating(n).coefficients() == oracle::distinct_parts(n));
        CHECK(ideal_generating_by_division(n) == ideal_generating(n));
        CHECK(ideal_generating(n).sum() == (std::int64_t{1} << n));
        CHECK(weyl_poincare(n).is_palindromic());
        CHECK(sym_poincare(n).is_palindromic());
        CHECK(ideal_generating(n).is_palindromic());
        const auto [q, r] = weyl_poincare(n).divmod(sym_poincare(n));
        CHECK(r.is_zero());
        CHECK(weyl_poincare(n) == sym_poincare(n) * ideal_generating(n));
    }
}

TEST_CASE("enumerated histograms") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(weyl_length_histogram(n, 8, 1) == weyl_poincare(n));
        CHECK(weyl_length_histogram(n, 8, 3) == weyl_poincare(n));
        CHECK(sym_length_histogram(n) == sym_poincare(n));
    }
    for (int n = 1; n <= 8; ++n) CHECK(dimension_histogram(n) == ideal_generating(n));
    CHECK_THROWS_AS(weyl_length_histogram(9, 8, 1), CapExceeded);
}

TEST_CASE("identity report") {
    IdentityOptions o;
    o.cohomology = CohomologyOptions{};
    for (int n = 1; n <= 4; ++n) {
        const auto report = verify_identities(n, o);
        CHECK(report.passed());
        CHECK((report.find("poincare.betti") != nullptr) == (n <= 3));
    }
    const auto r2 = verify_identities(2, o);
    CHECK(r2.find("poincare.convolution")->detail.at("convolution") == Json{1, 2, 2, 2, 1});
}
