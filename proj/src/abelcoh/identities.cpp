#include "abelcoh/identities.hpp"

#include "abelcoh/error.hpp"
#include "abelcoh/ideals.hpp"

namespace abelcoh {

namespace {

Json coeffs(const IntPolynomial& p) {
    return p.coefficients();
}

} // namespace

VerificationReport verify_identities(int n, const IdentityOptions& options) {
    validate_rank(n);
    VerificationReport report(n, "poincare");
    const IntPolynomial weyl = weyl_poincare(n);
    const IntPolynomial sym = sym_poincare(n);
    const IntPolynomial ideal = ideal_generating(n);

    Stopwatch clock;
    const IntPolynomial weyl_hist = weyl_length_histogram(n, options.combinatorial_cap, options.workers);
    report.add("poincare.weyl_histogram", "sum_w t^{|Phi_w|} = prod (1 - t^{2i}) / (1 - t)^n", weyl_hist == weyl,
               Json{{"enumerated", coeffs(weyl_hist)}, {"formula", coeffs(weyl)}}, clock.seconds());

    const IntPolynomial sym_hist = sym_length_histogram(n);
    report.add("poincare.sym_histogram", "sum_sigma t^{|Phi_sigma|} = prod (1 - t^i) / (1 - t)^n", sym_hist == sym,
               Json{{"enumerated", coeffs(sym_hist)}, {"formula", coeffs(sym)}});

    const IntPolynomial ideal_hist = dimension_histogram(n);
    report.add("poincare.ideal_histogram", "sum_I t^{dim I} = prod (1 + t^i)", ideal_hist == ideal,
               Json{{"enumerated", coeffs(ideal_hist)}, {"formula", coeffs(ideal)}});

    const auto [quotient, remainder] = weyl.divmod(sym);
    report.add("poincare.exact_division", "W(t) / S_n(t) = prod (1 + t^i) with zero remainder",
               remainder.is_zero() && quotient == ideal,
               Json{{"quotient", coeffs(quotient)}, {"remainder", coeffs(remainder)}});

    const IntPolynomial convolution = sym_hist * ideal_hist;
    report.add("poincare.convolution", "b_i = sum_{j+k=i} |S_n^(j)| |I^(k)|", convolution == weyl_hist,
               Json{{"convolution", coeffs(convolution)}});

    report.add("poincare.palindromic", "all generating functions are palindromic",
               weyl.is_palindromic() && sym.is_palindromic() && ideal.is_palindromic());

    if (options.cohomology) {
        const auto& co = *options.cohomology;
        bool within_cap = true;
        try {
            check_cohomology_cap(n, co);
        } catch (const CapExceeded&) {
            within_cap = false;
        }
        if (within_cap) {
            Stopwatch betti_clock;
            const BettiResult betti = betti_numbers(n, co);
            report.add("poincare.betti", "dim H^i(n) = #{w : |Phi_w| = i}", IntPolynomial(betti.betti) == weyl,
                       Json{{"betti", betti.betti}, {"formula", coeffs(weyl)}}, betti_clock.seconds());
        } else {
            report.data()["betti_skipped"] = "rank above the cohomology cap";
        }
    }

    report.data()["weyl"] = coeffs(weyl);
    report.data()["sym"] = coeffs(sym);
    report.data()["ideal"] = coeffs(ideal);
    report.data()["ideal_by_division"] = coeffs(quotient);
    return report;
}

} // namespace abelcoh
