#include "abelcoh/poincare.hpp"

#include "abelcoh/error.hpp"
#include "abelcoh/roots.hpp"
#include "abelcoh/weyl.hpp"
#include "abelcoh/workers.hpp"

#include <algorithm>

namespace abelcoh {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::geometric(int len) {
    return IntPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(len), 1));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::sum() const {
    std::int64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
}

bool IntPolynomial::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
    const std::int64_t lead = divisor.coeffs_.back();
    if (lead != 1 && lead != -1) throw InvalidArgument("divisor must be monic up to sign");
    std::vector<std::int64_t> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {IntPolynomial{}, *this};
    std::vector<std::int64_t> quot(rem.size() - dd, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const std::int64_t q = rem[k] * lead;
        quot[k - dd] = q;
        if (q == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= q * divisor.coeffs_[i];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) {
        throw InternalInconsistency("division of " + to_string() + " by " + divisor.to_string() +
                                    " leaves remainder " + r.to_string());
    }
    return q;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (k == 0 || a != 1) s += std::to_string(a);
        if (k >= 1) s += "t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

namespace {

// (1 - t^degree) / (1 - t)
IntPolynomial cyclotomic_quotient(int degree) {
    std::vector<std::int64_t> numerator(static_cast<std::size_t>(degree + 1), 0);
    numerator.front() = 1;
    numerator.back() = -1;
    return IntPolynomial(std::move(numerator)).exact_div(IntPolynomial({1, -1}));
}

} // namespace

IntPolynomial weyl_poincare(int n) {
    validate_rank(n);
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i) p = p * cyclotomic_quotient(2 * i);
    return p;
}

IntPolynomial sym_poincare(int n) {
    validate_rank(n);
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i) p = p * cyclotomic_quotient(i);
    return p;
}

IntPolynomial ideal_generating(int n) {
    validate_rank(n);
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> factor(static_cast<std::size_t>(i + 1), 0);
        factor.front() = 1;
        factor.back() = 1;
        p = p * IntPolynomial(std::move(factor));
    }
    return p;
}

IntPolynomial ideal_generating_by_division(int n) {
    return weyl_poincare(n).exact_div(sym_poincare(n));
}

IntPolynomial weyl_length_histogram(int n, int cap, unsigned workers) {
    check_group_cap(n, cap);
    const std::size_t masks = std::size_t{1} << n;
    auto partial = map_chunks<std::vector<std::int64_t>>(masks, workers, [n](std::size_t mask) {
        std::vector<std::int64_t> h(static_cast<std::size_t>(n * n + 1), 0);
        for_each_element(n, static_cast<std::uint32_t>(mask), static_cast<std::uint32_t>(mask + 1),
                         [&](const SignedPerm& w) { ++h[static_cast<std::size_t>(length(w))]; });
        return h;
    });
    std::vector<std::int64_t> total(static_cast<std::size_t>(n * n + 1), 0);
    for (const auto& h : partial)
        for (std::size_t k = 0; k < h.size(); ++k) total[k] += h[k];
    return IntPolynomial(std::move(total));
}

IntPolynomial sym_length_histogram(int n) {
    validate_rank(n);
    std::vector<std::int64_t> h(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
    enumerate_perms(n, [&](const Perm& p) { ++h[static_cast<std::size_t>(perm_inversions(p).size())]; });
    return IntPolynomial(std::move(h));
}

} // namespace abelcoh
