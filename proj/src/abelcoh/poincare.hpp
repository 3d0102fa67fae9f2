#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace abelcoh {

/// Dense polynomial in t with exact int64 coefficients; trailing zeros are
/// trimmed so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
    /// 1 + t + ... + t^{len-1}
    static IntPolynomial geometric(int len);

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Value at t = 1.
    std::int64_t sum() const;
    bool is_palindromic() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Quotient and remainder by a divisor with leading coefficient +-1.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const;
    /// Throws InternalInconsistency when the division leaves a remainder.
    IntPolynomial exact_div(const IntPolynomial& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// prod_{i=1..n} (1 - t^{2i}) / (1 - t)^n, the length generating function of
/// W(C_n).
IntPolynomial weyl_poincare(int n);

/// prod_{i=1..n} (1 - t^i) / (1 - t)^n, the length generating function of S_n.
IntPolynomial sym_poincare(int n);

/// prod_{i=1..n} (1 + t^i).
IntPolynomial ideal_generating(int n);

/// weyl_poincare / sym_poincare by exact long division.
IntPolynomial ideal_generating_by_division(int n);

/// Histogram of lengths over every W(C_n) element (enumeration, capped).
IntPolynomial weyl_length_histogram(int n, int cap, unsigned workers);
/// Histogram of inversion counts over S_n.
IntPolynomial sym_length_histogram(int n);

} // namespace abelcoh
