#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace abelcoh {

/// Dense row-major matrix of arbitrary-precision integers.
class BigIntMatrix {
public:
    BigIntMatrix() = default;
    BigIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> a_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Every division in the
/// update is exact, so entries stay integral and bounded by minors of the input.
std::size_t bareiss_rank(BigIntMatrix m);

/// Rank of a rational matrix: each row is scaled by the lcm of its
/// denominators, then bareiss_rank.
std::size_t rational_rank(const std::vector<std::vector<mpq_class>>& rows);

} // namespace abelcoh
