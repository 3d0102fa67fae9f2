#include "abelcoh/exact_rank.hpp"

#include <utility>

namespace abelcoh {

void BigIntMatrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
}

std::size_t bareiss_rank(BigIntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    mpz_class previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, rank);
        const mpz_class& p = m(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const mpz_class factor = m(r, c);
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class& entry = m(r, k);
                entry = entry * p - factor * m(rank, k);
                mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), previous.get_mpz_t());
            }
            m(r, c) = 0;
        }
        previous = m(rank, c);
        ++rank;
    }
    return rank;
}

std::size_t rational_rank(const std::vector<std::vector<mpq_class>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    BigIntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        mpz_class scale = 1;
        for (const auto& q : rows[r]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class scaled = rows[r][c] * mpq_class(scale);
            m(r, c) = scaled.get_num();
        }
    }
    return bareiss_rank(std::move(m));
}

} // namespace abelcoh
