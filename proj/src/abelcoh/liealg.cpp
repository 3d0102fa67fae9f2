#include "abelcoh/liealg.hpp"

#include "abelcoh/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace abelcoh {

IntMatrix IntMatrix::unit(int dim, int row, int col) {
    IntMatrix m(dim);
    m(row, col) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw InvalidArgument("matrix dimension mismatch");
    IntMatrix z(x.dim_);
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] = x.a_[k] + y.a_[k];
    return z;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw InvalidArgument("matrix dimension mismatch");
    IntMatrix z(x.dim_);
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
    return z;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw InvalidArgument("matrix dimension mismatch");
    const int d = x.dim_;
    IntMatrix z(d);
    for (int i = 1; i <= d; ++i)
        for (int k = 1; k <= d; ++k) {
            const std::int64_t xik = x(i, k);
            if (xik == 0) continue;
            for (int j = 1; j <= d; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& x) {
    IntMatrix z = x;
    for (auto& v : z.a_) v *= s;
    return z;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(dim_);
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string IntMatrix::to_string() const {
    std::string s;
    for (int i = 1; i <= dim_; ++i) {
        s += '[';
        for (int j = 1; j <= dim_; ++j) {
            if (j > 1) s += ' ';
            s += std::to_string((*this)(i, j));
        }
        s += "]\n";
    }
    return s;
}

IntMatrix symplectic_form(int n) {
    IntMatrix j(2 * n);
    for (int k = 1; k <= n; ++k) {
        j(k, n + k) = 1;
        j(n + k, k) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& x) {
    const IntMatrix j = symplectic_form(x.dim() / 2);
    return (x.transpose() * j + j * x).is_zero();
}

IntMatrix root_vector(int n, const Root& alpha) {
    validate_root(alpha, n);
    const int d = 2 * n;
    const int i = alpha.i;
    const int j = alpha.j;
    switch (alpha.kind) {
    case RootKind::Diff:
        return IntMatrix::unit(d, i, j) - IntMatrix::unit(d, n + j, n + i);
    case RootKind::Sum:
        return IntMatrix::unit(d, i, n + j) + IntMatrix::unit(d, j, n + i);
    case RootKind::Long:
        return IntMatrix::unit(d, i, n + i);
    }
    return IntMatrix(d);
}

IntMatrix cartan_basis(int n, int k) {
    return IntMatrix::unit(2 * n, k, k) - IntMatrix::unit(2 * n, n + k, n + k);
}

IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim() != y.dim()) throw InvalidArgument("bracket of matrices with different dimensions");
    return x * y - y * x;
}

namespace {

// c with m == c * v, if any.
std::optional<std::int64_t> proportion(const IntMatrix& m, const IntMatrix& v) {
    const int d = v.dim();
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c) {
            if (v(r, c) == 0) continue;
            if (m(r, c) % v(r, c) != 0) return std::nullopt;
            const std::int64_t coeff = m(r, c) / v(r, c);
            if (coeff * v == m) return coeff;
            return std::nullopt;
        }
    return std::nullopt;
}

} // namespace

StructureTable::StructureTable(int n) : n_(n), size_(root_count(n)) {
    validate_rank(n);
    const auto roots = positive_roots(n);
    std::vector<IntMatrix> vectors;
    vectors.reserve(roots.size());
    for (const Root& r : roots) vectors.push_back(root_vector(n, r));
    entries_.assign(static_cast<std::size_t>(size_ * size_), {});
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            const IntMatrix m = bracket(vectors[a], vectors[b]);
            if (m.is_zero()) continue;
            const auto sum = dotted_sum(roots[a], roots[b], n);
            if (!sum) {
                throw InternalInconsistency("[e_" + to_string(roots[a]) + ", e_" + to_string(roots[b]) +
                                            "] is nonzero but the sum is not a root");
            }
            const int g = root_index(*sum, n);
            const auto c = proportion(m, vectors[g]);
            if (!c) {
                throw InternalInconsistency("[e_" + to_string(roots[a]) + ", e_" + to_string(roots[b]) +
                                            "] is not a multiple of e_" + to_string(*sum));
            }
            entries_[static_cast<std::size_t>(a * size_ + b)] = {g, *c};
        }
    }
}

std::vector<StructureTable::Row> StructureTable::nonzero() const {
    std::vector<Row> rows;
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b) {
            const auto& e = (*this)(a, b);
            if (e.target >= 0) rows.push_back({a, b, e.target, e.coeff});
        }
    return rows;
}

bool StructureTable::is_antisymmetric() const {
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b) {
            const auto& x = (*this)(a, b);
            const auto& y = (*this)(b, a);
            if (x.target != y.target || x.coeff != -y.coeff) return false;
        }
    return true;
}

bool StructureTable::satisfies_jacobi() const {
    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] as a sparse vector over root indices
    auto nested = [this](int x, int y, int z, std::map<int, std::int64_t>& acc) {
        const auto& inner = (*this)(y, z);
        if (inner.target < 0) return;
        const auto& outer = (*this)(x, inner.target);
        if (outer.target < 0) return;
        acc[outer.target] += inner.coeff * outer.coeff;
    };
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            for (int c = 0; c < size_; ++c) {
                std::map<int, std::int64_t> acc;
                nested(a, b, c, acc);
                nested(b, c, a, acc);
                nested(c, a, b, acc);
                for (const auto& [k, v] : acc)
                    if (v != 0) return false;
            }
    return true;
}

bool is_abelian_ideal_lie(const StructureTable& table, const RootSet& psi) {
    if (psi.rank() != table.rank()) throw InvalidArgument("rank mismatch between table and root set");
    bool ok = true;
    psi.for_each_index([&](int a) {
        for (int b = 0; b < table.size() && ok; ++b) {
            const auto& e = table(b, a);
            if (e.target < 0 || e.coeff == 0) continue;
            if (!psi.contains(e.target)) ok = false;  // [n, I] leaves I
            if (psi.contains(b)) ok = false;          // [I, I] != 0
        }
    });
    return ok;
}

bool is_abelian_ideal_lie(int n, const RootSet& psi) {
    return is_abelian_ideal_lie(StructureTable(n), psi);
}

bool root_vectors_are_weight_vectors(int n) {
    for (const Root& r : positive_roots(n)) {
        const IntMatrix e = root_vector(n, r);
        if (!is_symplectic(e)) return false;
        const auto weight = coefficients(r, n);
        for (int k = 1; k <= n; ++k) {
            const IntMatrix h = cartan_basis(n, k);
            if (!is_symplectic(h)) return false;
            if (bracket(h, e) != weight[static_cast<std::size_t>(k - 1)] * e) return false;
        }
    }
    return true;
}

} // namespace abelcoh
