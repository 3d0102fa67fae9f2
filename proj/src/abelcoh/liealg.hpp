#pragma once

#include "abelcoh/roots.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abelcoh {

/// Square matrix over exact 64-bit integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim * dim), 0) {}

    /// E_{row,col} (1-based).
    static IntMatrix unit(int dim, int row, int col);

    int dim() const { return dim_; }
    std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>((r - 1) * dim_ + (c - 1))]; }
    std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>((r - 1) * dim_ + (c - 1))]; }
    bool is_zero() const;

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(std::int64_t s, const IntMatrix& x);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    IntMatrix transpose() const;
    std::string to_string() const;

private:
    int dim_ = 0;
    std::vector<std::int64_t> a_;
};

/// Symplectic form J = [[0, I_n], [-I_n, 0]].
IntMatrix symplectic_form(int n);

/// X^T J + J X == 0.
bool is_symplectic(const IntMatrix& x);

/// Root vectors of sp(2n):
///   e_{e_i-e_j} = E_{ij} - E_{n+j,n+i}
///   e_{e_i+e_j} = E_{i,n+j} + E_{j,n+i}
///   e_{2e_i}    = E_{i,n+i}
IntMatrix root_vector(int n, const Root& alpha);

/// diag(e_k, -e_k): the k-th coordinate Cartan element.
IntMatrix cartan_basis(int n, int k);

/// XY - YX. Throws InvalidArgument on a dimension mismatch.
IntMatrix bracket(const IntMatrix& x, const IntMatrix& y);

/// [e_alpha, e_beta] = coeff * e_{target}, or zero when target < 0.
struct StructureEntry {
    int target = -1;
    std::int64_t coeff = 0;
};

/// Brackets of the nilradical n = sum of positive root spaces, read off the
/// matrix realization.
class StructureTable {
public:
    /// Throws InternalInconsistency if some bracket is not a multiple of the
    /// root vector for alpha + beta.
    explicit StructureTable(int n);

    int rank() const { return n_; }
    int size() const { return size_; }
    const StructureEntry& operator()(int a, int b) const {
        return entries_[static_cast<std::size_t>(a * size_ + b)];
    }

    struct Row {
        int alpha, beta, gamma;
        std::int64_t coeff;
    };
    /// Nonzero entries in canonical (alpha, beta) order.
    std::vector<Row> nonzero() const;

    bool is_antisymmetric() const;
    /// Jacobi identity on every triple of positive roots.
    bool satisfies_jacobi() const;

private:
    int n_;
    int size_;
    std::vector<StructureEntry> entries_;
};

/// [b, I] within I and [I, I] = 0 for I = span{e_alpha : alpha in psi}, using
/// the structure table; the Cartan part preserves each root line.
bool is_abelian_ideal_lie(const StructureTable& table, const RootSet& psi);
bool is_abelian_ideal_lie(int n, const RootSet& psi);

/// Every root vector satisfies [h_k, e_alpha] = alpha(h_k) e_alpha and the
/// symplectic condition.
bool root_vectors_are_weight_vectors(int n);

} // namespace abelcoh
