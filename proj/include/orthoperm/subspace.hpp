#pragma once

#include <cstddef>
#include <vector>

#include "orthoperm/matrix.hpp"

namespace orthoperm {

/// Subspace of GF(ell)^n held as a reduced row-echelon basis.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field field, std::size_t ambient_dim);  // zero subspace

    static Subspace full(Field field, std::size_t n);
    /// Span of the rows of `spanning` (any matrix).
    static Subspace span(const Matrix& spanning);
    static Subspace from_echelon(Echelon e);

    Field field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Columns that are not pivots, ascending; a coordinate system for V/U.
    std::vector<std::size_t> non_pivots() const;

    /// Rows of `vectors` reduced modulo this subspace (in place on a copy).
    Matrix reduce(const Matrix& vectors) const;
    bool contains(const Matrix& vectors) const;  // every row lies in U
    /// Coordinates of rows (assumed in U) with respect to basis(): entries at the pivots.
    Matrix coordinates(const Matrix& vectors) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace rowspace(const Matrix& m);
/// Left kernel {v : v * m = 0}.
Subspace kernel(const Matrix& m);
/// Right kernel {v : m * v^T = 0}, returned as row vectors.
Subspace right_kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& w);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& u, const Subspace& w);
bool contains(const Subspace& u, const Matrix& v);
/// u is contained in w.
bool is_subspace(const Subspace& u, const Subspace& w);
/// Orthogonal complement for the standard dot product.
Subspace perp(const Subspace& u);

/// Incremental semi-echelon basis: each stored row has a leading 1 at its
/// pivot and zeros at the pivots of earlier rows.
class EchelonBuilder {
public:
    EchelonBuilder(Field field, std::size_t ambient_dim);

    /// Reduces `words` in place; returns true (and stores it) if it was independent.
    bool add(std::uint64_t* words);
    /// Reduces a copy without storing.
    bool is_independent(const std::uint64_t* words) const;
    void reduce(std::uint64_t* words) const;

    std::size_t dim() const { return rows_.rows(); }
    std::size_t ambient_dim() const { return rows_.cols(); }
    const Matrix& rows() const { return rows_; }
    Subspace subspace() const { return Subspace::span(rows_); }

private:
    Matrix rows_;
    std::vector<std::size_t> pivots_;
    mutable std::vector<std::uint64_t> scratch_;
};

}  // namespace orthoperm
