#include "orthoperm/subspace.hpp"

#include <algorithm>

#include "rowops.hpp"

namespace orthoperm {

using detail::get_entry;

Subspace::Subspace(Field field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(Field field, std::size_t n) {
    Subspace s;
    s.basis_ = Matrix::identity(field, n);
    s.pivots_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(const Matrix& spanning) { return from_echelon(rref(spanning)); }

Subspace Subspace::from_echelon(Echelon e) {
    Subspace s;
    s.basis_ = std::move(e.matrix);
    s.pivots_ = std::move(e.pivots);
    return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<std::size_t> out;
    out.reserve(ambient_dim() - dim());
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Matrix Subspace::reduce(const Matrix& vectors) const {
    if (vectors.cols() != ambient_dim()) throw DimensionError("reduce: ambient mismatch");
    Matrix out = vectors;
    const Field f = field();
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const std::uint32_t v = get_entry(f, out.row_data(r), pivots_[i]);
            if (v) out.add_scaled(r, basis_.row_data(i), f.neg(v));
        }
    }
    return out;
}

bool Subspace::contains(const Matrix& vectors) const { return reduce(vectors).is_zero(); }

Matrix Subspace::coordinates(const Matrix& vectors) const { return vectors.select_columns(pivots_); }

Subspace rowspace(const Matrix& m) { return Subspace::span(m); }

Subspace kernel(const Matrix& m) {
    const std::size_t n = m.rows();
    const std::size_t c = m.cols();
    Echelon e = rref(m.hconcat(Matrix::identity(m.field(), n)));
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < e.rank; ++i)
        if (e.pivots[i] >= c) rows.push_back(i);
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = c + j;
    return Subspace::span(e.matrix.select_rows(rows).select_columns(right));
}

Subspace right_kernel(const Matrix& m) { return kernel(m.transpose()); }

namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim() || !(u.field() == w.field()))
        throw DimensionError("subspaces live in different ambient spaces");
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    Matrix m = u.basis();
    m.append_rows(w.basis());
    return Subspace::span(m);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    const std::size_t n = u.ambient_dim();
    if (u.is_zero() || w.is_zero()) return Subspace(u.field(), n);
    // [U | U ; W | 0]: rows whose left block vanishes carry U ∩ W on the right.
    Matrix top = u.basis().hconcat(u.basis());
    Matrix bottom = w.basis().hconcat(Matrix(u.field(), w.dim(), n));
    top.append_rows(bottom);
    Echelon e = rref(std::move(top));
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < e.rank; ++i)
        if (e.pivots[i] >= n) rows.push_back(i);
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return Subspace::span(e.matrix.select_rows(rows).select_columns(right));
}

bool contains(const Subspace& u, const Matrix& v) { return u.contains(v); }

bool is_subspace(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    return w.contains(u.basis());
}

Subspace perp(const Subspace& u) {
    if (u.is_zero()) return Subspace::full(u.field(), u.ambient_dim());
    return right_kernel(u.basis());
}

EchelonBuilder::EchelonBuilder(Field field, std::size_t ambient_dim)
    : rows_(field, 0, ambient_dim), scratch_(words_for(field, ambient_dim)) {}

void EchelonBuilder::reduce(std::uint64_t* w) const {
    const Field f = rows_.field();
    const std::size_t stride = rows_.stride();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::uint32_t v = get_entry(f, w, pivots_[i]);
        if (v) detail::row_axpy(f, w, rows_.row_data(i), f.neg(v), stride);
    }
}

bool EchelonBuilder::add(std::uint64_t* w) {
    reduce(w);
    const Field f = rows_.field();
    const std::size_t p = detail::row_first_nonzero(f, w, rows_.cols(), rows_.stride());
    if (p == rows_.cols()) return false;
    const std::uint32_t lead = get_entry(f, w, p);
    if (lead != 1) detail::row_scale(f, w, f.inv(lead), rows_.stride());
    rows_.append_row(w);
    pivots_.push_back(p);
    return true;
}

bool EchelonBuilder::is_independent(const std::uint64_t* w) const {
    std::copy(w, w + rows_.stride(), scratch_.begin());
    reduce(scratch_.data());
    return !detail::words_zero(scratch_.data(), rows_.stride());
}

}  // namespace orthoperm
