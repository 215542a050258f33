#include "orthoperm/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "rowops.hpp"

namespace orthoperm {

using detail::get_entry;
using detail::row_axpy;
using detail::set_entry;

std::size_t words_for(Field field, std::size_t cols) {
    return field.binary() ? (cols + 63) / 64 : (cols + 7) / 8;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), stride_(words_for(field, cols)),
      data_(rows * stride_, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.reduce(rows[i][j]));
    }
    return m;
}

Matrix Matrix::vector(Field field, const std::vector<std::int64_t>& entries) {
    return from_rows(field, {entries});
}

Matrix Matrix::permutation(Field field, std::span<const std::uint32_t> perm) {
    Matrix m(field, perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m.set(i, perm[i], 1);
    return m;
}

std::uint32_t Matrix::at(std::size_t r, std::size_t c) const {
    return get_entry(field_, row_data(r), c);
}

void Matrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
    set_entry(field_, row_data(r), c, v % field_.ell());
}

bool Matrix::row_is_zero(std::size_t r) const { return detail::words_zero(row_data(r), stride_); }

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Matrix::first_nonzero(std::size_t r) const {
    return detail::row_first_nonzero(field_, row_data(r), cols_, stride_);
}

void Matrix::append_row(const std::uint64_t* words) {
    data_.insert(data_.end(), words, words + stride_);
    ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
    if (other.rows_ == 0) return;
    if (other.cols_ != cols_ || !(other.field_ == field_)) throw DimensionError("append_rows: shape mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_data(a), row_data(a) + stride_, row_data(b));
}

void Matrix::truncate_rows(std::size_t n) {
    if (n >= rows_) return;
    rows_ = n;
    data_.resize(n * stride_);
}

Matrix Matrix::row(std::size_t r) const { return row_block(r, 1); }

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DimensionError("row_block out of range");
    Matrix out(field_, count, cols_);
    std::copy(row_data(first), row_data(first) + count * stride_, out.data_.begin());
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        std::copy(row_data(idx[i]), row_data(idx[i]) + stride_, out.row_data(i));
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* src = row_data(r);
        std::uint64_t* dst = out.row_data(r);
        for (std::size_t j = 0; j < idx.size(); ++j) set_entry(field_, dst, j, get_entry(field_, src, idx[j]));
    }
    return out;
}

Matrix Matrix::hconcat(const Matrix& other) const {
    if (other.rows_ != rows_) throw DimensionError("hconcat: row mismatch");
    Matrix out(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t* dst = out.row_data(r);
        if (field_.binary()) {
            std::copy(row_data(r), row_data(r) + stride_, dst);
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other.at(r, j)) set_entry(field_, dst, cols_ + j, 1);
        } else {
            std::memcpy(detail::bytes(dst), detail::bytes(row_data(r)), cols_);
            std::memcpy(detail::bytes(dst) + cols_, detail::bytes(other.row_data(r)), other.cols_);
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* src = row_data(r);
        if (field_.binary()) {
            for (std::size_t w = 0; w < stride_; ++w) {
                std::uint64_t word = src[w];
                while (word) {
                    const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                    word &= word - 1;
                    set_entry(field_, out.row_data(c), r, 1);
                }
            }
        } else {
            const std::uint8_t* b = detail::bytes(src);
            for (std::size_t c = 0; c < cols_; ++c)
                if (b[c]) detail::bytes(out.row_data(c))[r] = b[c];
        }
    }
    return out;
}

std::vector<std::uint32_t> Matrix::row_values(std::size_t r) const {
    std::vector<std::uint32_t> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

std::vector<std::vector<std::uint32_t>> Matrix::values() const {
    std::vector<std::vector<std::uint32_t>> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(row_values(r));
    return v;
}

void Matrix::add_scaled(std::size_t dst, const std::uint64_t* src, std::uint32_t c) {
    row_axpy(field_, row_data(dst), src, c % field_.ell(), stride_);
}

void Matrix::scale_row(std::size_t r, std::uint32_t c) { detail::row_scale(field_, row_data(r), c, stride_); }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field()))
        throw DimensionError(std::string(what) + ": shape mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out.add_scaled(r, b.row_data(r), 1);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix out = a;
    const std::uint32_t m1 = a.field().neg(1);
    for (std::size_t r = 0; r < a.rows(); ++r) out.add_scaled(r, b.row_data(r), m1);
    return out;
}

Matrix scaled(const Matrix& a, std::uint32_t c) {
    Matrix out = a;
    c %= a.field().ell();
    for (std::size_t r = 0; r < a.rows(); ++r) out.scale_row(r, c);
    return out;
}

Matrix add_scalar(const Matrix& a, std::uint32_t c) {
    if (a.rows() != a.cols()) throw DimensionError("add_scalar: matrix not square");
    Matrix out = a;
    const Field f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, i, f.add(a.at(i, i), c % f.ell()));
    return out;
}

void vec_mat(const std::uint64_t* v, const Matrix& m, std::uint64_t* out) {
    const Field f = m.field();
    const std::size_t n = m.rows();
    if (f.binary()) {
        const std::size_t s = m.stride();
        std::fill(out, out + s, 0);
        const std::size_t vw = (n + 63) / 64;
        for (std::size_t w = 0; w < vw; ++w) {
            std::uint64_t word = v[w];
            while (word) {
                const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                detail::xor_words(out, m.row_data(k), s);
            }
        }
        return;
    }
    detail::RowAccumulator acc(f, m.stride());
    const std::uint8_t* vb = detail::bytes(v);
    for (std::size_t k = 0; k < n; ++k)
        if (vb[k]) acc.add(m.row_data(k), vb[k]);
    acc.store(out);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field())) throw DimensionError("mat_mul: shape mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) vec_mat(a.row_data(r), b, out.row_data(r));
    return out;
}

Echelon rref(Matrix m) {
    const Field f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && get_entry(f, m.row_data(p), c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const std::uint32_t lead = get_entry(f, m.row_data(r), c);
        if (lead != 1) m.scale_row(r, f.inv(lead));
        const std::uint64_t* pivot_row = m.row_data(r);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint32_t v = get_entry(f, m.row_data(i), c);
            if (v) m.add_scaled(i, pivot_row, f.neg(v));
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    e.rank = r;
    e.matrix = std::move(m);
    return e;
}

std::size_t rank(const Matrix& input) {
    Matrix m = input;
    const Field f = m.field();
    const std::size_t rows = m.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && get_entry(f, m.row_data(p), c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const std::uint32_t inv = f.inv(get_entry(f, m.row_data(r), c));
        const std::uint64_t* pivot_row = m.row_data(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint32_t v = get_entry(f, m.row_data(i), c);
            if (v) m.add_scaled(i, pivot_row, f.neg(f.mul(v, inv)));
        }
        ++r;
    }
    return r;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
    const std::size_t n = m.rows();
    Echelon e = rref(m.hconcat(Matrix::identity(m.field(), n)));
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw DimensionError("inverse: matrix is singular");
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return e.matrix.row_block(0, n).select_columns(right);
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve_right: row mismatch");
    const std::size_t n = a.cols();
    Echelon e = rref(a.hconcat(b));
    Matrix x(a.field(), n, b.cols());
    for (std::size_t i = 0; i < e.rank; ++i) {
        const std::size_t p = e.pivots[i];
        if (p >= n) return std::nullopt;  // pivot in the right-hand side
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(p, j, e.matrix.at(i, n + j));
    }
    return x;
}

}  // namespace orthoperm
