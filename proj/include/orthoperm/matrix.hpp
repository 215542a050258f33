#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orthoperm/field.hpp"

namespace orthoperm {

/// Dense matrix over GF(ell), stored row-major in 64-bit words.
///
/// GF(2) rows are bit-packed (64 entries per word); other fields use one
/// byte per entry (8 entries per word). Padding bits/bytes are kept zero.
/// Vectors are 1 x n matrices; group elements act on the right.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);
    /// Row vector with the given entries.
    static Matrix vector(Field field, const std::vector<std::int64_t>& entries);
    /// Permutation matrix of `perm`: row i has its 1 in column perm[i].
    static Matrix permutation(Field field, std::span<const std::uint32_t> perm);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, std::uint32_t v);

    std::uint64_t* row_data(std::size_t r) { return data_.data() + r * stride_; }
    const std::uint64_t* row_data(std::size_t r) const { return data_.data() + r * stride_; }

    bool row_is_zero(std::size_t r) const;
    bool is_zero() const;
    /// Index of the first nonzero entry in row r, or cols() when the row is zero.
    std::size_t first_nonzero(std::size_t r) const;

    void append_row(const std::uint64_t* words);
    void append_rows(const Matrix& other);
    void swap_rows(std::size_t a, std::size_t b);
    void truncate_rows(std::size_t n);

    Matrix row(std::size_t r) const;
    Matrix row_block(std::size_t first, std::size_t count) const;
    /// Rows picked by index, in the given order.
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_columns(std::span<const std::size_t> idx) const;
    /// Horizontal concatenation [this | other].
    Matrix hconcat(const Matrix& other) const;
    Matrix transpose() const;

    std::vector<std::uint32_t> row_values(std::size_t r) const;
    std::vector<std::vector<std::uint32_t>> values() const;

    /// In-place row operation: row(dst) += c * src (src has this matrix's stride).
    void add_scaled(std::size_t dst, const std::uint64_t* src, std::uint32_t c);
    void scale_row(std::size_t r, std::uint32_t c);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

std::size_t words_for(Field field, std::size_t cols);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, std::uint32_t c);
/// a + c * I for square a.
Matrix add_scalar(const Matrix& a, std::uint32_t c);

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

/// out = v * m for a single row vector given as words (lazy reduction).
void vec_mat(const std::uint64_t* v, const Matrix& m, std::uint64_t* out);

struct Echelon {
    Matrix matrix;  ///< reduced row-echelon form, zero rows removed
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form; zero rows are dropped from the result.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws DimensionError if singular
bool is_invertible(const Matrix& m);
/// Any X with a * X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

}  // namespace orthoperm
