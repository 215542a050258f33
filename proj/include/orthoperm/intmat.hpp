#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orthoperm {

/// Dense integer matrix with 64-bit entries (adjacency algebra identities).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix all_ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::int64_t* row(std::size_t r) const { return data_.data() + r * cols_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(std::int64_t c, const IntMatrix& a);
/// a + c * I.
IntMatrix add_scalar(const IntMatrix& a, std::int64_t c);

/// Rank over the rationals: Bareiss below 400 rows/cols, multi-prime above.
std::size_t integer_rank(const IntMatrix& m);
/// Fraction-free Gaussian elimination with GMP integers.
std::size_t bareiss_rank(const IntMatrix& m);
/// Rank modulo a prime p < 2^31.
std::size_t modular_rank(const IntMatrix& m, std::uint64_t p);
/// Rank modulo primes above 2^20 until `agree` of them give the largest rank seen.
std::size_t multimodular_rank(const IntMatrix& m, int agree = 3);

}  // namespace orthoperm
