#include "orthoperm/intmat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "orthoperm/field.hpp"

namespace orthoperm {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::all_ones(std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = 1;
    return m;
}

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("integer matrix shape mismatch");
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b);
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-1) * b; }

IntMatrix operator*(std::int64_t k, const IntMatrix& a) {
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= k;
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("integer matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t x = a(i, k);
            if (!x) continue;
            const std::int64_t* br = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * br[j];
        }
    return c;
}

IntMatrix add_scalar(const IntMatrix& a, std::int64_t c) {
    if (a.rows() != a.cols()) throw DimensionError("add_scalar needs a square matrix");
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += c;
    return out;
}

std::size_t integer_rank(const IntMatrix& m) {
    if (std::max(m.rows(), m.cols()) <= 400) return bareiss_rank(m);
    return multimodular_rank(m);
}

std::size_t bareiss_rank(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i][j] = static_cast<long>(m(i, j));
    mpz_class prev = 1, t;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[rank]);
        const mpz_class& p = a[rank][col];
        for (std::size_t i = rank + 1; i < R; ++i) {
            const mpz_class f = a[i][col];
            for (std::size_t j = col + 1; j < C; ++j) {
                // a_ij <- (p a_ij - f a_kj) / prev, exact by Sylvester's identity.
                mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), p.get_mpz_t());
                if (f != 0) {
                    mpz_mul(t.get_mpz_t(), f.get_mpz_t(), a[rank][j].get_mpz_t());
                    mpz_sub(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), t.get_mpz_t());
                }
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t modular_rank(const IntMatrix& m, std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) throw std::invalid_argument("modular_rank needs a prime below 2^31");
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::uint64_t> a(R * C);
    const auto sp = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < R * C; ++i) a[i] = static_cast<std::uint64_t>(((m(i / C, i % C) % sp) + sp) % sp);
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && a[piv * C + col] == 0) ++piv;
        if (piv == R) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[rank * C + j]);
        const std::uint64_t iv = inv(a[rank * C + col]);
        for (std::size_t j = col; j < C; ++j) a[rank * C + j] = a[rank * C + j] * iv % p;
        for (std::size_t i = rank + 1; i < R; ++i) {
            const std::uint64_t f = a[i * C + col];
            if (!f) continue;
            const std::uint64_t nf = p - f;
            for (std::size_t j = col; j < C; ++j) a[i * C + j] = (a[i * C + j] + nf * a[rank * C + j]) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t multimodular_rank(const IntMatrix& m, int agree) {
    std::size_t best = 0;
    int votes = 0;
    std::uint64_t p = (std::uint64_t{1} << 20) + 1;
    for (int tries = 0; tries < 4 * agree + 8; ++tries) {
        while (!is_prime(p)) ++p;
        const std::size_t r = modular_rank(m, p);
        ++p;
        if (r > best) {
            best = r;
            votes = 1;
        } else if (r == best) {
            ++votes;
        }
        if (votes >= agree) return best;
    }
    throw std::runtime_error("multimodular rank: primes never agreed");
}

}  // namespace orthoperm
