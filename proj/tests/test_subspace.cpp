#include "doctest.h"

#include <random>

#include "orthoperm/subspace.hpp"

using namespace orthoperm;

namespace {

Matrix random_matrix(Field f, std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows)
        for (auto& x : row) x = static_cast<std::int64_t>(rng() % f.ell());
    return Matrix::from_rows(f, rows);
}

}  // namespace

TEST_CASE("kernel of identity and zero") {
    Field f(2);
    CHECK(kernel(Matrix::identity(f, 5)).is_zero());
    CHECK(kernel(Matrix(f, 5, 5)).dim() == 5);
}

TEST_CASE("rowspace examples") {
    Field f(2);
    CHECK(rowspace(Matrix(f, 3, 3)).is_zero());
    CHECK(rowspace(Matrix::identity(f, 3)).is_full());
    CHECK(rowspace(Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})).dim() == 2);
}

TEST_CASE("two distinct hyperplanes of GF(2)^3 meet in a line") {
    Field f(2);
    // x1 = 0 and x2 = 0
    Subspace h1 = Subspace::span(Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}}));
    Subspace h2 = Subspace::span(Matrix::from_rows(f, {{1, 0, 0}, {0, 0, 1}}));
    Subspace i = intersect(h1, h2);
    CHECK(i.dim() == 1);
    CHECK(i.contains(Matrix::vector(f, {0, 0, 1})));
    CHECK(intersect(h1, h1) == h1);
    CHECK(intersect(h1, Subspace(f, 3)).is_zero());
}

TEST_CASE("modular law, rank-nullity and perp duality on random data") {
    std::mt19937_64 rng(77);
    for (int p : {2, 5, 13}) {
        Field f(p);
        for (int t = 0; t < 8; ++t) {
            const std::size_t n = 40 + 13 * t;
            Matrix a = random_matrix(f, rng, n / 3, n);
            Matrix b = random_matrix(f, rng, n / 2, 7);
            Subspace u = Subspace::span(random_matrix(f, rng, n / 2, n / 4) * random_matrix(f, rng, n / 4, n));
            Subspace w = Subspace::span(random_matrix(f, rng, n / 2, n));
            Subspace s = subspace_sum(u, w), i = intersect(u, w);
            CHECK(s.dim() + i.dim() == u.dim() + w.dim());
            CHECK(is_subspace(i, u));
            CHECK(is_subspace(i, w));
            CHECK(rank(a) + kernel(a).dim() == a.rows());
            CHECK((kernel(b).basis() * b).is_zero());
            Subspace pu = perp(u);
            CHECK(pu.dim() + u.dim() == n);
            CHECK((u.basis() * pu.basis().transpose()).is_zero());
            CHECK(perp(pu) == u);
        }
    }
}

TEST_CASE("contains, sum and reduce") {
    Field f(5);
    Subspace full = Subspace::full(f, 4);
    CHECK(contains(full, Matrix::vector(f, {1, 2, 3, 4})));
    Subspace u = Subspace::span(Matrix::from_rows(f, {{1, 2, 0, 0}}));
    CHECK(subspace_sum(u, Subspace(f, 4)) == u);
    CHECK(u.reduce(Matrix::vector(f, {2, 4, 0, 0})).is_zero());
    CHECK(u.non_pivots() == std::vector<std::size_t>{1, 2, 3});
    CHECK(u.coordinates(Matrix::vector(f, {3, 1, 0, 0})) == Matrix::vector(f, {3}));
    CHECK_THROWS_AS(intersect(u, Subspace(f, 3)), DimensionError);
}

TEST_CASE("EchelonBuilder matches rowspace") {
    std::mt19937_64 rng(9);
    for (int p : {2, 7}) {
        Field f(p);
        Matrix m = random_matrix(f, rng, 30, 10) * random_matrix(f, rng, 10, 50);
        EchelonBuilder eb(f, 50);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Matrix row = m.row(r);
            const bool indep = eb.is_independent(row.row_data(0));
            CHECK(eb.add(row.row_data(0)) == indep);
        }
        CHECK(eb.dim() == rank(m));
        CHECK(eb.subspace() == rowspace(m));
    }
}
