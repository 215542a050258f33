#include "doctest.h"

#include <random>

#include "orthoperm/gmodule.hpp"
#include "orthoperm/perm_group.hpp"

using namespace orthoperm;

namespace {

GModule point_module(Family fam, int m, Kappa kappa, std::uint32_t ell) {
    const QuadraticSpace sp = standard_space(fam, m);
    const auto pts = enumerate_points(sp, kappa);
    const PermAction act = action_permutations(sp, default_generators(sp), pts);
    return GModule::from_permutations(Field(ell), act.gens);
}

Matrix random_rows(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix out(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, static_cast<std::uint32_t>(rng() % f.ell()));
    return out;
}

Matrix all_ones(Field f, std::size_t n) {
    Matrix v(f, 1, n);
    for (std::size_t c = 0; c < n; ++c) v.set(0, c, 1);
    return v;
}

}  // namespace

TEST_CASE("permutation action agrees with the dense generator") {
    for (std::uint32_t ell : {2u, 5u, 13u}) {
        const GModule m = point_module(Family::Minus, 4, 1, ell);
        std::mt19937_64 rng(ell);
        const Matrix v = random_rows(m.field(), 7, m.dim(), rng);
        for (std::size_t k = 0; k < m.num_gens(); ++k) CHECK(m.act(k, v) == v * m.gen(k));
    }
}

TEST_CASE("spin gives the smallest invariant subspace") {
    const GModule m = point_module(Family::Plus, 6, 1, 5);
    const Subspace ones = spin(m, all_ones(m.field(), m.dim()));
    CHECK(ones.dim() == 1);
    Matrix e0(m.field(), 1, m.dim());
    e0.set(0, 0, 1);
    CHECK(spin(m, e0).is_full());
    std::mt19937_64 rng(3);
    const Matrix v = random_rows(m.field(), 2, m.dim(), rng);
    const Subspace s = spin(m, v);
    CHECK(m.is_invariant(s));
    CHECK(spin(m, s.basis()) == s);
    // Augmentation submodule.
    Matrix diff(m.field(), 0, m.dim());
    for (std::size_t i = 1; i < m.dim(); ++i) {
        Matrix d(m.field(), 1, m.dim());
        d.set(0, 0, 1);
        d.set(0, i, m.field().neg(1));
        diff.append_rows(d);
    }
    const Subspace aug = Subspace::span(diff);
    CHECK(m.is_invariant(aug));
    CHECK_FALSE(m.is_invariant(Subspace::span(e0)));
}

TEST_CASE("spin record replays to the same vectors") {
    const GModule m = point_module(Family::Odd, 5, -1, 7);
    std::mt19937_64 rng(11);
    const Matrix v = random_rows(m.field(), 1, m.dim(), rng);
    const SpinRecord rec = spin_record(m, v);
    CHECK(rec.basis.rows() == rec.steps.size() + 1);
    CHECK(rank(rec.basis) == rec.basis.rows());
    CHECK(Subspace::span(rec.basis) == spin(m, v));
    CHECK(rec.replay(m, v) == rec.basis);
    const SpinRecord capped = spin_record(m, v, 5);
    CHECK(capped.basis.rows() == 5);
}

TEST_CASE("dual and transposed modules") {
    const GModule m = point_module(Family::Minus, 4, -1, 2);
    const GModule t = m.transposed();
    for (std::size_t k = 0; k < m.num_gens(); ++k) CHECK(t.gen(k) == m.gen(k).transpose());
    const GModule d = m.dual();
    for (std::size_t k = 0; k < m.num_gens(); ++k) CHECK(d.gen(k) == m.gen(k));

    Matrix a = Matrix::from_rows(Field(7), {{1, 2}, {0, 1}});
    Matrix b = Matrix::from_rows(Field(7), {{3, 0}, {1, 5}});
    const GModule dense = GModule::from_matrices(Field(7), {a, b});
    const GModule dd = dense.dual().dual();
    for (std::size_t k = 0; k < 2; ++k) CHECK(dd.gen(k) == dense.gen(k));
    CHECK(dense.dual().gen(0) * a.transpose() == Matrix::identity(Field(7), 2));
}

TEST_CASE("algebra words evaluate like the incremental sequence") {
    const GModule m = point_module(Family::Minus, 4, 1, 5);
    RandomWordSequence seq(m, 42);
    Matrix last;
    for (int i = 0; i < 8; ++i) last = seq.next();
    CHECK(seq.word().size() == 8);
    CHECK(seq.word().evaluate(m) == last);
    const AlgebraWord first = seq.word().prefix(0);
    CHECK(first.evaluate(m) == m.gen(0));
    CHECK(AlgebraWord().evaluate(m).is_zero());
    CHECK_FALSE(seq.word().to_string().empty());
}

TEST_CASE("subquotient coordinates round-trip") {
    const GModule m = point_module(Family::Minus, 4, 1, 2);
    std::mt19937_64 rng(5);
    const Subspace lower = spin(m, all_ones(m.field(), m.dim()));
    Matrix seeds = random_rows(m.field(), 1, m.dim(), rng);
    seeds.append_rows(lower.basis());
    const Subspace upper = spin(m, seeds);
    REQUIRE(is_subspace(lower, upper));
    const Subquotient sq(m, lower, upper);
    CHECK(sq.dim() == upper.dim() - lower.dim());
    const Matrix coords = random_rows(m.field(), 4, sq.dim(), rng);
    const Matrix lifted = sq.lift(coords);
    CHECK(upper.contains(lifted));
    CHECK(sq.project(lifted) == coords);
    // The induced action commutes with projection.
    for (std::size_t k = 0; k < m.num_gens(); ++k)
        CHECK(sq.project(m.act(k, lifted)) == coords * sq.module().gen(k));
    const Subspace pre = sq.preimage(Subspace::full(m.field(), sq.dim()));
    CHECK(pre == upper);
    CHECK(sq.preimage(Subspace(m.field(), sq.dim())) == lower);

    CHECK_THROWS(Subquotient(m, upper, lower));
    Matrix e0(m.field(), 1, m.dim());
    e0.set(0, 0, 1);
    CHECK_THROWS(Subquotient(m, Subspace::span(e0), Subspace::full(m.field(), m.dim())));
}
