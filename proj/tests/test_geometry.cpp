#include "doctest.h"

#include <map>

#include "orthoperm/geometry.hpp"
#include "orthoperm/perm_group.hpp"

using namespace orthoperm;

namespace {

F3Vec basis_vec(int m, int i) {
    F3Vec v(static_cast<std::size_t>(m), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

F3Vec add(F3Vec a, const F3Vec& b, int c = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = f3(a[i] + c * b[i]);
    return a;
}

}  // namespace

TEST_CASE("standard spaces reproduce the fixed bases") {
    QuadraticSpace plus = standard_space(Family::Plus, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const int want = (i / 2 == j / 2 && i != j) ? 1 : 0;
            CHECK(plus.gram.at(i, j) == want);
        }
    QuadraticSpace odd = standard_space(Family::Odd, 7);
    CHECK(odd.gram.at(6, 6) == 1);
    CHECK(odd.gram.at(4, 5) == 1);
    for (int i = 0; i < 6; ++i) CHECK(odd.gram.at(i, 6) == 0);
    QuadraticSpace minus = standard_space(Family::Minus, 4);
    CHECK(minus.gram.at(0, 1) == 1);
    CHECK(minus.gram.at(2, 2) == 1);
    CHECK(minus.gram.at(3, 3) == 1);
    CHECK(minus.gram.at(2, 3) == 0);
    CHECK_THROWS(standard_space(Family::Odd, 6));
    CHECK_THROWS(standard_space(Family::Plus, 7));
}

TEST_CASE("Q and the bilinear form") {
    QuadraticSpace sp = standard_space(Family::Plus, 6);
    const F3Vec e1 = basis_vec(6, 0), f1 = basis_vec(6, 1);
    CHECK(eval_q(sp, F3Vec(6, 0)) == 0);
    CHECK(eval_q(sp, e1) == 0);
    CHECK(eval_bilinear(sp, e1, f1) == 1);
    CHECK(eval_q(sp, add(e1, f1)) == 1);
    // Q(u+v) = Q(u) + Q(v) + (u,v) over all pairs in a small space.
    for (Family fam : {Family::Minus, Family::Odd}) {
        QuadraticSpace s = standard_space(fam, fam == Family::Odd ? 5 : 4);
        const std::uint32_t total = power3(s.m);
        for (std::uint32_t a = 0; a < total; ++a)
            for (std::uint32_t b = 0; b < total; b += 7) {
                F3Vec u = decode(a, s.m), v = decode(b, s.m);
                CHECK(eval_q(s, add(u, v)) == f3(eval_q(s, u) + eval_q(s, v) + eval_bilinear(s, u, v)));
                CHECK(eval_bilinear(s, u, u) == f3(2 * eval_q(s, u)));
            }
    }
}

TEST_CASE("point counts match brute force and closed forms") {
    struct Row { Family f; int m; std::uint64_t p0, pp, pm; };
    for (Row row : {Row{Family::Plus, 6, 130, 117, 117}, Row{Family::Minus, 6, 112, 126, 126},
                    Row{Family::Odd, 7, 364, 351, 378}, Row{Family::Minus, 4, 10, 15, 15}}) {
        QuadraticSpace sp = standard_space(row.f, row.m);
        const auto n0 = enumerate_points(sp, 0).size(), np = enumerate_points(sp, 1).size(),
                   nm = enumerate_points(sp, -1).size();
        CHECK(n0 == row.p0);
        CHECK(np == row.pp);
        CHECK(nm == row.pm);
        CHECK(n0 + np + nm == (power3(row.m) - 1) / 2);
        CHECK(formula_point_count(row.f, sp.n, 1) == np);
        CHECK(formula_point_count(row.f, sp.n, -1) == nm);
        CHECK(formula_point_count(row.f, sp.n, 0) == n0);
    }
    auto pts = enumerate_points(standard_space(Family::Plus, 6), 1);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].rep < pts[i].rep);
}

TEST_CASE("reflections") {
    QuadraticSpace sp = standard_space(Family::Plus, 6);
    const F3Vec e1 = basis_vec(6, 0), f1 = basis_vec(6, 1), v = add(e1, f1);
    F3Matrix s = reflection(sp, v);
    CHECK(act_on(v, s) == add(F3Vec(6, 0), v, -1));
    CHECK(act_on(e1, s) == add(F3Vec(6, 0), f1, -1));
    CHECK(act_on(basis_vec(6, 2), s) == basis_vec(6, 2));
    CHECK_THROWS(reflection(sp, e1));
    for (Family fam : {Family::Plus, Family::Minus, Family::Odd}) {
        QuadraticSpace q = standard_space(fam, fam == Family::Odd ? 7 : 6);
        auto gens = default_generators(q);
        CHECK(gens.size() >= static_cast<std::size_t>(2 * q.m));
        for (const auto& g : gens) {
            CHECK(preserves_form(q, g));
            CHECK(g * g == F3Matrix::identity(q.m));
            CHECK(det(g) == -1);
        }
        // Q(xg) = Q(x) for every vector.
        for (std::uint32_t c = 0; c < power3(q.m); ++c) {
            F3Vec x = decode(c, q.m);
            CHECK(eval_q(q, act_on(x, gens[0])) == eval_q(q, x));
            CHECK(eval_q(q, act_on(x, gens.back())) == eval_q(q, x));
        }
    }
}

TEST_CASE("rank-3 parameters match brute force and closed forms") {
    struct Row { Family f; int m; Kappa k; Rank3Parameters p; };
    for (Row row : {Row{Family::Plus, 6, 1, {36, 80, 15, 9}}, Row{Family::Odd, 7, 1, {126, 224, 45, 45}},
                    Row{Family::Minus, 6, -1, {45, 80, 12, 18}}, Row{Family::Minus, 4, 1, {6, 8, 1, 3}}}) {
        QuadraticSpace sp = standard_space(row.f, row.m);
        auto pts = enumerate_points(sp, row.k);
        PermAction act = action_permutations(sp, default_generators(sp), pts);
        auto adj = orthogonality(sp, pts);
        const Rank3Parameters got = rank3_certificate(act, adj);
        CHECK(got == row.p);
        CHECK(formula_parameters(row.f, sp.n, row.k) == row.p);
        // Plain pair counting, independent of the certificate.
        std::int64_t common01 = -1;
        for (std::size_t j = 1; j < pts.size() && common01 < 0; ++j) {
            if (!adj[0][j]) continue;
            common01 = 0;
            for (std::size_t x = 0; x < pts.size(); ++x) common01 += adj[0][x] && adj[j][x];
        }
        CHECK(common01 == row.p.r);
    }
}

TEST_CASE("identity acts trivially and a reflection fixes its point") {
    QuadraticSpace sp = standard_space(Family::Minus, 4);
    auto pts = enumerate_points(sp, 1);
    PermAction act = action_permutations(sp, {F3Matrix::identity(4)}, pts);
    CHECK(is_identity(act.gens[0]));
    const F3Vec v = pts[3].rep;
    PermAction r = action_permutations(sp, {reflection(sp, v)}, pts);
    CHECK(r.gens[0][3] == 3);
}

TEST_CASE("group orders") {
    CHECK(orthogonal_group_order(Family::Minus, 4) == 1440);
    CHECK(orthogonal_group_order(Family::Odd, 3) == 48);
    CHECK(orthogonal_group_order(Family::Odd, 5) == 103680);
    for (auto [fam, m] : std::vector<std::pair<Family, int>>{{Family::Minus, 4}, {Family::Odd, 3}, {Family::Odd, 5},
                                                             {Family::Plus, 6}, {Family::Minus, 6}}) {
        QuadraticSpace sp = standard_space(fam, m);
        const auto gens = vector_action(sp, default_generators(sp));
        CHECK(group_order(gens, 1) == orthogonal_group_order(fam, m));
    }
}

TEST_CASE("brute-force isometry count for the 3-dimensional space") {
    QuadraticSpace sp = standard_space(Family::Odd, 3);
    std::uint64_t count = 0;
    for (std::uint32_t c = 0; c < power3(9); ++c) {
        F3Matrix g{3, decode(c, 9)};
        if (det(g) != 0 && preserves_form(sp, g)) ++count;
    }
    CHECK(count == 48);
}

TEST_CASE("stabilizer chain membership") {
    QuadraticSpace sp = standard_space(Family::Minus, 4);
    const auto gens = vector_action(sp, default_generators(sp));
    StabilizerChain chain(gens, 7);
    CHECK(chain.contains(compose(gens[0], gens[1])));
    Perm swap = identity_perm(gens[0].size());
    std::swap(swap[0], swap[1]);
    CHECK_FALSE(chain.contains(swap));
}

TEST_CASE("two reflection words generate the full orthogonal group") {
    for (auto [fam, m] : {std::pair{Family::Minus, 4}, std::pair{Family::Plus, 6}, std::pair{Family::Minus, 6},
                          std::pair{Family::Odd, 7}}) {
        const QuadraticSpace sp = standard_space(fam, m);
        const GeneratorSet gs = certified_generator_pair(sp, 1);
        CHECK(gs.certified);
        CHECK(gs.gens.size() == 2);
        CHECK(gs.order == orthogonal_group_order(fam, m));
        for (const auto& g : gs.gens) CHECK(preserves_form(sp, g));
    }
}
