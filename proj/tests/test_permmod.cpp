#include "doctest.h"

#include <algorithm>

#include "orthoperm/permmod.hpp"

using namespace orthoperm;

namespace {

PermutationModule orbit(Family fam, int m, Kappa kappa, std::uint32_t ell) {
    const QuadraticSpace sp = standard_space(fam, m);
    return build_module(sp, kappa, Field(ell), certified_generator_pair(sp, 1).gens);
}

Rank3Parameters params(Family fam, int m, Kappa kappa) {
    return formula_parameters(fam, m / 2, kappa);
}

std::vector<std::size_t> summand_dims(const PermutationModule& pm, const Rank3Parameters& p) {
    std::vector<std::size_t> d;
    for (const auto& s : summand_decomposition(pm, p)) d.push_back(s.image.dim());
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("adjacency of the orbit modules") {
    const PermutationModule p = orbit(Family::Plus, 6, 1, 2);
    REQUIRE(p.size() == 117);
    const PermutationModule q = orbit(Family::Minus, 4, 1, 7);
    REQUIRE(q.size() == 15);
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < q.size(); ++j) {
            sum += q.adjacency_int(i, j);
            CHECK(q.adjacency_int(i, j) == q.adjacency_int(j, i));
        }
        CHECK(sum == 6);
        CHECK(q.adjacency_int(i, i) == 0);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < p.size(); ++j) sum += p.adjacency_int(i, j);
        CHECK(sum == 36);
    }
    // Generators commute with A as matrices too.
    for (const auto& g : p.module.gens()) CHECK(g * p.adjacency == p.adjacency * g);
}

TEST_CASE("roots of the graph polynomial") {
    const Field f5(5);
    const Rank3Parameters plus{36, 80, 15, 9};
    const Roots r = quadratic_roots(plus, 1, f5);
    CHECK(r.c1 == 3);
    CHECK(r.c2 == -9);
    const Rank3Parameters odd = params(Family::Odd, 7, 1);
    const Roots ro = quadratic_roots(odd, 1, f5);
    CHECK(ro.c1 == 9);
    CHECK(ro.c2 == -9);
    const Roots rom = quadratic_roots(params(Family::Odd, 7, -1), -1, f5);
    CHECK(rom.c1 == -9);
    CHECK(rom.c2 == 9);
    const Roots r2 = quadratic_roots(plus, 1, Field(2));
    CHECK(r2.equal_roots);
    CHECK(r2.c1_mod == 1);
    CHECK_FALSE(r.equal_roots);
    for (auto [fam, m, k] : {std::tuple{Family::Plus, 6, 1}, std::tuple{Family::Minus, 6, -1},
                             std::tuple{Family::Odd, 7, -1}, std::tuple{Family::Minus, 4, 1}}) {
        const Rank3Parameters p = params(fam, m, k);
        const Roots x = quadratic_roots(p, k, f5);
        for (std::int64_t c : {x.c1, x.c2}) CHECK(c * c + (p.r - p.s) * c + p.s - p.a == 0);
        CHECK(std::llabs(x.c1) <= std::llabs(x.c2));
    }
    CHECK_THROWS(quadratic_roots(Rank3Parameters{5, 5, 2, 1}, 1, f5));
}

TEST_CASE("graph submodule dimensions") {
    const PermutationModule p5 = orbit(Family::Plus, 6, 1, 5);
    const GraphSubmodules g3 = graph_submodules(p5, 3);
    CHECK(g3.u_prime.dim() == 26);
    // A non-root gives the whole augmentation module.
    const CanonicalSubmodules c5 = canonical_submodules(p5);
    CHECK(graph_submodules(p5, 2).u_prime == c5.s);

    const PermutationModule p2 = orbit(Family::Plus, 6, 1, 2);
    const GraphSubmodules g1 = graph_submodules(p2, 1);
    CHECK(g1.u_prime.dim() == 26);
    CHECK(g1.u.dim() == 27);
    CHECK(is_subspace(g1.u_prime, g1.u));

    // Distinct roots: the two graph submodules split the augmentation module and are orthogonal.
    const Roots r = quadratic_roots(params(Family::Plus, 6, 1), 1, Field(5));
    const GraphSubmodulePair pair = graph_submodule_pair(p5, r);
    CHECK(pair.first.u_prime.dim() + pair.second.u_prime.dim() == p5.size() - 1);
    CHECK(intersect(pair.first.u_prime, pair.second.u_prime).dim() == 0);
    CHECK(subspace_sum(pair.first.u_prime, pair.second.u_prime) == c5.s);
    CHECK(is_subspace(pair.first.u_prime, perp(pair.second.u)));
    CHECK(intersect(pair.first.u, c5.s) == pair.first.u_prime);
}

TEST_CASE("canonical submodules and parity") {
    const PermutationModule p2 = orbit(Family::Plus, 6, 1, 2);
    const CanonicalSubmodules c = canonical_submodules(p2);
    CHECK(c.s.dim() == 116);
    CHECK(c.t.dim() == 1);
    CHECK_FALSE(is_subspace(c.t, c.s));
    const PermutationModule m2 = orbit(Family::Minus, 4, 1, 5);
    CHECK(is_subspace(canonical_submodules(m2).t, canonical_submodules(m2).s));  // 5 | 15
    CHECK(perp(c.t) == c.s);
    CHECK(perp(Subspace(Field(2), 117)).is_full());
}

TEST_CASE("exact adjacency identity and eigenspace dimensions") {
    struct Case {
        Family fam;
        int m;
        Kappa k;
        std::int64_t d1, d2;
    };
    for (const Case& cs : {Case{Family::Plus, 6, 1, 26, 90}, Case{Family::Plus, 6, -1, 26, 90},
                           Case{Family::Minus, 6, 1, 35, 90}, Case{Family::Minus, 6, -1, 35, 90},
                           Case{Family::Odd, 7, 1, 168, 182}, Case{Family::Odd, 7, -1, 195, 182}}) {
        const PermutationModule pm = orbit(cs.fam, cs.m, cs.k, 5);
        const Rank3Parameters p = params(cs.fam, cs.m, cs.k);
        const Roots r = quadratic_roots(p, cs.k, Field(5));
        CHECK(liebeck_identity_check(pm, r, p.s));
        CHECK_FALSE(liebeck_identity_check(pm, r, p.s + 1));
        const DimensionSystem d = dimension_system_check(pm, r, p.a);
        CHECK(d.d1 == cs.d1);
        CHECK(d.d2 == cs.d2);
        CHECK(d.consistent);
        CHECK(r.c2 * d.d1 + r.c1 * d.d2 == p.a);
    }
}

TEST_CASE("inter-orbit maps") {
    const QuadraticSpace sp = standard_space(Family::Odd, 7);
    const auto gens = certified_generator_pair(sp, 1).gens;
    const PermutationModule p0 = build_module(sp, 0, Field(2), gens);
    const PermutationModule p1 = build_module(sp, 1, Field(2), gens);
    CHECK(p0.size() == 364);
    const Matrix q01 = qij_matrix(p0, p1);
    CHECK(intertwines(p0, p1, q01));
    CHECK(rank(q01) >= 78);
    std::uint32_t first = 0;
    for (std::size_t j = 0; j < p1.size(); ++j) first += q01.at(0, j);
    for (std::size_t i = 0; i < p0.size(); ++i) {
        std::uint32_t row = 0;
        for (std::size_t j = 0; j < p1.size(); ++j) row += q01.at(i, j);
        CHECK(row == first);
    }
    CHECK(qij_matrix(p1, p1) == p1.adjacency);
    Matrix broken = q01;
    broken.set(0, 0, 1 - broken.at(0, 0));
    CHECK_FALSE(intertwines(p0, p1, broken));
}

TEST_CASE("summand decomposition from centralizer idempotents") {
    const Rank3Parameters p = params(Family::Plus, 6, 1);
    CHECK(summand_dims(orbit(Family::Plus, 6, 1, 5), p) == std::vector<std::size_t>{1, 26, 90});
    CHECK(summand_dims(orbit(Family::Plus, 6, 1, 13), p) == std::vector<std::size_t>{26, 91});
    CHECK(summand_dims(orbit(Family::Plus, 6, 1, 2), p) == std::vector<std::size_t>{1, 116});
    CHECK(summand_dims(orbit(Family::Minus, 4, 1, 2), params(Family::Minus, 4, 1)) == std::vector<std::size_t>{1, 14});
}
