#pragma once

#include <cstdint>
#include <vector>

#include "orthoperm/geometry.hpp"
#include "orthoperm/gmodule.hpp"
#include "orthoperm/intmat.hpp"

namespace orthoperm {

/// F P^kappa: the permutation module on one orbit of points, with the
/// orthogonality adjacency A (A[i][j] = 1 iff i != j and p_i is orthogonal to p_j).
struct PermutationModule {
    QuadraticSpace space;
    Kappa kappa = 1;
    std::vector<ProjectivePoint> points;
    std::vector<F3Matrix> group_gens;
    std::vector<Perm> perms;
    GModule module;
    Matrix adjacency;         // over GF(ell)
    IntMatrix adjacency_int;  // over the integers

    Field field() const { return module.field(); }
    std::size_t size() const { return points.size(); }
};

/// kappa = 0 gives the singular points.
PermutationModule build_module(const QuadraticSpace& space, Kappa kappa, Field field,
                               const std::vector<F3Matrix>& group_gens);

/// Integer roots of x^2 + (r - s) x + s - a, ordered so that c1 has the
/// smaller absolute value (c1 = kappa * |c| when they are opposite), with
/// their residues mod ell.
struct Roots {
    std::int64_t c1 = 0, c2 = 0;
    std::uint32_t c1_mod = 0, c2_mod = 0;
    bool equal_roots = false;
};
Roots quadratic_roots(const Rank3Parameters& p, Kappa kappa, Field field);

struct GraphSubmodules {
    Subspace u, u_prime;  // U_c and U'_c
};
/// U_c = rowspace(cI + A), U'_c = differences of its rows against row 0.
GraphSubmodules graph_submodules(const PermutationModule& pm, std::uint32_t c);

struct GraphSubmodulePair {
    std::uint32_t c1 = 0, c2 = 0;
    GraphSubmodules first, second;
    bool equal_roots = false;
};
GraphSubmodulePair graph_submodule_pair(const PermutationModule& pm, const Roots& roots);

/// S: coordinate sum zero. T: multiples of the all-ones vector.
struct CanonicalSubmodules {
    Subspace s, t;
};
CanonicalSubmodules canonical_submodules(const PermutationModule& pm);

/// (A + c1 I)(A + c2 I) == s J over the integers.
bool liebeck_identity_check(const PermutationModule& pm, const Roots& roots, std::int64_t s);

/// Matrix of alpha -> sum of the points of P^j orthogonal to alpha (alpha in P^i).
/// Both modules must come from the same space and generators.
Matrix qij_matrix(const PermutationModule& from, const PermutationModule& to);
/// P_g^(i) Q = Q P_g^(j) for every generator.
bool intertwines(const PermutationModule& from, const PermutationModule& to, const Matrix& q);

/// Exact eigenspace dimensions d1 = dim U'_{c1} = nullity(A + c2 I), d2 =
/// nullity(A + c1 I), and the solution of d1 + d2 = N - 1, c2 d1 + c1 d2 = a.
struct DimensionSystem {
    std::int64_t d1 = 0, d2 = 0;
    std::int64_t solved_d1 = 0, solved_d2 = 0;
    bool consistent = false;
};
DimensionSystem dimension_system_check(const PermutationModule& pm, const Roots& roots, std::int64_t a);

/// Element x I + y A + z J of the centralizer algebra.
struct CentralizerElement {
    std::uint32_t x = 0, y = 0, z = 0;
    friend bool operator==(const CentralizerElement&, const CentralizerElement&) = default;
};

struct Summand {
    CentralizerElement idempotent;
    Subspace image;
};
/// Images of the primitive idempotents of span{I, A, J} over GF(ell); since
/// this algebra is the full endomorphism ring, these are the indecomposable
/// summands. Throws when the images do not form a direct sum.
std::vector<Summand> summand_decomposition(const PermutationModule& pm, const Rank3Parameters& p);

}  // namespace orthoperm
