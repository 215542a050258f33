#include "orthoperm/permmod.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace orthoperm {

PermutationModule build_module(const QuadraticSpace& space, Kappa kappa, Field field,
                               const std::vector<F3Matrix>& group_gens) {
    PermutationModule pm;
    pm.space = space;
    pm.kappa = kappa;
    pm.points = enumerate_points(space, kappa);
    pm.group_gens = group_gens;
    pm.perms = action_permutations(space, group_gens, pm.points).gens;
    pm.module = GModule::from_permutations(field, pm.perms);
    const auto adj = orthogonality(space, pm.points);
    const std::size_t n = pm.points.size();
    pm.adjacency = Matrix(field, n, n);
    pm.adjacency_int = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj[i][j]) {
                pm.adjacency.set(i, j, 1);
                pm.adjacency_int(i, j) = 1;
            }
    for (const Perm& p : pm.perms)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (adj[p[i]][p[j]] != adj[i][j]) throw std::logic_error("generator does not commute with the adjacency");
    return pm;
}

Roots quadratic_roots(const Rank3Parameters& p, Kappa kappa, Field field) {
    const std::int64_t b = p.r - p.s, c = p.s - p.a;
    const std::int64_t disc = b * b - 4 * c;
    if (disc < 0) throw std::logic_error("graph polynomial has no real roots");
    auto q = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (q * q > disc) --q;
    while ((q + 1) * (q + 1) <= disc) ++q;
    if (q * q != disc || (q - b) % 2 != 0) throw std::logic_error("graph polynomial has non-integer roots");
    std::int64_t x = (-b + q) / 2, y = (-b - q) / 2;
    Roots r;
    if (std::llabs(x) != std::llabs(y)) {
        if (std::llabs(x) > std::llabs(y)) std::swap(x, y);
    } else if ((kappa >= 0) != (x > 0)) {
        std::swap(x, y);
    }
    r.c1 = x;
    r.c2 = y;
    r.c1_mod = field.reduce(x);
    r.c2_mod = field.reduce(y);
    r.equal_roots = r.c1_mod == r.c2_mod;
    return r;
}

GraphSubmodules graph_submodules(const PermutationModule& pm, std::uint32_t c) {
    const Matrix v = add_scalar(pm.adjacency, c);
    const std::size_t n = v.rows();
    GraphSubmodules g;
    g.u = Subspace::span(v);
    if (n <= 1) {
        g.u_prime = Subspace(pm.field(), n);
    } else {
        Matrix diff = v.row_block(1, n - 1);
        const std::uint32_t minus_one = pm.field().neg(1);
        for (std::size_t i = 0; i + 1 < n; ++i) diff.add_scaled(i, v.row_data(0), minus_one);
        g.u_prime = Subspace::span(diff);
    }
    if (!pm.module.is_invariant(g.u) || !pm.module.is_invariant(g.u_prime))
        throw std::logic_error("graph submodule is not invariant");
    return g;
}

GraphSubmodulePair graph_submodule_pair(const PermutationModule& pm, const Roots& roots) {
    GraphSubmodulePair out;
    out.c1 = roots.c1_mod;
    out.c2 = roots.c2_mod;
    out.equal_roots = roots.equal_roots;
    out.first = graph_submodules(pm, roots.c1_mod);
    out.second = roots.equal_roots ? out.first : graph_submodules(pm, roots.c2_mod);
    return out;
}

CanonicalSubmodules canonical_submodules(const PermutationModule& pm) {
    const std::size_t n = pm.size();
    Matrix ones(pm.field(), 1, n);
    for (std::size_t c = 0; c < n; ++c) ones.set(0, c, 1);
    CanonicalSubmodules out;
    out.t = Subspace::span(ones);
    out.s = perp(out.t);
    return out;
}

bool liebeck_identity_check(const PermutationModule& pm, const Roots& roots, std::int64_t s) {
    const IntMatrix& a = pm.adjacency_int;
    const IntMatrix lhs = add_scalar(a, roots.c1) * add_scalar(a, roots.c2);
    return lhs == s * IntMatrix::all_ones(a.rows(), a.cols());
}

Matrix qij_matrix(const PermutationModule& from, const PermutationModule& to) {
    Matrix q(from.field(), from.size(), to.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (from.kappa == to.kappa && i == j) continue;
            if (eval_bilinear(from.space, from.points[i].rep, to.points[j].rep) == 0) q.set(i, j, 1);
        }
    return q;
}

bool intertwines(const PermutationModule& from, const PermutationModule& to, const Matrix& q) {
    if (from.perms.size() != to.perms.size()) return false;
    for (std::size_t k = 0; k < from.perms.size(); ++k) {
        const Perm& pi = from.perms[k];
        const Perm& pj = to.perms[k];
        for (std::size_t i = 0; i < from.size(); ++i)
            for (std::size_t j = 0; j < to.size(); ++j)
                if (q.at(pi[i], pj[j]) != q.at(i, j)) return false;
    }
    return true;
}

DimensionSystem dimension_system_check(const PermutationModule& pm, const Roots& roots, std::int64_t a) {
    DimensionSystem out;
    const auto n = static_cast<std::int64_t>(pm.size());
    out.d1 = n - static_cast<std::int64_t>(integer_rank(add_scalar(pm.adjacency_int, roots.c2)));
    out.d2 = n - static_cast<std::int64_t>(integer_rank(add_scalar(pm.adjacency_int, roots.c1)));
    if (roots.c1 == roots.c2) return out;
    const std::int64_t num = a - roots.c1 * (n - 1), den = roots.c2 - roots.c1;
    if (num % den != 0) return out;
    out.solved_d1 = num / den;
    out.solved_d2 = n - 1 - out.solved_d1;
    out.consistent = out.solved_d1 == out.d1 && out.solved_d2 == out.d2;
    return out;
}

namespace {

struct Algebra {
    Field f;
    std::uint32_t a_minus_s, r_minus_s, s, a, n;

    CentralizerElement mul(const CentralizerElement& p, const CentralizerElement& q) const {
        // A^2 = (a - s) I + (r - s) A + s J,  A J = J A = a J,  J^2 = n J.
        const std::uint32_t yy = f.mul(p.y, q.y);
        CentralizerElement e;
        e.x = f.add(f.mul(p.x, q.x), f.mul(yy, a_minus_s));
        e.y = f.add(f.add(f.mul(p.x, q.y), f.mul(p.y, q.x)), f.mul(yy, r_minus_s));
        std::uint32_t z = f.add(f.mul(p.x, q.z), f.mul(p.z, q.x));
        z = f.add(z, f.mul(yy, s));
        z = f.add(z, f.mul(f.add(f.mul(p.y, q.z), f.mul(p.z, q.y)), a));
        z = f.add(z, f.mul(f.mul(p.z, q.z), n));
        e.z = z;
        return e;
    }
};

bool is_zero(const CentralizerElement& e) { return e.x == 0 && e.y == 0 && e.z == 0; }

}  // namespace

std::vector<Summand> summand_decomposition(const PermutationModule& pm, const Rank3Parameters& p) {
    const Field f = pm.field();
    const Algebra alg{f,
                      f.reduce(p.a - p.s),
                      f.reduce(p.r - p.s),
                      f.reduce(p.s),
                      f.reduce(p.a),
                      f.reduce(static_cast<std::int64_t>(pm.size()))};
    std::vector<CentralizerElement> idem;
    const std::uint32_t ell = f.ell();
    for (std::uint32_t x = 0; x < ell; ++x)
        for (std::uint32_t y = 0; y < ell; ++y)
            for (std::uint32_t z = 0; z < ell; ++z) {
                const CentralizerElement e{x, y, z};
                if (!is_zero(e) && alg.mul(e, e) == e) idem.push_back(e);
            }
    std::vector<CentralizerElement> primitive;
    for (const auto& e : idem) {
        bool prim = true;
        for (const auto& g : idem)
            if (!(g == e) && alg.mul(g, e) == g) {
                prim = false;
                break;
            }
        if (prim) primitive.push_back(e);
    }

    const std::size_t n = pm.size();
    Matrix j(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) j.set(r, c, 1);
    std::vector<Summand> out;
    Subspace total(f, n);
    std::size_t dims = 0;
    for (const auto& e : primitive) {
        const Matrix m = add_scalar(scaled(pm.adjacency, e.y), e.x) + scaled(j, e.z);
        Summand s{e, Subspace::span(m)};
        if (!pm.module.is_invariant(s.image)) throw std::logic_error("idempotent image is not invariant");
        dims += s.image.dim();
        total = subspace_sum(total, s.image);
        out.push_back(std::move(s));
    }
    if (dims != n || !total.is_full()) throw std::logic_error("idempotent images do not form a direct sum");
    return out;
}

}  // namespace orthoperm
