#include "orthoperm/geometry.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "orthoperm/perm_group.hpp"

namespace orthoperm {

std::string to_string(Family f) {
    switch (f) {
        case Family::Plus: return "plus";
        case Family::Minus: return "minus";
        case Family::Odd: return "odd";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "plus" || s == "+") return Family::Plus;
    if (s == "minus" || s == "-") return Family::Minus;
    if (s == "odd") return Family::Odd;
    throw std::invalid_argument("unknown family '" + s + "' (expected plus, minus or odd)");
}

F3Matrix F3Matrix::identity(int m) {
    F3Matrix g{m, std::vector<std::uint8_t>(static_cast<std::size_t>(m * m), 0)};
    for (int i = 0; i < m; ++i) g.a[static_cast<std::size_t>(i * m + i)] = 1;
    return g;
}

F3Vec act_on(const F3Vec& x, const F3Matrix& g) {
    F3Vec y(static_cast<std::size_t>(g.m), 0);
    for (int i = 0; i < g.m; ++i) {
        if (!x[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < g.m; ++j) y[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(i)] * g.at(i, j);
    }
    for (auto& v : y) v %= 3;
    return y;
}

F3Matrix operator*(const F3Matrix& a, const F3Matrix& b) {
    F3Matrix c{a.m, std::vector<std::uint8_t>(a.a.size(), 0)};
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.m; ++j) {
            int s = 0;
            for (int k = 0; k < a.m; ++k) s += a.at(i, k) * b.at(k, j);
            c.a[static_cast<std::size_t>(i * a.m + j)] = f3(s);
        }
    return c;
}

F3Matrix transpose(const F3Matrix& a) {
    F3Matrix t = a;
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.m; ++j) t.a[static_cast<std::size_t>(j * a.m + i)] = a.at(i, j);
    return t;
}

int det(const F3Matrix& a) {
    std::vector<int> w(a.a.begin(), a.a.end());
    const int m = a.m;
    int d = 1;
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < m && w[p * m + c] == 0) ++p;
        if (p == m) return 0;
        if (p != c) {
            for (int j = 0; j < m; ++j) std::swap(w[p * m + j], w[c * m + j]);
            d = -d;
        }
        const int piv = w[c * m + c];
        d *= piv;
        const int inv = piv;  // x^{-1} = x in F_3
        for (int r = c + 1; r < m; ++r) {
            const int k = w[r * m + c] * inv % 3;
            if (!k) continue;
            for (int j = c; j < m; ++j) w[r * m + j] = ((w[r * m + j] - k * w[c * m + j]) % 3 + 3) % 3;
        }
    }
    return signed_f3(f3(d));
}

QuadraticSpace standard_space(Family family, int m) {
    const bool even = m % 2 == 0;
    if (family == Family::Odd ? (even || m < 3) : (!even || m < 2))
        throw std::invalid_argument("unsupported dimension " + std::to_string(m) + " for family " +
                                    to_string(family));
    QuadraticSpace sp;
    sp.family = family;
    sp.m = m;
    sp.n = m / 2;
    sp.gram = F3Matrix{m, std::vector<std::uint8_t>(static_cast<std::size_t>(m * m), 0)};
    auto set = [&](int i, int j, int v) {
        sp.gram.a[static_cast<std::size_t>(i * m + j)] = f3(v);
        sp.gram.a[static_cast<std::size_t>(j * m + i)] = f3(v);
    };
    const int pairs = family == Family::Minus ? sp.n - 1 : sp.n;
    for (int i = 0; i < pairs; ++i) set(2 * i, 2 * i + 1, 1);
    if (family == Family::Minus) {
        set(m - 2, m - 2, 1);
        set(m - 1, m - 1, 1);
    }
    if (family == Family::Odd) set(m - 1, m - 1, 1);
    // (v,v) = 2Q(v) and 1/2 = 2 in F_3.
    sp.qdiag.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) sp.qdiag[static_cast<std::size_t>(i)] = f3(2 * sp.gram.at(i, i));
    return sp;
}

std::uint8_t eval_bilinear(const QuadraticSpace& sp, const F3Vec& u, const F3Vec& v) {
    int s = 0;
    for (int i = 0; i < sp.m; ++i) {
        if (!u[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < sp.m; ++j) s += u[static_cast<std::size_t>(i)] * sp.gram.at(i, j) * v[static_cast<std::size_t>(j)];
    }
    return f3(s);
}

std::uint8_t eval_q(const QuadraticSpace& sp, const F3Vec& v) {
    int s = 0;
    for (int i = 0; i < sp.m; ++i) {
        const int xi = v[static_cast<std::size_t>(i)];
        if (!xi) continue;
        s += xi * xi * sp.qdiag[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < sp.m; ++j) s += xi * v[static_cast<std::size_t>(j)] * sp.gram.at(i, j);
    }
    return f3(s);
}

F3Vec canonical(F3Vec v) {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    if (it == v.end()) throw std::invalid_argument("zero vector has no projective point");
    if (*it == 2)
        for (auto& x : v) x = static_cast<std::uint8_t>((3 - x) % 3);
    return v;
}

std::uint32_t power3(int k) {
    std::uint32_t p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

std::uint32_t encode(const F3Vec& v) {
    std::uint32_t c = 0;
    for (std::uint8_t x : v) c = c * 3 + x;
    return c;
}

F3Vec decode(std::uint32_t code, int m) {
    F3Vec v(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % 3);
        code /= 3;
    }
    return v;
}

std::vector<ProjectivePoint> enumerate_points(const QuadraticSpace& sp, Kappa kappa) {
    std::vector<ProjectivePoint> out;
    const std::uint32_t total = power3(sp.m);
    const std::uint8_t target = f3(kappa);
    for (std::uint32_t c = 1; c < total; ++c) {
        F3Vec v = decode(c, sp.m);
        if (*std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; }) != 1) continue;
        if (eval_q(sp, v) == target) out.push_back({std::move(v), kappa});
    }
    return out;
}

F3Matrix reflection(const QuadraticSpace& sp, const F3Vec& v) {
    const std::uint8_t q = eval_q(sp, v);
    if (q == 0) throw std::invalid_argument("reflection in a singular vector");
    F3Matrix g = F3Matrix::identity(sp.m);
    for (int i = 0; i < sp.m; ++i) {
        F3Vec ei(static_cast<std::size_t>(sp.m), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        const int coef = q * eval_bilinear(sp, ei, v);
        for (int j = 0; j < sp.m; ++j)
            g.a[static_cast<std::size_t>(i * sp.m + j)] = f3(g.at(i, j) - coef * v[static_cast<std::size_t>(j)]);
    }
    return g;
}

bool preserves_form(const QuadraticSpace& sp, const F3Matrix& g) {
    if (!(g * sp.gram * transpose(g) == sp.gram)) return false;
    for (int i = 0; i < sp.m; ++i) {
        F3Vec ei(static_cast<std::size_t>(sp.m), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        if (eval_q(sp, act_on(ei, g)) != sp.qdiag[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

std::vector<F3Vec> generator_vectors(const QuadraticSpace& sp) {
    // b_j, b_j +- b_{j+1} and b_j + b_{j+1} +- b_{j+2} over consecutive basis
    // vectors, keeping the nonsingular ones, one per projective point.
    const int m = sp.m;
    std::vector<F3Vec> candidates;
    auto unit = [m](std::initializer_list<std::pair<int, int>> terms) {
        F3Vec v(static_cast<std::size_t>(m), 0);
        for (auto [i, c] : terms) v[static_cast<std::size_t>(i)] = f3(c);
        return v;
    };
    for (int j = 0; j < m; ++j) candidates.push_back(unit({{j, 1}}));
    for (int j = 0; j + 1 < m; ++j)
        for (int sgn : {1, -1}) candidates.push_back(unit({{j, 1}, {j + 1, sgn}}));
    for (int j = 0; j + 2 < m; ++j)
        for (int sgn : {1, -1}) candidates.push_back(unit({{j, 1}, {j + 1, 1}, {j + 2, sgn}}));
    std::vector<F3Vec> out;
    std::set<F3Vec> seen;
    for (auto& v : candidates) {
        if (eval_q(sp, v) == 0) continue;
        if (seen.insert(canonical(v)).second) out.push_back(v);
    }
    return out;
}

std::vector<F3Matrix> default_generators(const QuadraticSpace& sp) {
    std::vector<F3Matrix> gens;
    for (const auto& v : generator_vectors(sp)) gens.push_back(reflection(sp, v));
    return gens;
}

PermAction action_permutations(const QuadraticSpace& sp, const std::vector<F3Matrix>& gens,
                               const std::vector<ProjectivePoint>& points) {
    std::vector<std::int32_t> index(power3(sp.m), -1);
    for (std::size_t i = 0; i < points.size(); ++i) index[encode(points[i].rep)] = static_cast<std::int32_t>(i);
    PermAction act{points, {}};
    for (const auto& g : gens) {
        Perm p(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::int32_t j = index[encode(canonical(act_on(points[i].rep, g)))];
            if (j < 0) throw std::logic_error("generator maps a point outside its orbit");
            p[i] = static_cast<std::uint32_t>(j);
        }
        act.gens.push_back(std::move(p));
    }
    return act;
}

std::vector<Perm> vector_action(const QuadraticSpace& sp, const std::vector<F3Matrix>& gens) {
    const std::uint32_t total = power3(sp.m);
    std::vector<Perm> out;
    for (const auto& g : gens) {
        Perm p(total - 1);
        for (std::uint32_t c = 1; c < total; ++c) p[c - 1] = encode(act_on(decode(c, sp.m), g)) - 1;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> orthogonality(const QuadraticSpace& sp,
                                                     const std::vector<ProjectivePoint>& points) {
    const std::size_t N = points.size();
    std::vector<std::vector<std::uint8_t>> adj(N, std::vector<std::uint8_t>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (eval_bilinear(sp, points[i].rep, points[j].rep) == 0) adj[i][j] = adj[j][i] = 1;
    return adj;
}

Rank3Parameters rank3_certificate(const PermAction& action,
                                  const std::vector<std::vector<std::uint8_t>>& adjacency) {
    const std::size_t N = action.points.size();
    if (N < 3) throw ParameterError("fewer than three points");
    if (orbit(action.gens, 0).size() != N) throw ParameterError("action is not transitive");

    // Orbits of the stabilizer of point 0 are the orbital classes through (0, x).
    const auto cls = orbital_classes(action.gens, N);
    std::set<std::uint32_t> suborbits;
    for (std::size_t x = 0; x < N; ++x) suborbits.insert(cls[x]);
    if (suborbits.size() != 3) throw ParameterError("point stabilizer has " + std::to_string(suborbits.size()) + " orbits, not 3");
    std::int32_t adj_class = -1, non_class = -1;
    for (std::size_t x = 1; x < N; ++x) {
        std::int32_t& slot = adjacency[0][x] ? adj_class : non_class;
        if (slot == -1) slot = static_cast<std::int32_t>(cls[x]);
        if (slot != static_cast<std::int32_t>(cls[x]))
            throw ParameterError("orthogonality is not a union of suborbits");
    }
    if (adj_class < 0 || non_class < 0) throw ParameterError("a suborbit is empty");

    Rank3Parameters p;
    for (std::size_t x = 0; x < N; ++x) p.a += adjacency[0][x];
    p.b = static_cast<std::int64_t>(N) - 1 - p.a;

    // Strong regularity, pair by pair.
    const std::size_t W = (N + 63) / 64;
    std::vector<std::uint64_t> bits(N * W, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (adjacency[i][j]) bits[i * W + j / 64] |= std::uint64_t{1} << (j % 64);
    p.r = p.s = -1;
    for (std::size_t i = 0; i < N; ++i) {
        std::int64_t deg = 0;
        for (std::size_t w = 0; w < W; ++w) deg += std::popcount(bits[i * W + w]);
        if (deg != p.a) throw ParameterError("orthogonality graph is not regular");
        for (std::size_t j = i + 1; j < N; ++j) {
            std::int64_t common = 0;
            for (std::size_t w = 0; w < W; ++w) common += std::popcount(bits[i * W + w] & bits[j * W + w]);
            std::int64_t& target = adjacency[i][j] ? p.r : p.s;
            if (target == -1) target = common;
            if (target != common) throw ParameterError("orthogonality graph is not strongly regular");
        }
    }
    return p;
}

namespace {

std::int64_t p3(int k) { return static_cast<std::int64_t>(power3(k)); }

}  // namespace

Rank3Parameters formula_parameters(Family family, int n, Kappa kappa) {
    const std::int64_t t = p3(n), t1 = p3(n - 1), t2 = n >= 2 ? p3(n - 2) : 0;
    switch (family) {
        case Family::Plus:
            return {t1 * (t1 - 1) / 2, t1 * t1 - 1, t2 * (t1 + 1) / 2, t1 * (t2 - 1) / 2};
        case Family::Minus:
            return {t1 * (t1 + 1) / 2, t1 * t1 - 1, t2 * (t1 - 1) / 2, t1 * (t2 + 1) / 2};
        case Family::Odd: {
            const std::int64_t k = kappa;
            const std::int64_t rs = t1 * (t1 + k) / 2;
            return {t1 * (t + k) / 2, (t + k) * (t1 - k), rs, rs};
        }
    }
    throw std::invalid_argument("bad family");
}

std::uint64_t formula_point_count(Family family, int n, Kappa kappa) {
    const std::int64_t t = p3(n), t1 = p3(n - 1);
    std::int64_t nonsingular = 0, total = 0;
    switch (family) {
        case Family::Plus:
            nonsingular = t1 * (t - 1) / 2;
            total = (t * t - 1) / 2;
            break;
        case Family::Minus:
            nonsingular = t1 * (t + 1) / 2;
            total = (t * t - 1) / 2;
            break;
        case Family::Odd:
            nonsingular = t * (t - (kappa == 0 ? 0 : kappa)) / 2;
            total = (3 * t * t - 1) / 2;
            break;
    }
    if (kappa != 0) return static_cast<std::uint64_t>(nonsingular);
    std::int64_t both = 0;
    if (family == Family::Odd)
        both = t * (t - 1) / 2 + t * (t + 1) / 2;
    else
        both = 2 * nonsingular;
    return static_cast<std::uint64_t>(total - both);
}

std::uint64_t orthogonal_group_order(Family family, int m) {
    const int n = m / 2;
    unsigned __int128 ord = 2;
    if (family == Family::Odd) {
        for (int i = 0; i < n * n; ++i) ord *= 3;
        for (int i = 1; i <= n; ++i) ord *= (static_cast<unsigned __int128>(p3(2 * i)) - 1);
    } else {
        const std::int64_t eps = family == Family::Plus ? 1 : -1;
        for (int i = 0; i < n * (n - 1); ++i) ord *= 3;
        ord *= static_cast<unsigned __int128>(p3(n) - eps);
        for (int i = 1; i < n; ++i) ord *= (static_cast<unsigned __int128>(p3(2 * i)) - 1);
    }
    if (ord > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(ord);
}

GeneratorSet certified_generator_pair(const QuadraticSpace& sp, std::uint64_t seed, int tries) {
    const std::vector<F3Matrix> refl = default_generators(sp);
    const std::uint64_t target = orthogonal_group_order(sp.family, sp.m);
    std::mt19937_64 rng(seed);
    auto word = [&](std::size_t len) {
        F3Matrix w = refl[rng() % refl.size()];
        for (std::size_t i = 1; i < len; ++i) w = w * refl[rng() % refl.size()];
        return w;
    };
    for (int t = 0; t < tries; ++t) {
        // Odd and even lengths, so the pair is not inside the rotation subgroup.
        const std::size_t len = static_cast<std::size_t>(sp.m) + 1 + rng() % 4;
        std::vector<F3Matrix> pair{word(len | 1), word((len + 1) & ~std::size_t{1})};
        const std::uint64_t ord = StabilizerChain(vector_action(sp, pair), seed + static_cast<std::uint64_t>(t)).order();
        if (ord == target) return GeneratorSet{std::move(pair), true, ord};
    }
    return GeneratorSet{refl, false, StabilizerChain(vector_action(sp, refl), seed).order()};
}

}  // namespace orthoperm
