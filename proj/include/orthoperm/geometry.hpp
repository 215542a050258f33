#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthoperm {

enum class Family { Plus, Minus, Odd };

std::string to_string(Family f);
Family parse_family(const std::string& s);

/// Vector or scalar over F_3; every entry is in {0, 1, 2}.
using F3Vec = std::vector<std::uint8_t>;

/// Square matrix over F_3 acting on row vectors from the right.
struct F3Matrix {
    int m = 0;
    std::vector<std::uint8_t> a;  // row-major m*m

    static F3Matrix identity(int m);
    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r * m + c)]; }
    friend bool operator==(const F3Matrix&, const F3Matrix&) = default;
};

F3Vec act_on(const F3Vec& x, const F3Matrix& g);
F3Matrix operator*(const F3Matrix& a, const F3Matrix& b);
F3Matrix transpose(const F3Matrix& a);
int det(const F3Matrix& a);

/// Orthogonal F_3-space with the standard basis e_1, f_1, ..., e_n, f_n (then
/// the anisotropic block or g). Hyperbolic pairs are consecutive.
struct QuadraticSpace {
    Family family = Family::Plus;
    int m = 0;
    int n = 0;
    F3Matrix gram;
    F3Vec qdiag;
};

/// Q-value of a point: 0 (singular), +1 or -1.
using Kappa = int;

inline std::uint8_t f3(int x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }
/// F_3 residue to its signed representative in {-1, 0, 1}.
inline int signed_f3(std::uint8_t x) { return x == 2 ? -1 : static_cast<int>(x); }

QuadraticSpace standard_space(Family family, int m);

std::uint8_t eval_bilinear(const QuadraticSpace& sp, const F3Vec& u, const F3Vec& v);
std::uint8_t eval_q(const QuadraticSpace& sp, const F3Vec& v);

struct ProjectivePoint {
    F3Vec rep;  // first nonzero coordinate is 1
    Kappa qvalue = 0;
};

/// Scales v so its first nonzero coordinate is 1 (v must be nonzero).
F3Vec canonical(F3Vec v);
/// Base-3 code with coordinate 0 most significant; orders like the rep.
std::uint32_t encode(const F3Vec& v);
F3Vec decode(std::uint32_t code, int m);
std::uint32_t power3(int k);

/// All points with Q = kappa, sorted lexicographically by representative.
std::vector<ProjectivePoint> enumerate_points(const QuadraticSpace& sp, Kappa kappa);

/// x -> x - Q(v)(x,v)v; throws std::invalid_argument when Q(v) = 0.
F3Matrix reflection(const QuadraticSpace& sp, const F3Vec& v);
bool preserves_form(const QuadraticSpace& sp, const F3Matrix& g);

/// Nonsingular vectors whose reflections make up default_generators.
std::vector<F3Vec> generator_vectors(const QuadraticSpace& sp);
std::vector<F3Matrix> default_generators(const QuadraticSpace& sp);

using Perm = std::vector<std::uint32_t>;

struct PermAction {
    std::vector<ProjectivePoint> points;
    std::vector<Perm> gens;  // gens[k][i] = index of points[i] * g_k
};

PermAction action_permutations(const QuadraticSpace& sp, const std::vector<F3Matrix>& gens,
                               const std::vector<ProjectivePoint>& points);

/// Action on all 3^m - 1 nonzero vectors (faithful), indexed by encode(v) - 1.
std::vector<Perm> vector_action(const QuadraticSpace& sp, const std::vector<F3Matrix>& gens);

/// Orthogonality graph on the points: adj[i][j] = 1 iff i != j and (p_i, p_j) = 0.
std::vector<std::vector<std::uint8_t>> orthogonality(const QuadraticSpace& sp,
                                                     const std::vector<ProjectivePoint>& points);

struct Rank3Parameters {
    std::int64_t a = 0, b = 0, r = 0, s = 0;
    friend bool operator==(const Rank3Parameters&, const Rank3Parameters&) = default;
};

class ParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks transitivity, that the stabilizer of point 0 has orbits of sizes 1, a, b
/// matching the graph, and strong regularity; returns (a, b, r, s).
Rank3Parameters rank3_certificate(const PermAction& action,
                                  const std::vector<std::vector<std::uint8_t>>& adjacency);

/// Closed-form parameters for family and n at orbit kappa.
Rank3Parameters formula_parameters(Family family, int n, Kappa kappa);
std::uint64_t formula_point_count(Family family, int n, Kappa kappa);
/// |O_m^eps(3)|.
std::uint64_t orthogonal_group_order(Family family, int m);

/// Generators for the full orthogonal group. `certified` is set when two
/// random reflection words were found whose group, computed on the faithful
/// action on nonzero vectors, has the order of the full group; otherwise all
/// default reflections are returned.
struct GeneratorSet {
    std::vector<F3Matrix> gens;
    bool certified = false;
    std::uint64_t order = 0;
};
GeneratorSet certified_generator_pair(const QuadraticSpace& sp, std::uint64_t seed, int tries = 40);

}  // namespace orthoperm
