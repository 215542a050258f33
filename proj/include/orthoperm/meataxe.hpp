#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthoperm/gmodule.hpp"

namespace orthoperm {

/// Norton certificate: theta = word(G) has ker(theta - lambda) = <vector>,
/// the vector spins to the whole module and so does a kernel vector of the
/// transposed element under the transposed action.
struct NortonCertificate {
    AlgebraWord word;
    std::uint32_t lambda = 0;
    Matrix vector;
};

enum class Verdict { Irreducible, Reducible, Inconclusive };

struct IrreducibilityResult {
    Verdict verdict = Verdict::Inconclusive;
    NortonCertificate cert;  // set when Irreducible
    Subspace witness;        // proper nonzero invariant subspace when Reducible
    int attempts = 0;
};

class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

IrreducibilityResult meataxe_irreducible(const GModule& m, std::uint64_t seed, int budget = 200);

/// An irreducible module in its Norton standard basis: basis() is the spin
/// record of the certificate vector and std_gens()[k] = B g_k B^-1.
class Irreducible {
public:
    Irreducible(GModule module, NortonCertificate cert);

    const GModule& module() const { return module_; }
    const NortonCertificate& cert() const { return cert_; }
    const SpinRecord& record() const { return record_; }
    const std::vector<Matrix>& std_gens() const { return std_gens_; }
    std::size_t dim() const { return module_.dim(); }

    /// Standard basis of `t` matching ours, or nullopt when t is not isomorphic.
    std::optional<Matrix> standard_basis_in(const GModule& t) const;

private:
    GModule module_;
    NortonCertificate cert_;
    SpinRecord record_;
    std::vector<Matrix> std_gens_;
};

bool iso_test(const Irreducible& s, const GModule& t);
/// Both modules must be irreducible; certifies `a` first.
bool iso_test(const GModule& a, const GModule& b, std::uint64_t seed);

/// Pairwise non-isomorphic irreducibles met during a run, closed under duals.
class Registry {
public:
    explicit Registry(std::uint64_t seed = 1) : seed_(seed) {}

    /// Id of the class of `s` (adding it, and its dual, when new).
    int identify(const GModule& s, const NortonCertificate& cert);
    /// Certifies s first; throws InconclusiveError or std::invalid_argument if s is reducible.
    int identify(const GModule& s);

    std::size_t size() const { return entries_.size(); }
    const Irreducible& at(int id) const { return entries_.at(static_cast<std::size_t>(id)).irr; }
    int dual_of(int id) const { return entries_.at(static_cast<std::size_t>(id)).dual; }
    std::size_t dim_of(int id) const { return at(id).dim(); }
    /// Class of the trivial module, or -1.
    int trivial_id() const;

    void set_name(int id, std::string name);
    /// Assigned name, or "S<id>" with its dimension when unnamed.
    std::string name(int id) const;

private:
    struct Entry {
        Irreducible irr;
        int dual = -1;
        std::string name;
    };
    int find(const GModule& s) const;

    std::uint64_t seed_;
    std::vector<Entry> entries_;
};

/// Multiset of irreducible classes.
using Labels = std::map<int, int>;
std::size_t labels_dim(const Labels& l, const Registry& reg);
Labels dual_labels(const Labels& l, const Registry& reg);
std::string labels_to_string(const Labels& l, const Registry& reg);

/// Composition factors as registry ids, bottom factor first.
std::vector<int> composition_factors(const GModule& m, Registry& reg, std::uint64_t seed);
Labels factor_multiset(const std::vector<int>& ids);

/// Images of a basis of Hom(S, M); each matrix has dim S rows, the images
/// of S's standard basis vectors.
std::vector<Matrix> hom_from_irreducible(const Irreducible& s, const GModule& m);
/// Sum of all images of S in M.
Subspace isotypic_socle(const Irreducible& s, const GModule& m);

/// Basis of all X (dim M x dim N) with g_M X = X g_N for every generator.
/// Dense solve: intended for dim M * dim N up to a few thousand.
std::vector<Matrix> hom_space(const GModule& m, const GModule& n);

struct SocleLayer {
    Subspace upper;  // cumulative: soc_k(M) inside M
    Labels labels;   // composition of soc_k / soc_{k-1}
};

/// Socle of `m` using the classes in `pool` (all composition factors of m).
SocleLayer socle(const GModule& m, const Registry& reg, const std::vector<int>& pool);
std::vector<SocleLayer> socle_series(const GModule& m, const Registry& reg, const std::vector<int>& pool);

/// Radical as the annihilator of the socle of the dual, and the head labels.
struct HeadResult {
    Subspace radical;
    Labels labels;
};
HeadResult head(const GModule& m, const Registry& reg, const std::vector<int>& pool);

/// Every socle layer is simple.
bool is_uniserial(const std::vector<SocleLayer>& series);
std::vector<Labels> layer_labels(const std::vector<SocleLayer>& series);

/// theta = word(G) with (theta - lambda) of nullity 1 on S, the same after
/// squaring, and invertible on every other class in the pool.
struct Peakword {
    AlgebraWord word;
    std::uint32_t lambda = 0;
};
Peakword find_peakword(const Registry& reg, int id, const std::vector<int>& pool, std::uint64_t seed,
                       int budget = 3000);
/// ker (theta - lambda)^dim on m.
Subspace stable_kernel(const GModule& m, const Peakword& p);

/// All nonzero vectors of `u` up to scalars, at most `cap` of them (throws beyond).
std::vector<Matrix> projective_vectors(const Subspace& u, std::size_t cap);

/// The submodules with a unique maximal submodule, generated by the stable
/// peakword kernels.
std::vector<Subspace> local_submodules(const GModule& m, const Registry& reg, const std::vector<int>& pool,
                                       std::uint64_t seed, std::size_t cap = 4096);
/// Every submodule of m (sums of local submodules), sorted by dimension.
std::vector<Subspace> submodule_lattice(const GModule& m, const Registry& reg, const std::vector<int>& pool,
                                        std::uint64_t seed, std::size_t cap = 20000);

/// Searches for m = C_1 + ... + C_k (direct) where C_i has socle series
/// `shapes[i]` and a simple head. Returns the summands found.
std::optional<std::vector<Subspace>> find_direct_sum(const GModule& m, const Registry& reg,
                                                     const std::vector<int>& pool,
                                                     const std::vector<std::vector<Labels>>& shapes,
                                                     std::uint64_t seed);

/// Restriction to an invariant subspace u, and the action on m / u.
std::pair<GModule, GModule> sub_quotient(const GModule& m, const Subspace& u);

}  // namespace orthoperm
