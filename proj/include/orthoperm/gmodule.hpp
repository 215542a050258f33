#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orthoperm/geometry.hpp"
#include "orthoperm/matrix.hpp"
#include "orthoperm/subspace.hpp"

namespace orthoperm {

/// Finite-dimensional representation given by generator matrices acting on
/// row vectors. Permutation modules also keep the permutations, which makes
/// applying a generator O(dim).
class GModule {
public:
    GModule() = default;
    static GModule from_matrices(Field field, std::vector<Matrix> gens);
    static GModule from_permutations(Field field, const std::vector<Perm>& perms);

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::size_t num_gens() const { return gens_.size(); }
    const Matrix& gen(std::size_t k) const { return gens_[k]; }
    const std::vector<Matrix>& gens() const { return gens_; }
    bool has_permutations() const { return !perms_.empty(); }
    const std::vector<Perm>& permutations() const { return perms_; }

    /// out = v * g_k on raw rows of words_for(field, dim) words.
    void act(std::size_t k, const std::uint64_t* v, std::uint64_t* out) const;
    /// Every row of `vs` times g_k.
    Matrix act(std::size_t k, const Matrix& vs) const;

    /// Contragredient module: generators (g^-1)^T.
    GModule dual() const;
    /// Generators g^T; spinning under these gives the invariant subspaces of the dual.
    GModule transposed() const;

    /// `u` is invariant under every generator.
    bool is_invariant(const Subspace& u) const;

private:
    Field field_{};
    std::size_t dim_ = 0;
    std::vector<Matrix> gens_;
    std::vector<Perm> perms_;
};

/// Smallest invariant subspace containing the rows of `seeds`.
Subspace spin(const GModule& m, const Matrix& seeds);

/// Basis obtained by spinning one vector breadth-first; every vector after
/// the first is b[parent] * g[gen].
struct SpinRecord {
    struct Step {
        std::uint32_t parent;
        std::uint32_t gen;
    };
    Matrix basis;  // raw (unreduced) spin vectors in order
    std::vector<Step> steps;  // steps[t] produced basis row t + 1

    /// Replays the steps from `start` inside another module with the same generator count.
    Matrix replay(const GModule& m, const Matrix& start) const;
};

/// Spins `v` and records the words; stops early once `limit` vectors are found.
SpinRecord spin_record(const GModule& m, const Matrix& v, std::size_t limit = SIZE_MAX);

/// Straight-line program in the group algebra. Each op is a generator, a
/// product of two earlier values, or an earlier value plus c times another.
class AlgebraWord {
public:
    struct Op {
        enum Kind : std::uint8_t { Gen, Mul, Add } kind;
        std::uint32_t a = 0, b = 0;
        std::uint32_t coef = 1;
    };

    AlgebraWord() = default;
    explicit AlgebraWord(std::vector<Op> ops) : ops_(std::move(ops)) {}

    const std::vector<Op>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }
    /// Program truncated after op `last`, whose value becomes the result.
    AlgebraWord prefix(std::size_t last) const;
    /// Value of the final op as a dim x dim matrix (zero matrix for the empty word).
    Matrix evaluate(const GModule& m) const;
    std::string to_string() const;

private:
    std::vector<Op> ops_;
};

/// Incrementally extends a random program and evaluates each new value once.
class RandomWordSequence {
public:
    RandomWordSequence(const GModule& m, std::uint64_t seed);
    /// Appends one op and returns its value.
    const Matrix& next();
    const AlgebraWord& word() const { return word_; }

private:
    const GModule* module_;
    std::mt19937_64 rng_;
    std::vector<AlgebraWord::Op> ops_;
    std::vector<Matrix> values_;
    AlgebraWord word_;
};

/// The action on upper / lower for invariant subspaces lower <= upper of a module.
/// Coordinates on the quotient are taken at the pivots of `complement`, an
/// echelon basis of upper reduced modulo lower.
class Subquotient {
public:
    Subquotient(const GModule& parent, Subspace lower, Subspace upper);

    const GModule& module() const { return module_; }
    const Subspace& lower() const { return lower_; }
    const Subspace& upper() const { return upper_; }
    std::size_t dim() const { return module_.dim(); }

    /// Rows of coordinates on upper/lower to vectors of the parent (representatives).
    Matrix lift(const Matrix& coords) const;
    /// Subspace W of the subquotient to its preimage lower + lift(W) in the parent.
    Subspace preimage(const Subspace& w) const;
    /// Vectors of upper to coordinates on upper/lower.
    Matrix project(const Matrix& vectors) const;

private:
    Subspace lower_, upper_;
    Subspace complement_;
    GModule module_;
};

}  // namespace orthoperm
