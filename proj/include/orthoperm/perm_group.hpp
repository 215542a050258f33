#pragma once

#include <cstdint>
#include <vector>

#include "orthoperm/geometry.hpp"

namespace orthoperm {

/// a then b (right action): (a*b)[x] = b[a[x]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t degree);
bool is_identity(const Perm& p);

/// Orbit of `start`, in breadth-first order.
std::vector<std::uint32_t> orbit(const std::vector<Perm>& gens, std::uint32_t start);

/// Orbits on ordered pairs (orbitals); result[i * degree + j] is the class id of (i, j).
std::vector<std::uint32_t> orbital_classes(const std::vector<Perm>& gens, std::size_t degree);

/// Randomized Schreier-Sims stabilizer chain. The order it reports is a lower
/// bound for the true order that becomes exact with overwhelming probability
/// once `stop_after` consecutive random elements sift through.
class StabilizerChain {
public:
    StabilizerChain(const std::vector<Perm>& gens, std::uint64_t seed, int stop_after = 40);

    std::uint64_t order() const;
    std::vector<std::uint32_t> base() const;
    std::vector<std::size_t> orbit_lengths() const;
    bool contains(const Perm& g) const;

private:
    struct Level {
        std::uint32_t base_point;
        std::vector<std::int32_t> label;  // -1 outside the orbit, -2 at the root, else generator
        std::vector<std::uint32_t> orbit;
    };

    std::size_t sift(Perm& g) const;
    void add_generator(Perm h, std::size_t level);
    void rebuild(std::size_t level);

    std::size_t degree_;
    std::vector<Perm> strong_;
    std::vector<Perm> strong_inv_;
    std::vector<std::size_t> depth_;
    std::vector<Level> levels_;
};

std::uint64_t group_order(const std::vector<Perm>& gens, std::uint64_t seed);

}  // namespace orthoperm
