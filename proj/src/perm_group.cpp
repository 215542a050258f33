#include "orthoperm/perm_group.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace orthoperm {

Perm compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<std::uint32_t>(x);
    return out;
}

Perm identity_perm(std::size_t degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] != x) return false;
    return true;
}

std::vector<std::uint32_t> orbit(const std::vector<Perm>& gens, std::uint32_t start) {
    if (gens.empty()) return {start};
    std::vector<char> seen(gens[0].size(), 0);
    std::vector<std::uint32_t> out{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const Perm& g : gens) {
            const std::uint32_t y = g[out[i]];
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    }
    return out;
}

namespace {

std::size_t find_root(std::vector<std::uint32_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::vector<std::uint32_t> orbital_classes(const std::vector<Perm>& gens, std::size_t degree) {
    const std::size_t total = degree * degree;
    std::vector<std::uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0u);
    for (const Perm& g : gens) {
        for (std::size_t i = 0; i < degree; ++i) {
            for (std::size_t j = 0; j < degree; ++j) {
                const std::size_t a = find_root(parent, i * degree + j);
                const std::size_t b = find_root(parent, std::size_t{g[i]} * degree + g[j]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::uint32_t>(std::min(a, b));
            }
        }
    }
    std::vector<std::uint32_t> id(total, UINT32_MAX), out(total);
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < total; ++x) {
        const std::size_t r = find_root(parent, x);
        if (id[r] == UINT32_MAX) id[r] = next++;
        out[x] = id[r];
    }
    return out;
}

StabilizerChain::StabilizerChain(const std::vector<Perm>& gens, std::uint64_t seed, int stop_after)
    : degree_(gens.empty() ? 0 : gens[0].size()) {
    for (const Perm& g : gens) {
        Perm h = g;
        const std::size_t lvl = sift(h);
        if (!is_identity(h)) add_generator(std::move(h), lvl);
    }
    if (gens.empty()) return;

    // Product replacement for random elements.
    std::mt19937_64 rng(seed);
    std::vector<Perm> slots;
    while (slots.size() < std::max<std::size_t>(10, gens.size()))
        slots.push_back(gens[slots.size() % gens.size()]);
    Perm acc = identity_perm(degree_);
    auto step = [&] {
        const std::size_t i = rng() % slots.size();
        std::size_t j = rng() % (slots.size() - 1);
        if (j >= i) ++j;
        slots[i] = (rng() & 1) ? compose(slots[i], slots[j]) : compose(slots[i], inverse(slots[j]));
        acc = compose(acc, slots[i]);
    };
    for (int w = 0; w < 60; ++w) step();

    int streak = 0;
    while (streak < stop_after) {
        step();
        Perm h = acc;
        const std::size_t lvl = sift(h);
        if (is_identity(h)) {
            ++streak;
        } else {
            streak = 0;
            add_generator(std::move(h), lvl);
        }
    }
}

std::size_t StabilizerChain::sift(Perm& g) const {
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        const Level& L = levels_[j];
        std::uint32_t y = g[L.base_point];
        if (L.label[y] == -1) return j;
        while (y != L.base_point) {
            const Perm& inv = strong_inv_[static_cast<std::size_t>(L.label[y])];
            for (auto& x : g) x = inv[x];
            y = g[L.base_point];
        }
    }
    return levels_.size();
}

void StabilizerChain::add_generator(Perm h, std::size_t level) {
    if (level == levels_.size()) {
        std::uint32_t moved = 0;
        while (h[moved] == moved) ++moved;
        levels_.push_back(Level{moved, {}, {}});
    }
    strong_inv_.push_back(inverse(h));
    strong_.push_back(std::move(h));
    depth_.push_back(level);
    for (std::size_t j = 0; j <= level; ++j) rebuild(j);
}

void StabilizerChain::rebuild(std::size_t level) {
    Level& L = levels_[level];
    L.label.assign(degree_, -1);
    L.orbit.assign(1, L.base_point);
    L.label[L.base_point] = -2;
    for (std::size_t i = 0; i < L.orbit.size(); ++i) {
        const std::uint32_t x = L.orbit[i];
        for (std::size_t k = 0; k < strong_.size(); ++k) {
            if (depth_[k] < level) continue;
            const std::uint32_t y = strong_[k][x];
            if (L.label[y] == -1) {
                L.label[y] = static_cast<std::int32_t>(k);
                L.orbit.push_back(y);
            }
        }
    }
}

std::uint64_t StabilizerChain::order() const {
    std::uint64_t ord = 1;
    for (const Level& L : levels_) {
        if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(L.orbit.size()), &ord))
            throw std::overflow_error("group order exceeds 64 bits");
    }
    return ord;
}

std::vector<std::uint32_t> StabilizerChain::base() const {
    std::vector<std::uint32_t> out;
    for (const Level& L : levels_) out.push_back(L.base_point);
    return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const Level& L : levels_) out.push_back(L.orbit.size());
    return out;
}

bool StabilizerChain::contains(const Perm& g) const {
    if (g.size() != degree_) return false;
    Perm h = g;
    return sift(h) == levels_.size() && is_identity(h);
}

std::uint64_t group_order(const std::vector<Perm>& gens, std::uint64_t seed) {
    return StabilizerChain(gens, seed).order();
}

}  // namespace orthoperm
