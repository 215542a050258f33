#include "orthoperm/tables.hpp"

#include <algorithm>

#include "orthoperm/field.hpp"

namespace orthoperm {

namespace {

std::int64_t pow3(int k) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) v *= 3;
    return v;
}

int delta(bool b) { return b ? 1 : 0; }

using Layers = std::vector<std::vector<std::string>>;

ExpectedModule mod(Layers layers, std::vector<std::string> head = {}) {
    ExpectedModule m{std::move(layers), std::move(head)};
    if (m.head.empty() && !m.layers.empty()) m.head = m.layers.back();
    return m;
}

ExpectedModule simple(const std::string& name) { return mod({{name}}); }

/// Removes factors of dimension zero and the layers they leave empty.
void prune(ExpectedModule& m, const TableDescriptor& d) {
    auto dead = [&](const std::string& n) { return d.factor(n).dim == 0; };
    for (auto& layer : m.layers) layer.erase(std::remove_if(layer.begin(), layer.end(), dead), layer.end());
    m.layers.erase(std::remove_if(m.layers.begin(), m.layers.end(), [](const auto& l) { return l.empty(); }),
                   m.layers.end());
    m.head.erase(std::remove_if(m.head.begin(), m.head.end(), dead), m.head.end());
}

std::string family_word(Family f) {
    switch (f) {
        case Family::Plus: return "plus";
        case Family::Minus: return "minus";
        case Family::Odd: return "odd";
    }
    return "?";
}

std::string class_phrase(EllClass c) {
    switch (c) {
        case EllClass::Generic: return "generic l";
        case EllClass::DividesMinusOne: return "l | 3^n - 1";
        case EllClass::DividesPlusOne: return "l | 3^n + 1";
        case EllClass::TwoEven: return "l = 2, n even";
        case EllClass::TwoOdd: return "l = 2, n odd";
    }
    return "?";
}

NamedFactor trivial() { return {"F", 1, {FactorWitness::Trivial}}; }
NamedFactor graph(const std::string& name, std::int64_t dim, Kappa kappa, int root) {
    return {name, static_cast<std::size_t>(dim), {FactorWitness::GraphPrime, kappa, root}};
}
NamedFactor by_dim(const std::string& name, std::int64_t dim) {
    return {name, static_cast<std::size_t>(dim), {FactorWitness::ByDimension}};
}

void plus_rows(TableDescriptor& d) {
    const int n = d.n;
    const std::int64_t t = pow3(n), t1 = pow3(n - 1);
    const bool minus_div = (t - 1) % d.ell == 0;
    const std::int64_t xy = (t - 1) * (t1 - 1) / 8;
    d.factors = {trivial(), graph("X", xy, 1, 1), graph("Y", xy, -1, 1)};
    ExpectedOrbit p{1, {}, std::nullopt}, q{-1, {}, std::nullopt};
    switch (d.ell_class) {
        case EllClass::Generic:
            d.factors.push_back(graph("Z", (t * t - 9) / 8 - delta(minus_div), 1, 2));
            p.summands = {simple("F"), simple("X"), simple("Z")};
            q.summands = {simple("F"), simple("Y"), simple("Z")};
            d.extra = {ExtraCheck::CrossOrbitZ};
            break;
        case EllClass::DividesMinusOne:
            d.factors.push_back(graph("Z", (t * t - 9) / 8 - delta(minus_div), 1, 2));
            p.summands = {simple("X"), mod({{"F"}, {"Z"}, {"F"}})};
            q.summands = {simple("Y"), mod({{"F"}, {"Z"}, {"F"}})};
            d.extra = {ExtraCheck::CrossOrbitZ};
            break;
        case EllClass::TwoEven:
            d.factors.push_back(by_dim("W", (t - 1) * (t1 + 3) / 8 - 1 - delta(n % 2 == 0)));
            p.summands = {mod({{"F", "X"}, {"W", "Y"}, {"F", "X"}})};
            q.summands = {mod({{"F", "Y"}, {"W", "X"}, {"F", "Y"}})};
            d.extra = {ExtraCheck::GraphPrimeTwice};
            break;
        case EllClass::TwoOdd:
            d.factors.push_back(by_dim("W", (t - 1) * (t1 + 3) / 8 - 1 - delta(n % 2 == 0)));
            p.summands = {simple("F"), mod({{"X"}, {"Y", "W"}, {"X"}})};
            q.summands = {simple("F"), mod({{"Y"}, {"X", "W"}, {"Y"}})};
            p.perp_quotient = std::vector<ExpectedModule>{simple("F"), simple("Y"), simple("W")};
            q.perp_quotient = std::vector<ExpectedModule>{simple("F"), simple("X"), simple("W")};
            d.extra = {ExtraCheck::GraphPrimeTwice};
            break;
        case EllClass::DividesPlusOne: break;
    }
    d.orbits = {p, q};
}

void minus_rows(TableDescriptor& d) {
    const int n = d.n;
    const std::int64_t t = pow3(n), t1 = pow3(n - 1);
    const bool plus_div = (t + 1) % d.ell == 0;
    const std::int64_t xy = (t + 1) * (t1 + 1) / 8 - delta(d.ell == 2);
    d.factors = {trivial(), graph("X", xy, 1, 1), graph("Y", xy, -1, 1)};
    ExpectedOrbit p{1, {}, std::nullopt}, q{-1, {}, std::nullopt};
    const std::int64_t w = (t + 1) * (t1 - 3) / 8 - 1 + delta(n % 2 == 0);
    switch (d.ell_class) {
        case EllClass::Generic:
            d.factors.push_back(graph("Z", (t * t - 9) / 8 - delta(plus_div), 1, 2));
            p.summands = {simple("F"), simple("X"), simple("Z")};
            q.summands = {simple("F"), simple("Y"), simple("Z")};
            d.extra = {ExtraCheck::CrossOrbitZ};
            break;
        case EllClass::DividesPlusOne:
            d.factors.push_back(graph("Z", (t * t - 9) / 8 - delta(plus_div), 1, 2));
            p.summands = {simple("X"), mod({{"F"}, {"Z"}, {"F"}})};
            q.summands = {simple("Y"), mod({{"F"}, {"Z"}, {"F"}})};
            d.extra = {ExtraCheck::CrossOrbitZ};
            break;
        case EllClass::TwoEven:
            d.factors.push_back(by_dim("W", w));
            p.summands = {simple("F"), mod({{"X"}, {"W", "F"}, {"Y"}, {"F"}, {"X"}})};
            q.summands = {simple("F"), mod({{"Y"}, {"W", "F"}, {"X"}, {"F"}, {"Y"}})};
            d.extra = {ExtraCheck::GraphPrimeTwice};
            if (n == 2) d.extra.push_back(ExtraCheck::LatticeChain);
            break;
        case EllClass::TwoOdd:
            d.factors.push_back(by_dim("W", w));
            p.summands = {mod({{"F", "X"}, {"Y", "F"}, {"F", "W"}, {"F"}, {"X"}}, {"F", "X"})};
            q.summands = {mod({{"F", "Y"}, {"X", "F"}, {"F", "W"}, {"F"}, {"Y"}}, {"F", "Y"})};
            p.perp_quotient = std::vector<ExpectedModule>{mod({{"F"}, {"Y"}, {"F"}}), mod({{"F"}, {"W"}, {"F"}})};
            q.perp_quotient = std::vector<ExpectedModule>{mod({{"F"}, {"X"}, {"F"}}), mod({{"F"}, {"W"}, {"F"}})};
            d.extra = {ExtraCheck::GraphPrimeTwice, ExtraCheck::NoXUnderY};
            break;
        case EllClass::DividesMinusOne: break;
    }
    d.orbits = {p, q};
}

void odd_rows(TableDescriptor& d) {
    const int n = d.n;
    const std::int64_t t = pow3(n);
    const bool minus_div = (t - 1) % d.ell == 0, plus_div = (t + 1) % d.ell == 0;
    ExpectedOrbit p{1, {}, std::nullopt}, q{-1, {}, std::nullopt};
    if (d.ell == 2) {
        if (n % 2 == 0) throw UnsupportedConfig("odd family with n even at l = 2 is not supported");
        d.factors = {trivial(), graph("X1", (t - 1) * (t - 3) / 8, 1, 1), graph("Y1", (t + 1) * (t + 3) / 8 - 1, -1, 1),
                     by_dim("Z1", (t * t - 9) / 8 - delta(n % 2 == 0))};
        p.summands = {simple("F"), mod({{"X1"}, {"Z1", "Y1"}, {"X1"}})};
        q.summands = {mod({{"F", "Y1"}, {"F", "Z1", "X1"}, {"Y1"}}, {"F", "Y1"})};
        p.perp_quotient = std::vector<ExpectedModule>{simple("F"), simple("Y1"), simple("Z1")};
        q.perp_quotient = std::vector<ExpectedModule>{simple("F"), simple("F"), simple("Z1"), simple("X1")};
        d.extra = {ExtraCheck::GraphPrimeTwice};
        d.orbits = {p, q};
        return;
    }
    d.factors = {trivial(), graph("X", (t + 1) * (t - 3) / 4 - delta(minus_div), 1, 1),
                 graph("Y", (t - 1) * (t + 3) / 4 - delta(plus_div), -1, 1), graph("Z", (t * t - 1) / 4, 1, 2)};
    p.summands = {simple("F"), simple("X"), simple("Z")};
    q.summands = {simple("F"), simple("Y"), simple("Z")};
    if (d.ell_class == EllClass::DividesMinusOne) p.summands = {mod({{"F"}, {"X"}, {"F"}}), simple("Z")};
    if (d.ell_class == EllClass::DividesPlusOne) q.summands = {mod({{"F"}, {"Y"}, {"F"}}), simple("Z")};
    d.extra = {ExtraCheck::CrossOrbitZ};
    d.orbits = {p, q};
}

}  // namespace

std::string to_string(EllClass c) { return class_phrase(c); }

std::string to_string(ExtraCheck c) {
    switch (c) {
        case ExtraCheck::NoXUnderY: return "no_X_under_Y_submodule";
        case ExtraCheck::LatticeChain: return "augmentation_lattice_is_chain";
        case ExtraCheck::CrossOrbitZ: return "Z_isomorphic_across_orbits";
        case ExtraCheck::GraphPrimeTwice: return "graph_submodule_factor_twice";
    }
    return "?";
}

EllClass classify_ell(Family family, int n, std::uint32_t ell) {
    if (ell == 2) return n % 2 == 0 ? EllClass::TwoEven : EllClass::TwoOdd;
    const std::int64_t t = pow3(n);
    const bool minus_div = (t - 1) % ell == 0, plus_div = (t + 1) % ell == 0;
    switch (family) {
        case Family::Plus: return minus_div ? EllClass::DividesMinusOne : EllClass::Generic;
        case Family::Minus: return plus_div ? EllClass::DividesPlusOne : EllClass::Generic;
        case Family::Odd:
            if (minus_div) return EllClass::DividesMinusOne;
            if (plus_div) return EllClass::DividesPlusOne;
            return EllClass::Generic;
    }
    return EllClass::Generic;
}

const NamedFactor& TableDescriptor::factor(const std::string& name) const {
    for (const auto& f : factors)
        if (f.name == name) return f;
    throw std::out_of_range("no factor named " + name);
}

TableDescriptor expected_descriptor(Family family, int m, std::uint32_t ell) {
    if (ell == 3 || !is_prime(ell)) throw UnsupportedConfig("l must be a prime other than 3");
    const bool ok = (family == Family::Minus && m == 4 && ell == 2) ||
                    ((family == Family::Plus || family == Family::Minus) && (m == 6 || m == 8)) ||
                    (family == Family::Odd && m == 7);
    if (!ok) throw UnsupportedConfig("unsupported configuration " + to_string(family) + "-" + std::to_string(m));
    TableDescriptor d;
    d.family = family;
    d.n = m / 2;
    d.ell = ell;
    d.ell_class = classify_ell(family, d.n, ell);
    d.citation = family_word(family) + " family, " + class_phrase(d.ell_class);
    if (family == Family::Minus && m == 4) d.citation += " (four-dimensional space)";
    switch (family) {
        case Family::Plus: plus_rows(d); break;
        case Family::Minus: minus_rows(d); break;
        case Family::Odd: odd_rows(d); break;
    }
    for (auto& o : d.orbits) {
        for (auto& s : o.summands) prune(s, d);
        if (o.perp_quotient)
            for (auto& s : *o.perp_quotient) prune(s, d);
    }
    d.factors.erase(std::remove_if(d.factors.begin(), d.factors.end(), [](const NamedFactor& f) { return f.dim == 0; }),
                    d.factors.end());
    return d;
}

std::map<std::string, int> expected_factor_counts(const std::vector<ExpectedModule>& mods) {
    std::map<std::string, int> out;
    for (const auto& m : mods)
        for (const auto& layer : m.layers)
            for (const auto& n : layer) ++out[n];
    return out;
}

std::vector<std::map<std::string, int>> expected_socle_series(const std::vector<ExpectedModule>& mods) {
    std::vector<std::map<std::string, int>> out;
    for (const auto& m : mods) {
        if (out.size() < m.layers.size()) out.resize(m.layers.size());
        for (std::size_t i = 0; i < m.layers.size(); ++i)
            for (const auto& n : m.layers[i]) ++out[i][n];
    }
    return out;
}

std::map<std::string, int> expected_head(const std::vector<ExpectedModule>& mods) {
    std::map<std::string, int> out;
    for (const auto& m : mods)
        for (const auto& n : m.head) ++out[n];
    return out;
}

std::size_t expected_dim(const ExpectedModule& mod, const TableDescriptor& d) {
    std::size_t s = 0;
    for (const auto& layer : mod.layers)
        for (const auto& n : layer) s += d.factor(n).dim;
    return s;
}

}  // namespace orthoperm
