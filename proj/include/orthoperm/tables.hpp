#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthoperm/geometry.hpp"

namespace orthoperm {

/// Which row of the structure tables a prime falls in, for a given family and n.
enum class EllClass {
    Generic,          // none of the special divisibilities below
    DividesMinusOne,  // odd ell dividing 3^n - 1 (special for plus and odd families)
    DividesPlusOne,   // odd ell dividing 3^n + 1 (special for minus and odd families)
    TwoEven,
    TwoOdd,
};
std::string to_string(EllClass c);
EllClass classify_ell(Family family, int n, std::uint32_t ell);

class UnsupportedConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// How a named irreducible is located in a run.
struct FactorWitness {
    enum Kind { Trivial, GraphPrime, ByDimension } kind = ByDimension;
    Kappa kappa = 1;  // GraphPrime: orbit of U'_c
    int root = 1;     // GraphPrime: 1 for c1, 2 for c2
};

struct NamedFactor {
    std::string name;
    std::size_t dim = 0;
    FactorWitness witness;
};

/// An indecomposable module given by its socle series (bottom layer first) and head.
struct ExpectedModule {
    std::vector<std::vector<std::string>> layers;
    std::vector<std::string> head;
};

struct ExpectedOrbit {
    Kappa kappa = 1;
    std::vector<ExpectedModule> summands;
    /// Structure of U'^perp / U' as a direct sum of modules with simple heads.
    std::optional<std::vector<ExpectedModule>> perp_quotient;
};

/// Named checks beyond the factor, socle, head and summand comparisons.
enum class ExtraCheck {
    NoXUnderY,          // no submodule X - Y in F P^{+1}
    LatticeChain,       // submodule lattice of the augmentation module is a chain
    CrossOrbitZ,        // the Z factors of the two orbits are isomorphic
    GraphPrimeTwice,    // at l = 2, U' occurs at least twice in F P
};

struct TableDescriptor {
    Family family = Family::Plus;
    int n = 0;
    std::uint32_t ell = 2;
    EllClass ell_class = EllClass::Generic;
    std::string citation;
    std::vector<NamedFactor> factors;
    std::vector<ExpectedOrbit> orbits;  // kappa = +1 then -1
    std::vector<ExtraCheck> extra;

    const NamedFactor& factor(const std::string& name) const;
};

/// Expected structure of both nonsingular orbit modules; throws UnsupportedConfig.
TableDescriptor expected_descriptor(Family family, int m, std::uint32_t ell);

/// Composition multiset (name -> multiplicity) of a list of modules.
std::map<std::string, int> expected_factor_counts(const std::vector<ExpectedModule>& mods);
/// Layerwise union of socle series.
std::vector<std::map<std::string, int>> expected_socle_series(const std::vector<ExpectedModule>& mods);
std::map<std::string, int> expected_head(const std::vector<ExpectedModule>& mods);
std::size_t expected_dim(const ExpectedModule& mod, const TableDescriptor& d);

std::string to_string(ExtraCheck c);

}  // namespace orthoperm
