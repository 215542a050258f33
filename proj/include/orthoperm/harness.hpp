#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthoperm/geometry.hpp"
#include "orthoperm/permmod.hpp"
#include "orthoperm/tables.hpp"

namespace orthoperm {

struct Config {
    Family family = Family::Plus;
    int m = 6;
    std::uint32_t ell = 2;
    std::vector<Kappa> kappas{1, -1};
    std::uint64_t seed = 1;
    bool order_check = false;   // Schreier-Sims order of the full reflection set
    bool lattice_enum = false;  // exhaustive submodule lattices (GF(2), dim <= 130)
    bool rational = true;       // exact integer identity and eigenspace ranks
    bool timings = false;
    int minimality_samples = 100;
};

/// Throws UnsupportedConfig for primes or (family, m) outside the tables.
void validate(const Config& c);
std::string config_label(const Config& c);

/// Aborts a run when the geometry or the adjacency algebra is inconsistent.
class FatalInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    std::string citation;
    bool pass = false;
    std::string detail;
};

using LayerNames = std::vector<std::string>;  // sorted, with multiplicity

struct FactorEntry {
    std::string name;
    std::size_t dim = 0;
    int iso_id = -1;
    int multiplicity = 0;
};

struct SummandEntry {
    std::size_t dim = 0;
    std::vector<LayerNames> socle_series;
    LayerNames head;
};

struct GraphDims {
    std::size_t u_prime_c1 = 0, u_prime_c2 = 0, u_c1 = 0, u_c2 = 0;
    std::optional<std::int64_t> rational_d1, rational_d2;
};

struct OrbitReport {
    Kappa kappa = 1;
    std::size_t points = 0;
    Rank3Parameters parameters;
    Roots roots;
    GraphDims dims;
    std::vector<FactorEntry> factors;
    std::vector<LayerNames> socle_series;
    LayerNames head;
    std::vector<SummandEntry> summands;
};

struct StructureReport {
    Config config;
    std::string citation;
    std::string ell_class;
    std::vector<OrbitReport> orbits;
    std::vector<Check> checks;
    std::map<std::string, double> timings;

    bool passed() const;
};

StructureReport run_verification(const Config& c);

/// Stable-key-order JSON; `timings` is empty unless the config asked for it.
std::string to_json(const StructureReport& r, int indent = 2);
std::string to_text(const StructureReport& r);

/// Point counts, rank-3 parameters and roots for both nonsingular orbits.
std::string params_json(Family family, int m, std::uint64_t seed, bool order_check);
/// Graph submodule dimensions, over the integers and mod ell.
std::string dims_json(Family family, int m, std::uint32_t ell, std::uint64_t seed);

/// The default matrix: ell in {2, 5, 7, 13} at PLUS-6, MINUS-6, ODD-7, and MINUS-4 at ell = 2.
std::vector<Config> default_suite(std::uint64_t seed = 1);
/// Runs configs on up to `jobs` threads; results keep the input order.
std::vector<StructureReport> run_suite(const std::vector<Config>& configs, unsigned jobs);

}  // namespace orthoperm
