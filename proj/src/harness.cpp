#include "orthoperm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "orthoperm/field.hpp"
#include "orthoperm/meataxe.hpp"
#include "orthoperm/perm_group.hpp"

namespace orthoperm {

namespace {

using ojson = nlohmann::ordered_json;

std::string kappa_key(Kappa k) { return k > 0 ? "+1" : (k < 0 ? "-1" : "0"); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string layers_string(const std::vector<LayerNames>& layers) {
    std::vector<std::string> parts;
    for (const auto& l : layers) parts.push_back("[" + join(l, ",") + "]");
    return join(parts, " ");
}

LayerNames sorted(LayerNames v) {
    std::sort(v.begin(), v.end());
    return v;
}

LayerNames names_of(const Labels& l, const Registry& reg) {
    LayerNames out;
    for (auto [id, mult] : l)
        for (int i = 0; i < mult; ++i) out.push_back(reg.name(id));
    return sorted(out);
}

LayerNames names_of(const std::map<std::string, int>& counts) {
    LayerNames out;
    for (const auto& [n, mult] : counts)
        for (int i = 0; i < mult; ++i) out.push_back(n);
    return sorted(out);
}

std::vector<LayerNames> names_of(const std::vector<SocleLayer>& series, const Registry& reg) {
    std::vector<LayerNames> out;
    for (const auto& l : series) out.push_back(names_of(l.labels, reg));
    return out;
}

using ModuleShape = std::pair<std::vector<LayerNames>, LayerNames>;

ModuleShape shape_of(const ExpectedModule& m) {
    ModuleShape s;
    for (const auto& l : m.layers) s.first.push_back(sorted(l));
    s.second = sorted(m.head);
    return s;
}

std::string shape_string(const ModuleShape& s) { return layers_string(s.first) + " head [" + join(s.second, ",") + "]"; }

/// Exact integer checks depend only on (family, m, kappa), so they are shared across primes.
struct RationalResult {
    bool identity = false;
    DimensionSystem dims;
};

RationalResult rational_checks(const PermutationModule& pm, const Rank3Parameters& p, const Roots& roots) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, RationalResult> cache;
    const auto key = std::make_tuple(static_cast<int>(pm.space.family), pm.space.m, pm.kappa);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    RationalResult r;
    r.identity = liebeck_identity_check(pm, roots, p.s);
    r.dims = dimension_system_check(pm, roots, p.a);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
    return r;
}

class Timer {
public:
    Timer(std::map<std::string, double>& out, bool enabled) : out_(out), enabled_(enabled) {}
    void lap(const std::string& name) {
        const auto now = std::chrono::steady_clock::now();
        if (enabled_) out_[name] += std::chrono::duration<double>(now - last_).count();
        last_ = now;
    }

private:
    std::map<std::string, double>& out_;
    bool enabled_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct Orbit {
    PermutationModule pm;
    Rank3Parameters params;
    Roots roots;
    GraphSubmodulePair graph;
    std::vector<int> factors;
};

const char* kGeometry = "orthogonal geometry over F_3";
const char* kGraph = "graph submodules of a rank-3 permutation module";
const char* kMinimality = "every submodule other than T contains a graph submodule";
const char* kSelfDual = "self-duality of permutation modules";
const char* kQij = "inter-orbit orthogonality maps";
const char* kMeataxe = "composition series invariants";

class Run {
public:
    explicit Run(const Config& cfg)
        : cfg_(cfg),
          table_(expected_descriptor(cfg.family, cfg.m, cfg.ell)),
          space_(standard_space(cfg.family, cfg.m)),
          field_(cfg.ell),
          reg_(cfg.seed),
          timer_(report_.timings, cfg.timings) {
        report_.config = cfg;
        report_.citation = table_.citation;
        report_.ell_class = to_string(table_.ell_class);
    }

    StructureReport run() {
        build();
        build_pool();
        name_factors();
        for (Kappa k : cfg_.kappas) verify_orbit(k);
        if (cfg_.kappas.size() == 2) {
            cross_orbit();
            // At m = 4 no two singular points are orthogonal, so Q_{0,0} vanishes.
            if (cfg_.m >= 6) inter_orbit_maps();
        }
        endomorphism_rings();
        return std::move(report_);
    }

private:
    void check(std::string name, std::string citation, bool pass, std::string detail) {
        report_.checks.push_back({std::move(name), std::move(citation), pass, std::move(detail)});
    }
    static std::string tag(const std::string& name, Kappa k) { return name + "[" + kappa_key(k) + "]"; }

    int id_of(const std::string& name) const {
        auto it = ids_.find(name);
        return it == ids_.end() ? -1 : it->second;
    }

    Labels labels_of(const std::vector<std::string>& names) const {
        Labels l;
        for (const auto& n : names) ++l[id_of(n)];
        return l;
    }

    std::vector<int> pool() const {
        std::vector<int> p(reg_.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
        return p;
    }

    void build() {
        const GeneratorSet gens = certified_generator_pair(space_, cfg_.seed);
        gens_ = gens.gens;
        const std::uint64_t group = orthogonal_group_order(cfg_.family, cfg_.m);
        check("generators_full_group", kGeometry, gens.certified && gens.order == group,
              "order " + std::to_string(gens.order) + " vs |O| = " + std::to_string(group) + " from " +
                  std::to_string(gens_.size()) + " generators");
        if (cfg_.order_check) {
            const auto refl = default_generators(space_);
            const std::uint64_t ord = group_order(vector_action(space_, refl), cfg_.seed);
            check("reflections_full_group", kGeometry, ord == group,
                  std::to_string(refl.size()) + " reflections generate order " + std::to_string(ord));
        }
        std::size_t total = 0;
        bool counts_ok = true;
        std::vector<std::string> parts;
        for (Kappa k : {0, 1, -1}) {
            Orbit o;
            o.pm = build_module(space_, k, field_, gens_);
            const std::uint64_t expect = formula_point_count(cfg_.family, cfg_.m / 2, k);
            counts_ok = counts_ok && o.pm.size() == expect;
            total += o.pm.size();
            parts.push_back("|P^" + kappa_key(k) + "| = " + std::to_string(o.pm.size()));
            if (orbit(o.pm.perms, 0).size() != o.pm.size())
                throw FatalInconsistency("group is not transitive on P^" + kappa_key(k));
            if (k != 0) {
                try {
                    o.params = rank3_certificate(PermAction{o.pm.points, o.pm.perms}, orthogonality(space_, o.pm.points));
                } catch (const ParameterError& e) {
                    throw FatalInconsistency(std::string("rank-3 certificate failed: ") + e.what());
                }
                o.roots = quadratic_roots(o.params, k, field_);
                o.graph = graph_submodule_pair(o.pm, o.roots);
            }
            orbits_.emplace(k, std::move(o));
        }
        counts_ok = counts_ok && total == (static_cast<std::size_t>(power3(cfg_.m)) - 1) / 2;
        check("point_counts", kGeometry, counts_ok, join(parts, ", ") + ", total " + std::to_string(total));
        timer_.lap("geometry");

        for (Kappa k : cfg_.kappas) {
            Orbit& o = orbits_.at(k);
            const Rank3Parameters f = formula_parameters(cfg_.family, cfg_.m / 2, k);
            check(tag("rank3_parameters", k), kGeometry, o.params == f,
                  "(a,b,r,s) = (" + std::to_string(o.params.a) + "," + std::to_string(o.params.b) + "," +
                      std::to_string(o.params.r) + "," + std::to_string(o.params.s) + ")");
            OrbitReport rep;
            rep.kappa = k;
            rep.points = o.pm.size();
            rep.parameters = o.params;
            rep.roots = o.roots;
            rep.dims.u_prime_c1 = o.graph.first.u_prime.dim();
            rep.dims.u_prime_c2 = o.graph.second.u_prime.dim();
            rep.dims.u_c1 = o.graph.first.u.dim();
            rep.dims.u_c2 = o.graph.second.u.dim();
            if (cfg_.rational) {
                const RationalResult rr = rational_checks(o.pm, o.params, o.roots);
                if (!rr.identity) throw FatalInconsistency("(A + c1 I)(A + c2 I) != s J over the integers");
                check(tag("adjacency_identity_integer", k), kGraph, rr.identity,
                      "(A + " + std::to_string(o.roots.c1) + "I)(A + " + std::to_string(o.roots.c2) +
                          "I) = " + std::to_string(o.params.s) + "J");
                check(tag("eigenspace_dimensions_integer", k), kGraph, rr.dims.consistent,
                      "nullities " + std::to_string(rr.dims.d1) + ", " + std::to_string(rr.dims.d2) +
                          "; linear system gives " + std::to_string(rr.dims.solved_d1) + ", " +
                          std::to_string(rr.dims.solved_d2));
                rep.dims.rational_d1 = rr.dims.d1;
                rep.dims.rational_d2 = rr.dims.d2;
            }
            if (!o.roots.equal_roots) {
                const auto& g = o.graph;
                const Subspace s = canonical_submodules(o.pm).s;
                const bool split = intersect(g.first.u_prime, g.second.u_prime).is_zero() &&
                                   subspace_sum(g.first.u_prime, g.second.u_prime) == s;
                check(tag("graph_submodules_split_augmentation", k), kGraph, split,
                      "dims " + std::to_string(rep.dims.u_prime_c1) + " + " + std::to_string(rep.dims.u_prime_c2) +
                          " in S of dim " + std::to_string(s.dim()));
            }
            report_.orbits.push_back(std::move(rep));
        }
        timer_.lap("graph_submodules");
    }

    void build_pool() {
        for (Kappa k : {1, -1, 0}) {
            Orbit& o = orbits_.at(k);
            o.factors = composition_factors(o.pm.module, reg_, cfg_.seed);
        }
        timer_.lap("composition_series");
    }

    /// Ids of the composition factors of a graph submodule U'_c.
    std::vector<int> graph_factors(Kappa k, int root) {
        const Orbit& o = orbits_.at(k);
        const Subspace& u = root == 1 ? o.graph.first.u_prime : o.graph.second.u_prime;
        return composition_factors(Subquotient(o.pm.module, Subspace(field_, o.pm.size()), u).module(), reg_,
                                   cfg_.seed + 17);
    }

    void name_factors() {
        std::vector<std::string> problems;
        auto assign = [&](const NamedFactor& f, int id) {
            if (id < 0) {
                problems.push_back(f.name + " (dim " + std::to_string(f.dim) + ") not found");
                return;
            }
            for (const auto& [n, other] : ids_)
                if (other == id) {
                    problems.push_back(f.name + " is isomorphic to " + n);
                    return;
                }
            ids_[f.name] = id;
            reg_.set_name(id, f.name);
        };
        for (const auto& f : table_.factors) {
            if (f.witness.kind == FactorWitness::Trivial) assign(f, reg_.trivial_id());
            if (f.witness.kind != FactorWitness::GraphPrime) continue;
            int found = -1;
            for (int id : graph_factors(f.witness.kappa, f.witness.root))
                if (reg_.dim_of(id) == f.dim) found = id;
            assign(f, found);
        }
        for (const auto& f : table_.factors) {
            if (f.witness.kind != FactorWitness::ByDimension) continue;
            std::set<int> cands;
            for (Kappa k : {1, -1})
                for (int id : orbits_.at(k).factors) {
                    bool named = false;
                    for (const auto& kv : ids_) named = named || kv.second == id;
                    if (!named && reg_.dim_of(id) == f.dim) cands.insert(id);
                }
            if (cands.size() > 1) problems.push_back(f.name + " has " + std::to_string(cands.size()) + " candidates");
            assign(f, cands.size() == 1 ? *cands.begin() : -1);
        }
        std::vector<std::string> found;
        for (const auto& f : table_.factors)
            if (id_of(f.name) >= 0) found.push_back(f.name + "=" + std::to_string(f.dim));
        check("named_factor_dimensions", table_.citation, problems.empty(),
              problems.empty() ? join(found, ", ") : join(problems, "; "));
        timer_.lap("naming");
    }

    void verify_orbit(Kappa k) {
        Orbit& o = orbits_.at(k);
        OrbitReport& rep = *std::find_if(report_.orbits.begin(), report_.orbits.end(),
                                         [&](const OrbitReport& r) { return r.kappa == k; });
        const ExpectedOrbit& exp = table_.orbits[k == 1 ? 0 : 1];
        const GModule& m = o.pm.module;
        const std::vector<int> pl = pool();

        // Composition factors.
        const Labels fac = factor_multiset(o.factors);
        for (auto [id, mult] : fac) rep.factors.push_back({reg_.name(id), reg_.dim_of(id), id, mult});
        const LayerNames got = names_of(fac, reg_);
        const LayerNames want = names_of(expected_factor_counts(exp.summands));
        check(tag("composition_factors", k), table_.citation, got == want,
              "got {" + join(got, ",") + "}, expected {" + join(want, ",") + "}");
        check(tag("factor_dimensions_sum", k), kMeataxe, labels_dim(fac, reg_) == o.pm.size(),
              std::to_string(labels_dim(fac, reg_)) + " = |P^" + kappa_key(k) + "|");
        const Labels again = factor_multiset(composition_factors(m, reg_, cfg_.seed + 1));
        check(tag("composition_seed_independent", k), kMeataxe, again == fac, "seeds " + std::to_string(cfg_.seed) +
                                                                                  " and " + std::to_string(cfg_.seed + 1));
        timer_.lap("composition_series");

        // Socle series and head.
        const auto series = socle_series(m, reg_, pl);
        rep.socle_series = names_of(series, reg_);
        std::vector<LayerNames> want_series;
        for (const auto& l : expected_socle_series(exp.summands)) want_series.push_back(names_of(l));
        std::size_t layer_sum = 0;
        for (const auto& l : series) layer_sum += labels_dim(l.labels, reg_);
        check(tag("socle_layer_dimensions_sum", k), kMeataxe, layer_sum == m.dim(), std::to_string(layer_sum));
        check(tag("socle", k), table_.citation, !rep.socle_series.empty() && rep.socle_series[0] == want_series[0],
              "[" + join(rep.socle_series.empty() ? LayerNames{} : rep.socle_series[0], ",") + "]");
        check(tag("socle_series", k), table_.citation, rep.socle_series == want_series,
              "got " + layers_string(rep.socle_series) + ", expected " + layers_string(want_series));
        const HeadResult hd = head(m, reg_, pl);
        rep.head = names_of(hd.labels, reg_);
        const LayerNames want_head = names_of(expected_head(exp.summands));
        check(tag("head", k), table_.citation, rep.head == want_head,
              "got [" + join(rep.head, ",") + "], expected [" + join(want_head, ",") + "]");
        check(tag("socle_isomorphic_to_head", k), kSelfDual, series[0].labels == hd.labels,
              "socle [" + join(rep.socle_series[0], ",") + "], head [" + join(rep.head, ",") + "]");
        timer_.lap("socle_series");

        // Summands from the centralizer algebra.
        std::vector<ModuleShape> got_sh, want_sh;
        for (const Summand& s : summand_decomposition(o.pm, o.params)) {
            const GModule sub = Subquotient(m, Subspace(field_, m.dim()), s.image).module();
            SummandEntry e;
            e.dim = sub.dim();
            e.socle_series = names_of(socle_series(sub, reg_, pl), reg_);
            e.head = names_of(head(sub, reg_, pl).labels, reg_);
            got_sh.emplace_back(e.socle_series, e.head);
            rep.summands.push_back(std::move(e));
        }
        for (const auto& s : exp.summands) want_sh.push_back(shape_of(s));
        std::sort(got_sh.begin(), got_sh.end());
        std::sort(want_sh.begin(), want_sh.end());
        std::vector<std::string> gs, ws;
        for (const auto& s : got_sh) gs.push_back(shape_string(s));
        for (const auto& s : want_sh) ws.push_back(shape_string(s));
        check(tag("indecomposable_summands", k), table_.citation, got_sh == want_sh,
              "got " + join(gs, " + ") + "; expected " + join(ws, " + "));
        timer_.lap("summands");

        if (exp.perp_quotient) perp_quotient(k, *exp.perp_quotient);
        for (ExtraCheck x : table_.extra) extra(x, k, series);
        if (field_.ell() == 2) lemma_socle(k, series);
        minimality(k);
        double_dual(k);
        if (cfg_.lattice_enum) lattice(k, series);
    }

    void perp_quotient(Kappa k, const std::vector<ExpectedModule>& want) {
        const Orbit& o = orbits_.at(k);
        const Subspace& u = o.graph.first.u_prime;
        const Subspace up = perp(u);
        std::vector<std::string> ws;
        std::vector<std::vector<Labels>> shapes;
        for (const auto& e : want) {
            ws.push_back(shape_string(shape_of(e)));
            std::vector<Labels> s;
            for (const auto& l : e.layers) s.push_back(labels_of(l));
            shapes.push_back(std::move(s));
        }
        if (!is_subspace(u, up)) {
            check(tag("perp_quotient_structure", k), table_.citation, false, "U' is not contained in its perp");
            return;
        }
        const Subquotient q(o.pm.module, u, up);
        const auto found = find_direct_sum(q.module(), reg_, pool(), shapes, cfg_.seed);
        check(tag("perp_quotient_structure", k), table_.citation, found.has_value(),
              "U'^perp/U' of dim " + std::to_string(q.dim()) + (found ? " is " : " is not ") + join(ws, " + "));
        timer_.lap("perp_quotient");
    }

    void extra(ExtraCheck x, Kappa k, const std::vector<SocleLayer>& series) {
        const Orbit& o = orbits_.at(k);
        const GModule& m = o.pm.module;
        switch (x) {
            case ExtraCheck::GraphPrimeTwice: {
                const std::vector<int> ids = graph_factors(k, 1);
                const bool simple = ids.size() == 1;
                const Labels fac = factor_multiset(o.factors);
                const int mult = simple && fac.count(ids[0]) ? fac.at(ids[0]) : 0;
                check(tag(to_string(x), k), kSelfDual, simple && mult >= 2,
                      simple ? reg_.name(ids[0]) + " occurs " + std::to_string(mult) + " times" : "U' is not simple");
                break;
            }
            case ExtraCheck::NoXUnderY: {
                const std::string bottom = k == 1 ? "X" : "Y", top = k == 1 ? "Y" : "X";
                const int b = id_of(bottom), t = id_of(top);
                if (b < 0 || t < 0) {
                    check(tag(to_string(x), k), table_.citation, false, "factors not named");
                    break;
                }
                const bool once = series[0].labels.count(b) && series[0].labels.at(b) == 1;
                const Subspace x0 = isotypic_socle(reg_.at(b), m);
                const Subquotient q(m, x0, Subspace::full(field_, m.dim()));
                const std::size_t homs = hom_from_irreducible(reg_.at(t), q.module()).size();
                check(tag(to_string(x), k), table_.citation, once && homs == 0,
                      bottom + " occurs once in the socle; dim Hom(" + top + ", FP/" + bottom +
                          ") = " + std::to_string(homs));
                break;
            }
            case ExtraCheck::LatticeChain: {
                const Subspace s = canonical_submodules(o.pm).s;
                const GModule sub = Subquotient(m, Subspace(field_, m.dim()), s).module();
                const auto lat = submodule_lattice(sub, reg_, pool(), cfg_.seed);
                bool chain = true;
                for (std::size_t i = 0; i + 1 < lat.size(); ++i) chain = chain && is_subspace(lat[i], lat[i + 1]);
                const std::size_t layers = socle_series(sub, reg_, pool()).size();
                check(tag(to_string(x), k), table_.citation, chain && lat.size() == layers + 1,
                      std::to_string(lat.size()) + " submodules of S, " + (chain ? "totally ordered" : "not a chain"));
                break;
            }
            case ExtraCheck::CrossOrbitZ: break;  // needs both orbits, see cross_orbit()
        }
        timer_.lap("extra_checks");
    }

    /// At ell = 2: U = T + U' is the socle, and U' is simple and self-dual.
    void lemma_socle(Kappa k, const std::vector<SocleLayer>& series) {
        const Orbit& o = orbits_.at(k);
        check(tag("graph_submodule_is_socle", k), kSelfDual, series[0].upper == o.graph.first.u,
              "dim U = " + std::to_string(o.graph.first.u.dim()) + ", dim soc = " + std::to_string(series[0].upper.dim()));
        const std::vector<int> ids = graph_factors(k, 1);
        const bool ok = ids.size() == 1 && reg_.dual_of(ids[0]) == ids[0];
        check(tag("graph_submodule_simple_self_dual", k), kSelfDual, ok,
              ids.size() == 1 ? reg_.name(ids[0]) + (ok ? " is self-dual" : " is not self-dual")
                              : "U' has " + std::to_string(ids.size()) + " composition factors");
    }

    void minimality(Kappa k) {
        const Orbit& o = orbits_.at(k);
        const std::size_t n = o.pm.size();
        const Subspace t = canonical_submodules(o.pm).t;
        std::mt19937_64 rng(cfg_.seed * 7919 + static_cast<std::uint64_t>(k + 2));
        int bad = 0, to_t = 0;
        for (int i = 0; i < cfg_.minimality_samples; ++i) {
            Matrix v(field_, 1, n);
            if (i % 2 == 0) {
                for (std::size_t c = 0; c < n; ++c) v.set(0, c, static_cast<std::uint32_t>(rng() % field_.ell()));
            } else {
                const int weight = 1 + static_cast<int>(rng() % 4);
                for (int w = 0; w < weight; ++w)
                    v.set(0, rng() % n, 1 + static_cast<std::uint32_t>(rng() % (field_.ell() - 1)));
            }
            if (i == 0) v = t.basis();
            if (Subspace::span(v).is_zero()) v.set(0, 0, 1);
            const Subspace s = spin(o.pm.module, v);
            if (s == t) {
                ++to_t;
                continue;
            }
            if (!is_subspace(o.graph.first.u_prime, s) && !is_subspace(o.graph.second.u_prime, s)) ++bad;
        }
        check(tag("minimality_random_spins", k), kMinimality, bad == 0,
              std::to_string(cfg_.minimality_samples) + " vectors, " + std::to_string(to_t) + " spin to T, " +
                  std::to_string(bad) + " exceptions");
        timer_.lap("minimality");
    }

    void double_dual(Kappa k) {
        const Orbit& o = orbits_.at(k);
        const GModule u = Subquotient(o.pm.module, Subspace(field_, o.pm.size()), o.graph.second.u_prime).module();
        const Labels a = factor_multiset(composition_factors(u, reg_, cfg_.seed + 3));
        const Labels b = factor_multiset(composition_factors(u.dual().dual(), reg_, cfg_.seed + 4));
        check(tag("double_dual_factors", k), kMeataxe, a == b, "U'_c2: " + labels_to_string(a, reg_));
        timer_.lap("double_dual");
    }

    void lattice(Kappa k, const std::vector<SocleLayer>& series) {
        const Orbit& o = orbits_.at(k);
        if (field_.ell() != 2 || o.pm.size() > 130) return;
        const auto lat = submodule_lattice(o.pm.module, reg_, pool(), cfg_.seed);
        std::size_t minimal = 0;
        for (const auto& s : lat)
            if (!s.is_zero()) {
                bool min = true;
                for (const auto& t : lat)
                    if (!t.is_zero() && t.dim() < s.dim() && is_subspace(t, s)) min = false;
                minimal += min;
            }
        std::size_t predicted = 0;
        for (auto [id, mult] : series[0].labels) predicted += (std::size_t{1} << mult) - 1;
        bool terms = true;
        for (const auto& l : series) terms = terms && std::find(lat.begin(), lat.end(), l.upper) != lat.end();
        check(tag("submodule_lattice", k), table_.citation, minimal == predicted && terms,
              std::to_string(lat.size()) + " submodules, " + std::to_string(minimal) + " simple (socle predicts " +
                  std::to_string(predicted) + ")");
        timer_.lap("lattice");
    }

    void cross_orbit() {
        if (std::find(table_.extra.begin(), table_.extra.end(), ExtraCheck::CrossOrbitZ) == table_.extra.end()) return;
        const NamedFactor& z = table_.factor("Z");
        int other = -1;
        for (int id : graph_factors(-1, 2))
            if (reg_.dim_of(id) == z.dim) other = id;
        const int zid = id_of("Z");
        check(to_string(ExtraCheck::CrossOrbitZ), table_.citation, zid >= 0 && other == zid,
              "factor of U'^{-1}_c2 of dim " + std::to_string(z.dim) + (other == zid ? " is " : " is not ") + "Z");
        timer_.lap("extra_checks");
    }

    void inter_orbit_maps() {
        for (Kappa i : {0, 1, -1})
            for (Kappa j : {0, 1, -1}) {
                const Orbit& a = orbits_.at(i);
                const Orbit& b = orbits_.at(j);
                const Matrix q = qij_matrix(a.pm, b.pm);
                const bool inter = intertwines(a.pm, b.pm, q);
                const Subspace im = Subspace::span(q);
                const Subspace t = canonical_submodules(b.pm).t;
                const bool proper = !im.is_zero() && !(im == t);
                std::string shared = "none";
                bool share = false;
                if (inter && proper) {
                    const Labels fi = factor_multiset(a.factors), fj = factor_multiset(b.factors);
                    Subspace lower(field_, b.pm.size());
                    while (!share && !(lower == im)) {
                        const Subquotient sq(b.pm.module, lower, im);
                        const SocleLayer soc = socle(sq.module(), reg_, pool());
                        for (auto [id, mult] : soc.labels)
                            if (id != reg_.trivial_id() && fi.count(id) && fj.count(id)) {
                                share = true;
                                shared = reg_.name(id);
                            }
                        lower = sq.preimage(soc.upper);
                    }
                }
                check("inter_orbit_map[" + kappa_key(i) + "," + kappa_key(j) + "]", kQij, inter && proper && share,
                      std::string(inter ? "intertwines" : "does not intertwine") + ", rank " + std::to_string(im.dim()) +
                          ", shared nontrivial factor " + shared);
            }
        timer_.lap("inter_orbit_maps");
    }

    void endomorphism_rings() {
        std::vector<std::string> bad;
        for (std::size_t id = 0; id < reg_.size(); ++id) {
            const Irreducible& s = reg_.at(static_cast<int>(id));
            if (hom_from_irreducible(s, s.module()).size() != 1) bad.push_back(reg_.name(static_cast<int>(id)));
        }
        check("endomorphism_rings_dim_1", kMeataxe, bad.empty(),
              std::to_string(reg_.size()) + " irreducibles" + (bad.empty() ? "" : ", failing: " + join(bad, ",")));
        timer_.lap("endomorphisms");
    }

    const Config& cfg_;
    TableDescriptor table_;
    QuadraticSpace space_;
    Field field_;
    Registry reg_;
    StructureReport report_;
    Timer timer_;
    std::vector<F3Matrix> gens_;
    std::map<Kappa, Orbit> orbits_;
    std::map<std::string, int> ids_;
};

ojson params_object(const Rank3Parameters& p) { return ojson{{"a", p.a}, {"b", p.b}, {"r", p.r}, {"s", p.s}}; }

ojson roots_object(const Roots& r) {
    return ojson{{"c1", r.c1}, {"c2", r.c2}, {"c1_mod", r.c1_mod}, {"c2_mod", r.c2_mod}, {"equal_mod_l", r.equal_roots}};
}

}  // namespace

void validate(const Config& c) {
    expected_descriptor(c.family, c.m, c.ell);
    if (c.kappas.empty()) throw std::invalid_argument("no orbit selected");
    for (Kappa k : c.kappas)
        if (k != 1 && k != -1) throw std::invalid_argument("kappa must be +1 or -1");
}

std::string config_label(const Config& c) {
    std::string k = c.kappas.size() == 2 ? "both" : kappa_key(c.kappas[0]);
    return to_string(c.family) + "-" + std::to_string(c.m) + " l=" + std::to_string(c.ell) + " kappa=" + k;
}

bool StructureReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

StructureReport run_verification(const Config& c) {
    validate(c);
    return Run(c).run();
}

std::string to_json(const StructureReport& r, int indent) {
    const Config& c = r.config;
    ojson j;
    j["config"] = ojson{{"family", to_string(c.family)},
                        {"m", c.m},
                        {"ell", c.ell},
                        {"kappa", c.kappas.size() == 2 ? "both" : kappa_key(c.kappas[0])},
                        {"seed", c.seed},
                        {"order_check", c.order_check},
                        {"lattice_enum", c.lattice_enum},
                        {"rational", c.rational}};
    j["table"] = ojson{{"citation", r.citation}, {"ell_class", r.ell_class}};
    ojson params = ojson::object(), roots = ojson::object(), dims = ojson::object(), factors = ojson::object(),
          series = ojson::object(), head = ojson::object(), summands = ojson::object();
    for (const OrbitReport& o : r.orbits) {
        const std::string k = kappa_key(o.kappa);
        params[k] = params_object(o.parameters);
        params[k]["points"] = o.points;
        roots[k] = roots_object(o.roots);
        ojson d{{"u_prime_c1", o.dims.u_prime_c1}, {"u_prime_c2", o.dims.u_prime_c2}, {"u_c1", o.dims.u_c1},
                {"u_c2", o.dims.u_c2}};
        if (o.dims.rational_d1) {
            d["rational_d1"] = *o.dims.rational_d1;
            d["rational_d2"] = *o.dims.rational_d2;
        }
        dims[k] = d;
        factors[k] = ojson::array();
        for (const auto& f : o.factors)
            factors[k].push_back(ojson{{"name", f.name}, {"dim", f.dim}, {"iso_id", f.iso_id}, {"multiplicity", f.multiplicity}});
        series[k] = o.socle_series;
        head[k] = o.head;
        summands[k] = ojson::array();
        for (const auto& s : o.summands)
            summands[k].push_back(ojson{{"dim", s.dim}, {"socle_series", s.socle_series}, {"head", s.head}});
    }
    j["parameters"] = params;
    j["roots"] = roots;
    j["dims"] = dims;
    j["factors"] = factors;
    j["socle_series"] = series;
    j["head"] = head;
    j["summands"] = summands;
    j["checks"] = ojson::array();
    for (const auto& ch : r.checks)
        j["checks"].push_back(ojson{{"name", ch.name}, {"citation", ch.citation}, {"pass", ch.pass}, {"detail", ch.detail}});
    j["passed"] = r.passed();
    j["timings"] = ojson::object();
    for (const auto& [k, v] : r.timings) j["timings"][k] = v;
    return j.dump(indent);
}

std::string to_text(const StructureReport& r) {
    std::ostringstream out;
    out << config_label(r.config) << " (" << r.citation << ")\n";
    for (const OrbitReport& o : r.orbits) {
        out << "  P^" << kappa_key(o.kappa) << ": " << o.points << " points, (a,b,r,s) = (" << o.parameters.a << ","
            << o.parameters.b << "," << o.parameters.r << "," << o.parameters.s << "), roots " << o.roots.c1 << ", "
            << o.roots.c2 << "\n";
        std::vector<std::string> f;
        for (const auto& e : o.factors)
            f.push_back(e.name + "(" + std::to_string(e.dim) + ")" + (e.multiplicity > 1 ? "x" + std::to_string(e.multiplicity) : ""));
        out << "    factors: " << join(f, " ") << "\n";
        out << "    socle series: " << layers_string(o.socle_series) << "\n";
        out << "    head: [" << join(o.head, ",") << "]\n";
        std::vector<std::string> s;
        for (const auto& e : o.summands) s.push_back(std::to_string(e.dim) + " " + layers_string(e.socle_series));
        out << "    summands: " << join(s, " + ") << "\n";
    }
    for (const auto& c : r.checks) out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    for (const auto& [k, v] : r.timings) out << "  time " << k << " " << v << " s\n";
    out << (r.passed() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

std::string params_json(Family family, int m, std::uint64_t seed, bool order_check) {
    const QuadraticSpace sp = standard_space(family, m);
    const GeneratorSet gens = certified_generator_pair(sp, seed);
    ojson j;
    j["family"] = to_string(family);
    j["m"] = m;
    j["group_order"] = orthogonal_group_order(family, m);
    j["generators"] = ojson{{"count", gens.gens.size()}, {"certified", gens.certified}, {"order", gens.order}};
    if (order_check) j["reflections_order"] = group_order(vector_action(sp, default_generators(sp)), seed);
    ojson orbits = ojson::object();
    for (Kappa k : {0, 1, -1}) {
        const auto points = enumerate_points(sp, k);
        ojson o{{"points", points.size()}, {"formula", formula_point_count(family, m / 2, k)}};
        if (k != 0) {
            const PermAction act = action_permutations(sp, gens.gens, points);
            const Rank3Parameters p = rank3_certificate(act, orthogonality(sp, points));
            o["certificate"] = params_object(p);
            o["formula_parameters"] = params_object(formula_parameters(family, m / 2, k));
            o["roots"] = roots_object(quadratic_roots(p, k, Field(5)));
            o["roots"].erase("c1_mod");
            o["roots"].erase("c2_mod");
            o["roots"].erase("equal_mod_l");
        }
        orbits[kappa_key(k)] = o;
    }
    j["orbits"] = orbits;
    return j.dump(2);
}

std::string dims_json(Family family, int m, std::uint32_t ell, std::uint64_t seed) {
    const QuadraticSpace sp = standard_space(family, m);
    const GeneratorSet gens = certified_generator_pair(sp, seed);
    const Field f(ell);
    ojson j{{"family", to_string(family)}, {"m", m}, {"ell", ell}};
    for (Kappa k : {1, -1}) {
        const PermutationModule pm = build_module(sp, k, f, gens.gens);
        const Rank3Parameters p = formula_parameters(family, m / 2, k);
        const Roots r = quadratic_roots(p, k, f);
        const GraphSubmodulePair g = graph_submodule_pair(pm, r);
        const RationalResult rr = rational_checks(pm, p, r);
        j[kappa_key(k)] = ojson{{"points", pm.size()},
                                {"roots", roots_object(r)},
                                {"rational", {{"d1", rr.dims.d1}, {"d2", rr.dims.d2}, {"system_agrees", rr.dims.consistent}}},
                                {"mod_l", {{"u_prime_c1", g.first.u_prime.dim()}, {"u_prime_c2", g.second.u_prime.dim()},
                                           {"u_c1", g.first.u.dim()}, {"u_c2", g.second.u.dim()}}}};
    }
    return j.dump(2);
}

std::vector<Config> default_suite(std::uint64_t seed) {
    std::vector<Config> out;
    for (auto [fam, m] : {std::pair{Family::Plus, 6}, std::pair{Family::Minus, 6}, std::pair{Family::Odd, 7}})
        for (std::uint32_t ell : {2u, 5u, 7u, 13u}) {
            Config c;
            c.family = fam;
            c.m = m;
            c.ell = ell;
            c.seed = seed;
            out.push_back(c);
        }
    Config c;
    c.family = Family::Minus;
    c.m = 4;
    c.ell = 2;
    c.seed = seed;
    out.push_back(c);
    return out;
}

std::vector<StructureReport> run_suite(const std::vector<Config>& configs, unsigned jobs) {
    jobs = std::max(1u, jobs);
    std::vector<StructureReport> out(configs.size());
    std::vector<std::exception_ptr> errors(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                out[i] = run_verification(configs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, configs.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace orthoperm
