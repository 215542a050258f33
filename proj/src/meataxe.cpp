#include "orthoperm/meataxe.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace orthoperm {

namespace {

std::uint32_t neg(Field f, std::uint32_t x) { return f.neg(x); }

std::size_t nullity(const Matrix& m) { return m.rows() - rank(m); }

std::vector<int> distinct(const std::vector<int>& ids) {
    std::vector<int> out = ids;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_one_dim_trivial(const GModule& m) {
    if (m.dim() != 1) return false;
    for (const auto& g : m.gens())
        if (g.at(0, 0) != 1) return false;
    return true;
}

/// Vectors u of m with u g_k = c_k u for the scalars of a 1-dimensional module.
Subspace eigen_fixed(const GModule& one, const GModule& m) {
    Matrix stacked;
    for (std::size_t k = 0; k < m.num_gens(); ++k) {
        Matrix d = add_scalar(m.gen(k), m.field().neg(one.gen(k).at(0, 0)));
        stacked = k == 0 ? d : stacked.hconcat(d);
    }
    return kernel(stacked);
}

}  // namespace

IrreducibilityResult meataxe_irreducible(const GModule& m, std::uint64_t seed, int budget) {
    if (m.dim() == 0) throw DimensionError("meataxe: zero module");
    IrreducibilityResult res;
    const Field f = m.field();
    if (m.dim() == 1) {
        res.verdict = Verdict::Irreducible;
        res.cert.vector = Matrix::vector(f, {1});
        return res;
    }
    const GModule tr = m.transposed();
    RandomWordSequence seq(m, seed);
    for (std::size_t g = 0; g < m.num_gens(); ++g) seq.next();
    for (int attempt = 1; attempt <= budget; ++attempt) {
        res.attempts = attempt;
        const Matrix& theta = seq.next();
        for (std::uint32_t lambda = 0; lambda < f.ell(); ++lambda) {
            const Matrix n = add_scalar(theta, neg(f, lambda));
            const std::size_t null = nullity(n);
            if (null == 0) continue;
            const Subspace k = kernel(n);
            const Matrix v = k.basis().row(0);
            const Subspace s = spin(m, v);
            if (!s.is_full()) {
                res.verdict = Verdict::Reducible;
                res.witness = s;
                return res;
            }
            if (null != 1) continue;
            const Matrix w = right_kernel(n).basis().row(0);
            const Subspace sw = spin(tr, w);
            if (!sw.is_full()) {
                res.verdict = Verdict::Reducible;
                res.witness = perp(sw);
                return res;
            }
            res.verdict = Verdict::Irreducible;
            res.cert = NortonCertificate{seq.word(), lambda, v};
            return res;
        }
    }
    res.verdict = Verdict::Inconclusive;
    return res;
}

Irreducible::Irreducible(GModule module, NortonCertificate cert) : module_(std::move(module)), cert_(std::move(cert)) {
    record_ = spin_record(module_, cert_.vector);
    if (record_.basis.rows() != module_.dim()) throw std::invalid_argument("certificate vector does not spin to the module");
    const Matrix& b = record_.basis;
    const Matrix binv = inverse(b);
    for (const auto& g : module_.gens()) std_gens_.push_back(b * g * binv);
}

std::optional<Matrix> Irreducible::standard_basis_in(const GModule& t) const {
    if (t.dim() != dim() || t.num_gens() != module_.num_gens() || !(t.field() == module_.field())) return std::nullopt;
    Matrix v2;
    if (cert_.word.empty()) {
        v2 = Matrix::vector(t.field(), {1});
    } else {
        const Matrix n = add_scalar(cert_.word.evaluate(t), t.field().neg(cert_.lambda));
        const Subspace k = kernel(n);
        if (k.dim() != 1) return std::nullopt;
        v2 = k.basis();
    }
    Matrix b2 = record_.replay(t, v2);
    if (!is_invertible(b2)) return std::nullopt;
    for (std::size_t k = 0; k < t.num_gens(); ++k)
        if (!(b2 * t.gen(k) == std_gens_[k] * b2)) return std::nullopt;
    return b2;
}

bool iso_test(const Irreducible& s, const GModule& t) { return s.standard_basis_in(t).has_value(); }

bool iso_test(const GModule& a, const GModule& b, std::uint64_t seed) {
    const IrreducibilityResult r = meataxe_irreducible(a, seed);
    if (r.verdict == Verdict::Inconclusive) throw InconclusiveError("iso_test: irreducibility not decided");
    if (r.verdict == Verdict::Reducible) throw std::invalid_argument("iso_test: first module is reducible");
    return iso_test(Irreducible(a, r.cert), b);
}

int Registry::find(const GModule& s) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].irr.dim() == s.dim() && iso_test(entries_[i].irr, s)) return static_cast<int>(i);
    return -1;
}

int Registry::identify(const GModule& s, const NortonCertificate& cert) {
    const int found = find(s);
    if (found >= 0) return found;
    const int id = static_cast<int>(entries_.size());
    entries_.push_back(Entry{Irreducible(s, cert), -1, {}});
    const GModule d = s.dual();
    int did = find(d);
    if (did < 0) {
        const IrreducibilityResult r = meataxe_irreducible(d, seed_ + 7919u * entries_.size());
        if (r.verdict != Verdict::Irreducible) throw InconclusiveError("dual of an irreducible module was not certified");
        did = static_cast<int>(entries_.size());
        entries_.push_back(Entry{Irreducible(d, r.cert), id, {}});
    }
    entries_[static_cast<std::size_t>(id)].dual = did;
    entries_[static_cast<std::size_t>(did)].dual = id;
    return id;
}

int Registry::identify(const GModule& s) {
    const IrreducibilityResult r = meataxe_irreducible(s, seed_ + 104729u * (entries_.size() + 1));
    if (r.verdict == Verdict::Inconclusive) throw InconclusiveError("irreducibility not decided");
    if (r.verdict == Verdict::Reducible) throw std::invalid_argument("module is reducible");
    return identify(s, r.cert);
}

int Registry::trivial_id() const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (is_one_dim_trivial(entries_[i].irr.module())) return static_cast<int>(i);
    return -1;
}

void Registry::set_name(int id, std::string name) { entries_.at(static_cast<std::size_t>(id)).name = std::move(name); }

std::string Registry::name(int id) const {
    const Entry& e = entries_.at(static_cast<std::size_t>(id));
    if (!e.name.empty()) return e.name;
    return "S" + std::to_string(id) + "(" + std::to_string(e.irr.dim()) + ")";
}

std::size_t labels_dim(const Labels& l, const Registry& reg) {
    std::size_t d = 0;
    for (const auto& [id, mult] : l) d += reg.dim_of(id) * static_cast<std::size_t>(mult);
    return d;
}

Labels dual_labels(const Labels& l, const Registry& reg) {
    Labels out;
    for (const auto& [id, mult] : l) out[reg.dual_of(id)] += mult;
    return out;
}

std::string labels_to_string(const Labels& l, const Registry& reg) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, mult] : l) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult;
        os << reg.name(id);
    }
    if (first) os << "0";
    return os.str();
}

std::pair<GModule, GModule> sub_quotient(const GModule& m, const Subspace& u) {
    if (!m.is_invariant(u)) throw std::invalid_argument("sub_quotient: subspace is not invariant");
    const Subspace zero(m.field(), m.dim());
    const Subspace full = Subspace::full(m.field(), m.dim());
    return {Subquotient(m, zero, u).module(), Subquotient(m, u, full).module()};
}

std::vector<int> composition_factors(const GModule& m, Registry& reg, std::uint64_t seed) {
    std::vector<int> out;
    std::uint64_t counter = 0;
    std::function<void(const GModule&)> refine = [&](const GModule& x) {
        if (x.dim() == 0) return;
        const IrreducibilityResult r = meataxe_irreducible(x, seed * 1000003u + counter++);
        switch (r.verdict) {
            case Verdict::Irreducible: out.push_back(reg.identify(x, r.cert)); return;
            case Verdict::Reducible: {
                auto [sub, quot] = sub_quotient(x, r.witness);
                refine(sub);
                refine(quot);
                return;
            }
            case Verdict::Inconclusive: throw InconclusiveError("composition series: irreducibility not decided");
        }
    };
    refine(m);
    return out;
}

Labels factor_multiset(const std::vector<int>& ids) {
    Labels out;
    for (int id : ids) ++out[id];
    return out;
}

std::vector<Matrix> hom_from_irreducible(const Irreducible& s, const GModule& m) {
    const Field f = m.field();
    const std::size_t d = s.dim(), dm = m.dim();
    std::vector<Matrix> out;
    if (d > dm) return out;
    if (d == 1) {
        const Subspace fixed = eigen_fixed(s.module(), m);
        for (std::size_t r = 0; r < fixed.dim(); ++r) out.push_back(fixed.basis().row(r));
        return out;
    }
    const Matrix n = add_scalar(s.cert().word.evaluate(m), f.neg(s.cert().lambda));
    const Subspace k = kernel(n);
    const std::size_t t = k.dim();
    if (t == 0) return out;
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < t; ++i) images.push_back(s.record().replay(m, k.basis().row(i)));

    // y in the left kernel of the residues  Im_t g_k - C_k Im_t.
    Matrix big(f, t, m.num_gens() * d * dm);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t g = 0; g < m.num_gens(); ++g) {
            const Matrix res = m.act(g, images[i]) - s.std_gens()[g] * images[i];
            const std::size_t base = g * d * dm;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < dm; ++c) {
                    const std::uint32_t v = res.at(r, c);
                    if (v) big.set(i, base + r * dm + c, v);
                }
        }
    }
    const Subspace y = kernel(big);
    for (std::size_t j = 0; j < y.dim(); ++j) {
        Matrix im(f, d, dm);
        for (std::size_t i = 0; i < t; ++i) {
            const std::uint32_t c = y.basis().at(j, i);
            if (c) im = im + scaled(images[i], c);
        }
        out.push_back(std::move(im));
    }
    return out;
}

Subspace isotypic_socle(const Irreducible& s, const GModule& m) {
    Matrix rows(m.field(), 0, m.dim());
    for (const Matrix& im : hom_from_irreducible(s, m)) rows.append_rows(im);
    return Subspace::span(rows);
}

std::vector<Matrix> hom_space(const GModule& m, const GModule& n) {
    const Field f = m.field();
    const std::size_t dm = m.dim(), dn = n.dim();
    if (m.num_gens() != n.num_gens()) throw DimensionError("hom_space: generator counts differ");
    if (dm * dn > 4096) throw DimensionError("hom_space: dense solve limited to dim M * dim N <= 4096");
    const std::size_t unknowns = dm * dn, block = dm * dn;
    Matrix l(f, unknowns, m.num_gens() * block);
    for (std::size_t k = 0; k < m.num_gens(); ++k) {
        const Matrix& gm = m.gen(k);
        const Matrix& gn = n.gen(k);
        const std::size_t base = k * block;
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                const std::size_t row = i * dn + j;
                // g_M E_ij has column j equal to column i of g_M.
                for (std::size_t a = 0; a < dm; ++a) {
                    const std::uint32_t v = gm.at(a, i);
                    if (v) l.set(row, base + a * dn + j, f.add(l.at(row, base + a * dn + j), v));
                }
                // E_ij g_N has row i equal to row j of g_N.
                for (std::size_t b = 0; b < dn; ++b) {
                    const std::uint32_t v = gn.at(j, b);
                    if (v) l.set(row, base + i * dn + b, f.sub(l.at(row, base + i * dn + b), v));
                }
            }
    }
    const Subspace sol = kernel(l);
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < sol.dim(); ++s) {
        Matrix x(f, dm, dn);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) x.set(i, j, sol.basis().at(s, i * dn + j));
        out.push_back(std::move(x));
    }
    return out;
}

SocleLayer socle(const GModule& m, const Registry& reg, const std::vector<int>& pool) {
    SocleLayer out;
    out.upper = Subspace(m.field(), m.dim());
    if (m.dim() == 0) return out;
    std::size_t total = 0;
    for (int id : distinct(pool)) {
        const Irreducible& s = reg.at(id);
        if (s.dim() > m.dim()) continue;
        const Subspace iso = isotypic_socle(s, m);
        if (iso.dim() == 0) continue;
        if (iso.dim() % s.dim() != 0) throw std::logic_error("isotypic socle dimension is not a multiple of the factor");
        out.labels[id] = static_cast<int>(iso.dim() / s.dim());
        out.upper = subspace_sum(out.upper, iso);
        total += iso.dim();
    }
    if (total != out.upper.dim()) throw std::logic_error("isotypic socle components overlap");
    if (out.upper.dim() == 0) throw std::runtime_error("socle is zero: irreducible pool is incomplete");
    return out;
}

std::vector<SocleLayer> socle_series(const GModule& m, const Registry& reg, const std::vector<int>& pool) {
    std::vector<SocleLayer> out;
    if (m.dim() == 0) return out;
    out.push_back(socle(m, reg, pool));
    const Subspace full = Subspace::full(m.field(), m.dim());
    while (!out.back().upper.is_full()) {
        const Subquotient q(m, out.back().upper, full);
        SocleLayer layer = socle(q.module(), reg, pool);
        layer.upper = q.preimage(layer.upper);
        out.push_back(std::move(layer));
    }
    return out;
}

HeadResult head(const GModule& m, const Registry& reg, const std::vector<int>& pool) {
    std::vector<int> dual_pool;
    for (int id : pool) dual_pool.push_back(reg.dual_of(id));
    const SocleLayer s = socle(m.dual(), reg, dual_pool);
    return HeadResult{perp(s.upper), dual_labels(s.labels, reg)};
}

bool is_uniserial(const std::vector<SocleLayer>& series) {
    for (const auto& layer : series)
        if (layer.labels.size() != 1 || layer.labels.begin()->second != 1) return false;
    return true;
}

std::vector<Labels> layer_labels(const std::vector<SocleLayer>& series) {
    std::vector<Labels> out;
    for (const auto& layer : series) out.push_back(layer.labels);
    return out;
}

Peakword find_peakword(const Registry& reg, int id, const std::vector<int>& pool, std::uint64_t seed, int budget) {
    const GModule& s = reg.at(id).module();
    const Field f = s.field();
    std::vector<int> others;
    for (int o : distinct(pool))
        if (o != id) others.push_back(o);
    // Sequences are restarted now and then: a long program tends to settle in a small subalgebra.
    constexpr int kRestart = 50;
    std::optional<RandomWordSequence> seq;
    std::vector<RandomWordSequence> other_seq;
    for (int attempt = 0; attempt < budget; ++attempt) {
        if (attempt % kRestart == 0) {
            const std::uint64_t s2 = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt / kRestart);
            seq.emplace(s, s2);
            other_seq.clear();
            for (int o : others) other_seq.emplace_back(reg.at(o).module(), s2);
        }
        const Matrix& theta = seq->next();
        std::vector<const Matrix*> other_theta;
        for (auto& os : other_seq) other_theta.push_back(&os.next());
        for (std::uint32_t lambda = 0; lambda < f.ell(); ++lambda) {
            const Matrix n = add_scalar(theta, f.neg(lambda));
            if (nullity(n) != 1 || nullity(n * n) != 1) continue;
            bool ok = true;
            for (const Matrix* t : other_theta)
                if (!is_invertible(add_scalar(*t, f.neg(lambda)))) {
                    ok = false;
                    break;
                }
            if (ok) return Peakword{seq->word(), lambda};
        }
    }
    throw InconclusiveError("no peakword found for " + reg.name(id));
}

Subspace stable_kernel(const GModule& m, const Peakword& p) {
    Matrix n = add_scalar(p.word.evaluate(m), m.field().neg(p.lambda));
    std::size_t null = nullity(n);
    for (;;) {
        Matrix sq = n * n;
        const std::size_t null2 = nullity(sq);
        if (null2 == null) break;
        n = std::move(sq);
        null = null2;
    }
    return kernel(n);
}

std::vector<Matrix> projective_vectors(const Subspace& u, std::size_t cap) {
    const Field f = u.field();
    const std::size_t k = u.dim(), ell = f.ell();
    std::size_t count = 0, power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count += power;
        if (count > cap) throw std::length_error("projective_vectors: too many vectors");
        power *= ell;
    }
    std::vector<Matrix> out;
    // Leading coefficient 1 at position `lead`, free coefficients after it.
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t free = k - lead - 1;
        std::vector<std::uint32_t> coef(free, 0);
        for (;;) {
            Matrix v = u.basis().row(lead);
            for (std::size_t j = 0; j < free; ++j)
                if (coef[j]) v = v + scaled(u.basis().row(lead + 1 + j), coef[j]);
            out.push_back(std::move(v));
            std::size_t j = 0;
            while (j < free && ++coef[j] == ell) coef[j++] = 0;
            if (j == free) break;
        }
    }
    return out;
}

namespace {

using SubspaceKey = std::vector<std::uint32_t>;

SubspaceKey key_of(const Subspace& s) {
    SubspaceKey k{static_cast<std::uint32_t>(s.dim())};
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const auto row = s.basis().row_values(r);
        k.insert(k.end(), row.begin(), row.end());
    }
    return k;
}

}  // namespace

std::vector<Subspace> local_submodules(const GModule& m, const Registry& reg, const std::vector<int>& pool,
                                       std::uint64_t seed, std::size_t cap) {
    std::vector<Subspace> out;
    std::set<SubspaceKey> seen;
    for (int id : distinct(pool)) {
        const Peakword p = find_peakword(reg, id, pool, seed + static_cast<std::uint64_t>(id));
        const Subspace k = stable_kernel(m, p);
        for (const Matrix& v : projective_vectors(k, cap)) {
            Subspace s = spin(m, v);
            if (seen.insert(key_of(s)).second) out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Subspace> submodule_lattice(const GModule& m, const Registry& reg, const std::vector<int>& pool,
                                        std::uint64_t seed, std::size_t cap) {
    const std::vector<Subspace> locals = local_submodules(m, reg, pool, seed);
    std::vector<Subspace> all{Subspace(m.field(), m.dim())};
    std::set<SubspaceKey> seen{key_of(all[0])};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (const Subspace& l : locals) {
            if (is_subspace(l, all[i])) continue;
            Subspace s = subspace_sum(all[i], l);
            if (seen.insert(key_of(s)).second) {
                all.push_back(std::move(s));
                if (all.size() > cap) throw std::length_error("submodule lattice exceeds the cap");
            }
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    return all;
}

std::optional<std::vector<Subspace>> find_direct_sum(const GModule& m, const Registry& reg,
                                                     const std::vector<int>& pool,
                                                     const std::vector<std::vector<Labels>>& shapes,
                                                     std::uint64_t seed) {
    std::map<int, std::vector<Subspace>> by_top;
    std::vector<std::vector<Subspace>> candidates;
    std::size_t total = 0;
    for (const auto& shape : shapes) {
        if (shape.empty() || shape.back().size() != 1 || shape.back().begin()->second != 1)
            throw std::invalid_argument("find_direct_sum: each summand needs a simple top layer");
        std::size_t dim = 0;
        for (const Labels& l : shape) dim += labels_dim(l, reg);
        total += dim;
        const int top = shape.back().begin()->first;
        if (!by_top.count(top)) {
            const Peakword p = find_peakword(reg, top, pool, seed + static_cast<std::uint64_t>(top));
            std::vector<Subspace> spins;
            std::set<SubspaceKey> seen;
            for (const Matrix& v : projective_vectors(stable_kernel(m, p), 4096)) {
                Subspace s = spin(m, v);
                if (seen.insert(key_of(s)).second) spins.push_back(std::move(s));
            }
            by_top[top] = std::move(spins);
        }
        std::vector<Subspace> ok;
        for (const Subspace& s : by_top[top]) {
            if (s.dim() != dim) continue;
            const Subquotient sq(m, Subspace(m.field(), m.dim()), s);
            if (layer_labels(socle_series(sq.module(), reg, pool)) == shape) ok.push_back(s);
        }
        candidates.push_back(std::move(ok));
    }
    if (total != m.dim()) return std::nullopt;

    std::vector<Subspace> chosen;
    std::function<bool(std::size_t, const Subspace&)> search = [&](std::size_t i, const Subspace& acc) {
        if (i == candidates.size()) return acc.is_full();
        for (const Subspace& c : candidates[i]) {
            Subspace next = subspace_sum(acc, c);
            if (next.dim() != acc.dim() + c.dim()) continue;
            chosen.push_back(c);
            if (search(i + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(0, Subspace(m.field(), m.dim()))) return chosen;
    return std::nullopt;
}

}  // namespace orthoperm
