#include "orthoperm/gmodule.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <sstream>

#include "orthoperm/perm_group.hpp"
#include "rowops.hpp"

namespace orthoperm {

GModule GModule::from_matrices(Field field, std::vector<Matrix> gens) {
    if (gens.empty()) throw std::invalid_argument("a module needs at least one generator");
    GModule m;
    m.field_ = field;
    m.dim_ = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != m.dim_ || g.cols() != m.dim_) throw DimensionError("generator shape mismatch");
    m.gens_ = std::move(gens);
    return m;
}

GModule GModule::from_permutations(Field field, const std::vector<Perm>& perms) {
    if (perms.empty()) throw std::invalid_argument("a module needs at least one generator");
    GModule m;
    m.field_ = field;
    m.dim_ = perms[0].size();
    m.perms_ = perms;
    for (const auto& p : perms) m.gens_.push_back(Matrix::permutation(field, p));
    return m;
}

void GModule::act(std::size_t k, const std::uint64_t* v, std::uint64_t* out) const {
    if (perms_.empty()) {
        vec_mat(v, gens_[k], out);
        return;
    }
    const Perm& p = perms_[k];
    const std::size_t stride = words_for(field_, dim_);
    if (field_.binary()) {
        std::memset(out, 0, stride * 8);
        for (std::size_t w = 0; w < stride; ++w) {
            std::uint64_t bits = v[w];
            while (bits) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                out[p[i] >> 6] |= std::uint64_t{1} << (p[i] & 63);
            }
        }
        return;
    }
    const std::uint8_t* src = detail::bytes(v);
    std::uint8_t* dst = detail::bytes(out);
    std::memset(out, 0, stride * 8);
    for (std::size_t i = 0; i < dim_; ++i) dst[p[i]] = src[i];
}

Matrix GModule::act(std::size_t k, const Matrix& vs) const {
    Matrix out(field_, vs.rows(), dim_);
    for (std::size_t r = 0; r < vs.rows(); ++r) act(k, vs.row_data(r), out.row_data(r));
    return out;
}

GModule GModule::dual() const {
    // Permutation matrices are orthogonal, so the dual is the same action.
    if (!perms_.empty()) return *this;
    std::vector<Matrix> d;
    for (const auto& g : gens_) d.push_back(inverse(g).transpose());
    return from_matrices(field_, std::move(d));
}

GModule GModule::transposed() const {
    if (!perms_.empty()) {
        std::vector<Perm> inv;
        for (const auto& p : perms_) inv.push_back(inverse(p));
        return from_permutations(field_, inv);
    }
    std::vector<Matrix> t;
    for (const auto& g : gens_) t.push_back(g.transpose());
    return from_matrices(field_, std::move(t));
}

bool GModule::is_invariant(const Subspace& u) const {
    if (u.ambient_dim() != dim_) throw DimensionError("subspace lives in a different space");
    for (std::size_t k = 0; k < num_gens(); ++k)
        if (!u.contains(act(k, u.basis()))) return false;
    return true;
}

Subspace spin(const GModule& m, const Matrix& seeds) {
    if (seeds.cols() != m.dim()) throw DimensionError("spin: seed length mismatch");
    EchelonBuilder eb(m.field(), m.dim());
    std::vector<std::uint64_t> w(words_for(m.field(), m.dim()));
    for (std::size_t r = 0; r < seeds.rows(); ++r) {
        std::copy(seeds.row_data(r), seeds.row_data(r) + w.size(), w.begin());
        eb.add(w.data());
    }
    for (std::size_t i = 0; i < eb.dim() && eb.dim() < m.dim(); ++i) {
        for (std::size_t k = 0; k < m.num_gens(); ++k) {
            m.act(k, eb.rows().row_data(i), w.data());
            eb.add(w.data());
        }
    }
    return eb.subspace();
}

SpinRecord spin_record(const GModule& m, const Matrix& v, std::size_t limit) {
    if (v.rows() != 1 || v.cols() != m.dim()) throw DimensionError("spin_record needs one row vector");
    SpinRecord rec;
    rec.basis = Matrix(m.field(), 0, m.dim());
    EchelonBuilder eb(m.field(), m.dim());
    std::vector<std::uint64_t> w(words_for(m.field(), m.dim())), scratch(w.size());
    std::copy(v.row_data(0), v.row_data(0) + w.size(), scratch.begin());
    if (!eb.add(scratch.data())) return rec;
    rec.basis.append_row(v.row_data(0));
    for (std::size_t i = 0; i < rec.basis.rows() && rec.basis.rows() < limit; ++i) {
        for (std::size_t k = 0; k < m.num_gens() && rec.basis.rows() < limit; ++k) {
            m.act(k, rec.basis.row_data(i), w.data());
            std::copy(w.begin(), w.end(), scratch.begin());
            if (eb.add(scratch.data())) {
                rec.basis.append_row(w.data());
                rec.steps.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)});
            }
        }
    }
    return rec;
}

Matrix SpinRecord::replay(const GModule& m, const Matrix& start) const {
    Matrix out(m.field(), 0, m.dim());
    out.append_row(start.row_data(0));
    std::vector<std::uint64_t> w(words_for(m.field(), m.dim()));
    for (const Step& s : steps) {
        m.act(s.gen, out.row_data(s.parent), w.data());
        out.append_row(w.data());
    }
    return out;
}

AlgebraWord AlgebraWord::prefix(std::size_t last) const {
    return AlgebraWord(std::vector<Op>(ops_.begin(), ops_.begin() + static_cast<std::ptrdiff_t>(last + 1)));
}

Matrix AlgebraWord::evaluate(const GModule& m) const {
    if (ops_.empty()) return Matrix(m.field(), m.dim(), m.dim());
    // Only values that a later op reads need to be kept.
    std::vector<std::size_t> last_use(ops_.size(), 0);
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (ops_[i].kind == Op::Gen) continue;
        last_use[ops_[i].a] = i;
        last_use[ops_[i].b] = i;
    }
    std::vector<Matrix> vals(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        switch (op.kind) {
            case Op::Gen: vals[i] = m.gen(op.a); break;
            case Op::Mul: vals[i] = vals[op.a] * vals[op.b]; break;
            case Op::Add: vals[i] = vals[op.a] + scaled(vals[op.b], op.coef); break;
        }
        if (op.kind != Op::Gen) {
            if (last_use[op.a] == i) vals[op.a] = Matrix();
            if (last_use[op.b] == i && op.b != op.a) vals[op.b] = Matrix();
        }
    }
    return std::move(vals.back());
}

std::string AlgebraWord::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        if (i) os << "; ";
        os << "w" << i << "=";
        switch (op.kind) {
            case Op::Gen: os << "g" << op.a; break;
            case Op::Mul: os << "w" << op.a << "*w" << op.b; break;
            case Op::Add: os << "w" << op.a << "+" << op.coef << "w" << op.b; break;
        }
    }
    return os.str();
}

RandomWordSequence::RandomWordSequence(const GModule& m, std::uint64_t seed) : module_(&m), rng_(seed) {}

const Matrix& RandomWordSequence::next() {
    using Op = AlgebraWord::Op;
    const std::size_t g = module_->num_gens();
    Op op{Op::Gen, 0, 0, 1};
    if (ops_.size() < g) {
        op = Op{Op::Gen, static_cast<std::uint32_t>(ops_.size()), 0, 1};
        values_.push_back(module_->gen(op.a));
    } else {
        const auto n = static_cast<std::uint32_t>(ops_.size());
        const std::uint32_t a = static_cast<std::uint32_t>(rng_() % n);
        std::uint32_t b = static_cast<std::uint32_t>(rng_() % n);
        const bool mul = rng_() % 2 == 0;
        if (!mul && a == b) b = (b + 1) % n;
        if (mul) {
            op = Op{Op::Mul, a, b, 1};
            values_.push_back(values_[a] * values_[b]);
        } else {
            const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng_() % (module_->field().ell() - 1));
            op = Op{Op::Add, a, b, c};
            values_.push_back(values_[a] + scaled(values_[b], c));
        }
    }
    ops_.push_back(op);
    word_ = AlgebraWord(ops_);
    return values_.back();
}

Subquotient::Subquotient(const GModule& parent, Subspace lower, Subspace upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (!is_subspace(lower_, upper_)) throw DimensionError("subquotient: lower is not inside upper");
    complement_ = Subspace::span(lower_.reduce(upper_.basis()));
    if (complement_.dim() + lower_.dim() != upper_.dim()) throw std::logic_error("subquotient complement has the wrong dimension");
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < parent.num_gens(); ++k) {
        if (!lower_.contains(parent.act(k, lower_.basis())))
            throw std::invalid_argument("subquotient: lower subspace is not invariant");
        Matrix img = parent.act(k, complement_.basis());
        if (!upper_.contains(img)) throw std::invalid_argument("subquotient: upper subspace is not invariant");
        gens.push_back(project(img));
    }
    module_ = GModule::from_matrices(parent.field(), std::move(gens));
}

Matrix Subquotient::lift(const Matrix& coords) const {
    if (coords.rows() == 0) return Matrix(lower_.field(), 0, lower_.ambient_dim());
    return coords * complement_.basis();
}

Subspace Subquotient::preimage(const Subspace& w) const {
    Matrix rows = lower_.basis();
    rows.append_rows(lift(w.basis()));
    return Subspace::span(rows);
}

Matrix Subquotient::project(const Matrix& vectors) const {
    return complement_.coordinates(lower_.reduce(vectors));
}

}  // namespace orthoperm
