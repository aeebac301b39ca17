#include "muc/ffvec.hpp"

#include <algorithm>

namespace muc {

using K = ConstKind;

namespace {

const FramedSpace& fs(const Obj& a) {
    auto p = dynamic_cast<const FramedSpace*>(a.get());
    if (!p) throw TypeError("ffvec: foreign object " + a->describe());
    return *p;
}

std::vector<std::string> prefixed(const FramedSpace& a, const std::string& pre) {
    std::vector<std::string> out;
    out.reserve(a.dim());
    for (const auto& l : a.labels) out.push_back(pre + l);
    return out;
}

// e_i (x) e_j -> e_j (x) e_i for dims (m, n)
DenseMatrix swap_matrix(std::size_t m, std::size_t n) {
    DenseMatrix p(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) p.at(j * m + i, i * n + j) = GR(1);
    return p;
}

bool identity_kind(ConstKind k) {
    switch (k) {
        case K::AOx: case K::AOxInv: case K::AOp: case K::AOpInv:
        case K::ULOx: case K::ULOxInv: case K::UROx: case K::UROxInv:
        case K::ULOp: case K::ULOpInv: case K::UROp: case K::UROpInv:
        case K::DR: case K::M: case K::MInv:
        case K::LamOx: case K::LamOxInv: case K::LamOp: case K::LamOpInv:
        case K::LamBot: case K::LamBotInv:
        case K::Iota: case K::IotaInv:
        case K::Chi0Top: case K::Chi0TopInv: case K::Chi0Bot: case K::Chi0BotInv:
        case K::ConjEps: case K::ConjEpsInv:
            return true;
        default: return false;
    }
}

}  // namespace

std::string FramedSpace::describe() const {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += labels[i];
    }
    return s + "}";
}

std::string mutation_name(FfvecMutation m) {
    switch (m) {
        case FfvecMutation::None: return "none";
        case FfvecMutation::ScaleLamTop: return "scale-lam-top";
        case FfvecMutation::TransposePhi: return "transpose-phi";
        case FfvecMutation::SwapDeltaL: return "swap-delta-L";
        case FfvecMutation::DropConjInDagger: return "drop-conj-in-dagger";
        case FfvecMutation::PermuteEta: return "permute-eta";
    }
    return "?";
}

std::vector<FfvecMutation> all_mutations() {
    return {FfvecMutation::ScaleLamTop, FfvecMutation::TransposePhi, FfvecMutation::SwapDeltaL,
            FfvecMutation::DropConjInDagger, FfvecMutation::PermuteEta};
}

std::string FfvecModel::name() const {
    return mutation_ == FfvecMutation::None ? "ffvec" : "ffvec[" + mutation_name(mutation_) + "]";
}

Caps FfvecModel::caps() const {
    return Caps::parse({"symmetric", "mix", "isomix", "compact", "duals", "cyclor", "dagger", "conjugation", "unitary"});
}

Obj FfvecModel::space(std::size_t dim, const std::string& prefix) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < dim; ++i) l.push_back(prefix + std::to_string(i));
    return std::make_shared<FramedSpace>(std::move(l));
}

Obj FfvecModel::space(std::vector<std::string> labels) { return std::make_shared<FramedSpace>(std::move(labels)); }

std::size_t FfvecModel::dim_of(const Obj& a) { return fs(a).dim(); }

const DenseMatrix& FfvecModel::matrix_of(const Mor& f) {
    auto p = dynamic_cast<const FVMorphism*>(f.get());
    if (!p) throw TypeError("ffvec: foreign morphism");
    return p->matrix;
}

Mor FfvecModel::make(const Obj& dom, const Obj& cod, DenseMatrix m) const {
    if (m.rows() != dim_of(cod) || m.cols() != dim_of(dom)) {
        throw DimensionError("ffvec: matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " does not fit " + dom->describe() + " -> " + cod->describe());
    }
    auto f = std::make_shared<FVMorphism>();
    f->dom = dom;
    f->cod = cod;
    f->matrix = std::move(m);
    return f;
}

Obj FfvecModel::top() const {
    static const Obj unit = space(std::vector<std::string>{"1"});
    return unit;
}

Obj FfvecModel::tensor(const Obj& a, const Obj& b) const {
    const auto& x = fs(a);
    const auto& y = fs(b);
    std::vector<std::string> l;
    l.reserve(x.dim() * y.dim());
    for (const auto& p : x.labels)
        for (const auto& q : y.labels) l.push_back(p + "." + q);
    return space(std::move(l));
}

Obj FfvecModel::dual(const Obj& a) const { return space(prefixed(fs(a), "~")); }
Obj FfvecModel::dag(const Obj& a) const { return space(prefixed(fs(a), "~")); }
Obj FfvecModel::conj(const Obj& a) const { return space(fs(a).labels); }

bool FfvecModel::obj_equal(const Obj& a, const Obj& b) const { return fs(a).labels == fs(b).labels; }

Mor FfvecModel::id(const Obj& a) const { return make(a, a, DenseMatrix::identity(dim_of(a))); }

Mor FfvecModel::compose(const Mor& f, const Mor& g) const {
    if (dim_of(f->cod) != dim_of(g->dom)) {
        throw TypeError("ffvec: cannot compose " + f->cod->describe() + " with " + g->dom->describe());
    }
    return make(f->dom, g->cod, mat_mul(matrix_of(g), matrix_of(f)));
}

Mor FfvecModel::tensor_map(const Mor& f, const Mor& g) const {
    return make(tensor(f->dom, g->dom), tensor(f->cod, g->cod), mat_kron(matrix_of(f), matrix_of(g)));
}

Mor FfvecModel::dag_map(const Mor& f) const {
    const auto& m = matrix_of(f);
    DenseMatrix d = mutation_ == FfvecMutation::DropConjInDagger ? mat_transpose(m) : mat_conj_transpose(m);
    return make(dag(f->cod), dag(f->dom), std::move(d));
}

Mor FfvecModel::conj_map(const Mor& f) const {
    return make(conj(f->dom), conj(f->cod), mat_entrywise_conj(matrix_of(f)));
}

Mor FfvecModel::dual_map(const Mor& f) const {
    return make(dual(f->cod), dual(f->dom), mat_transpose(matrix_of(f)));
}

bool FfvecModel::equal(const Mor& f, const Mor& g) const { return matrix_of(f) == matrix_of(g); }

std::optional<Mor> FfvecModel::inverse(const Mor& f) const {
    const auto& m = matrix_of(f);
    if (!m.is_square()) return std::nullopt;
    auto inv = mat_inverse(m);
    if (!inv) return std::nullopt;
    return make(f->cod, f->dom, std::move(*inv));
}

Mor FfvecModel::swap(const Obj& a, const Obj& b, const Obj& dom, const Obj& cod) const {
    return make(dom, cod, swap_matrix(dim_of(a), dim_of(b)));
}

Mor FfvecModel::supply(ConstKind k, const std::vector<Obj>& args) const {
    if (identity_kind(k)) {
        auto [dom, cod] = const_endpoints(*this, k, args);
        return make(dom, cod, DenseMatrix::identity(dim_of(dom)));
    }
    switch (k) {
        case K::COx:
        case K::COp:
        case K::ChiOx:
        case K::ChiOp: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            return swap(args[0], args[1], dom, cod);
        }
        case K::ChiOxInv:
        case K::ChiOpInv: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            return swap(args[1], args[0], dom, cod);
        }
        case K::DL: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            if (mutation_ == FfvecMutation::SwapDeltaL) {
                DenseMatrix p = mat_kron(DenseMatrix::identity(dim_of(args[0])),
                                         swap_matrix(dim_of(args[1]), dim_of(args[2])));
                return make(dom, cod, std::move(p));
            }
            return make(dom, cod, DenseMatrix::identity(dim_of(dom)));
        }
        case K::Eta:
        case K::Eps: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            std::size_t d = dim_of(args[0]);
            bool eta = k == K::Eta;
            DenseMatrix m = eta ? DenseMatrix(d * d, 1) : DenseMatrix(1, d * d);
            for (std::size_t i = 0; i < d; ++i) {
                std::size_t first = (eta && mutation_ == FfvecMutation::PermuteEta) ? (i + 1) % d : i;
                std::size_t idx = first * d + i;
                if (eta) m.at(idx, 0) = GR(1);
                else m.at(0, idx) = GR(1);
            }
            return make(dom, cod, std::move(m));
        }
        case K::LamTop: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            GR v = mutation_ == FfvecMutation::ScaleLamTop ? GR(2) : GR(1);
            return make(dom, cod, DenseMatrix::identity(1).scaled(v));
        }
        case K::Phi: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            std::size_t d = dim_of(dom);
            DenseMatrix m = DenseMatrix::identity(d);
            if (mutation_ == FfvecMutation::TransposePhi && d >= 2) {
                m.at(0, 0) = GR(0);
                m.at(1, 1) = GR(0);
                m.at(0, 1) = GR(1);
                m.at(1, 0) = GR(1);
            }
            return make(dom, cod, std::move(m));
        }
        default: return Model::supply(k, args);
    }
}

Mor FfvecModel::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    std::uniform_int_distribution<int> re(-2, 2);
    std::uniform_int_distribution<int> im(-1, 1);
    DenseMatrix m(dim_of(cod), dim_of(dom));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = GR(Rational(re(rng)), Rational(im(rng)));
    return make(dom, cod, std::move(m));
}

Mor FfvecModel::random_unitary(const Obj& a, Rng& rng) const {
    return make(a, a, random_phase_permutation(dim_of(a), rng));
}

nlohmann::json FfvecModel::dump(const Mor& f) const { return mat_to_json(matrix_of(f)); }

const std::vector<GR>& unit_modulus_entries() {
    static const std::vector<GR> v = [] {
        std::vector<GR> out = {GR(1), GR(-1), GR::i_unit(), -GR::i_unit()};
        for (int a : {3, 4}) {
            int b = 7 - a;
            for (int sa : {1, -1})
                for (int sb : {1, -1}) out.emplace_back(Rational(sa * a, 5), Rational(sb * b, 5));
        }
        return out;
    }();
    return v;
}

DenseMatrix random_phase_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto& phases = unit_modulus_entries();
    std::uniform_int_distribution<std::size_t> pick(0, phases.size() - 1);
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(perm[i], i) = phases[pick(rng)];
    return m;
}

bool ffvec_unitary_iff_matrix(const DenseMatrix& m) {
    auto inv = mat_inverse(m);
    if (!inv) throw NotInvertible("ffvec_unitary_iff_matrix: singular input");
    return mat_conj_transpose(m) == *inv;
}

}  // namespace muc
