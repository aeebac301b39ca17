#include "muc/finmat.hpp"

#include <algorithm>

namespace muc {

using K = ConstKind;
using Sparse = std::map<std::pair<WebIdx, WebIdx>, GR>;

namespace {

// e_i (x) e_j -> e_j (x) e_i for dims (m, n)
// column i*n+j of the swap goes to row j*m+i
std::vector<std::size_t> swap_perm(std::size_t m, std::size_t n) {
    std::vector<std::size_t> p(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) p[i * n + j] = j * m + i;
    return p;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool in_web(const FinSpace& s, const WebIdx& i) {
    switch (s.web) {
        case Web::Finite: return i.l < s.fin() && i.n == 0 && i.m == 0;
        case Web::NatProd: return i.l < s.fin() && i.m == 0;
        case Web::NatSq: return i.l == 0;
    }
    return false;
}

// Test sets on N x N: the diagonal, the row {0} x N and the column N x {0}.
// Their membership decides every inclusion between the four tags.
struct SqWitness {
    const char* text;
    bool in_finrows, in_fincols, in_rowfin, in_colfin;
};

const SqWitness sq_witnesses[] = {
    {"{(n,n)}", false, false, true, true},
    {"{(0,n)}", true, false, false, true},
    {"{(n,0)}", false, true, true, false},
};

bool sq_member(const SqWitness& w, FinTag t) {
    switch (t) {
        case FinTag::FinRows: return w.in_finrows;
        case FinTag::FinCols: return w.in_fincols;
        case FinTag::RowFin: return w.in_rowfin;
        case FinTag::ColFin: return w.in_colfin;
        default: return false;
    }
}

bool same_diag(const WebIdx& r, const WebIdx& c) { return r.n == c.n && r.m == c.m; }

DenseMatrix dense_of(const FinMatrix& f, const FinSpace& dom, const FinSpace& cod) {
    DenseMatrix d(cod.fin(), dom.fin());
    for (const auto& [key, v] : f.sparse) d.at(key.first.l, key.second.l) = v;
    return d;
}

std::vector<WebIdx> window(const FinSpace& s, std::uint64_t n0) {
    std::vector<WebIdx> out;
    if (s.web == Web::NatProd) {
        for (std::uint64_t n = 0; n < n0; ++n)
            for (std::size_t l = 0; l < s.fin(); ++l) out.push_back({l, n, 0});
    } else if (s.web == Web::NatSq) {
        for (std::uint64_t n = 0; n < n0; ++n)
            for (std::uint64_t m = 0; m < n0; ++m) out.push_back({0, n, m});
    } else {
        for (std::size_t l = 0; l < s.fin(); ++l) out.push_back({l, 0, 0});
    }
    return out;
}

nlohmann::json idx_json(const WebIdx& i) { return nlohmann::json::array({i.l, i.n, i.m}); }

}  // namespace

std::string tag_name(FinTag t) {
    switch (t) {
        case FinTag::None: return "";
        case FinTag::Fin: return "Fin";
        case FinTag::All: return "All";
        case FinTag::FinRows: return "FinRows";
        case FinTag::FinCols: return "FinCols";
        case FinTag::RowFin: return "RowFin";
        case FinTag::ColFin: return "ColFin";
    }
    return "?";
}

FinTag tag_dual(FinTag t) {
    switch (t) {
        case FinTag::Fin: return FinTag::All;
        case FinTag::All: return FinTag::Fin;
        case FinTag::FinRows: return FinTag::RowFin;
        case FinTag::RowFin: return FinTag::FinRows;
        case FinTag::FinCols: return FinTag::ColFin;
        case FinTag::ColFin: return FinTag::FinCols;
        case FinTag::None: return FinTag::None;
    }
    return t;
}

std::string FinSpace::describe() const {
    std::string l = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) l += (i ? "," : "") + labels[i];
    l += "}";
    switch (web) {
        case Web::Finite: return "Finite" + l;
        case Web::NatProd: return "N" + l + "_" + tag_name(tag);
        case Web::NatSq: return "NxN_" + tag_name(tag);
    }
    return "?";
}

GR FinMatrix::entry(const WebIdx& row, const WebIdx& col) const {
    GR v;
    auto it = sparse.find({row, col});
    if (it != sparse.end()) v = it->second;
    if (tail && same_diag(row, col)) v += tail->at(row.l, col.l);
    return v;
}

FinVerdict fin_validate_map(const FinMatrix& f) {
    const auto& dom = FinmatModel::space_of(f.dom);
    const auto& cod = FinmatModel::space_of(f.cod);
    FinVerdict v;
    for (const auto& [key, _] : f.sparse) {
        if (!in_web(cod, key.first) || !in_web(dom, key.second)) {
            v.valid = false;
            v.reason = "entry outside the web";
            return v;
        }
    }
    if (!f.tail || f.tail->is_zero()) return v;
    if (dom.web != cod.web || !dom.nat()) {
        v.valid = false;
        v.reason = "diagonal tail between webs without a shared N component";
        return v;
    }
    if (f.tail->rows() != cod.fin() || f.tail->cols() != dom.fin()) {
        v.valid = false;
        v.reason = "diagonal tail has the wrong block shape";
        return v;
    }
    if (dom.web == Web::NatProd) {
        if (dom.tag == FinTag::All && cod.tag == FinTag::Fin) {
            std::size_t col = 0;
            for (std::size_t c = 0; c < dom.fin(); ++c) {
                for (std::size_t r = 0; r < cod.fin(); ++r)
                    if (!f.tail->at(r, c).is_zero()) col = c;
            }
            v.valid = false;
            v.direction = "forward";
            v.witness = "{" + dom.labels[col] + "} x N";
            v.reason = "an All-finitary set has an infinite image in a Fin space";
        }
        return v;
    }
    for (const auto& w : sq_witnesses) {
        if (sq_member(w, dom.tag) && !sq_member(w, cod.tag)) {
            v.valid = false;
            v.direction = "forward";
            v.witness = w.text;
            v.reason = "the diagonal carries a " + tag_name(dom.tag) + "-finitary set outside " + tag_name(cod.tag);
            return v;
        }
    }
    return v;
}

WebIdx fin_pair_index(const FinSpace& a, const FinSpace& b, const WebIdx& ia, const WebIdx& ib) {
    WebIdx out;
    out.l = ia.l * b.fin() + ib.l;
    if (a.web == Web::NatProd && b.web == Web::NatProd) {
        out.l = 0;
        out.n = ia.n;
        out.m = ib.n;
    } else if (a.nat()) {
        out.n = ia.n;
        out.m = ia.m;
    } else if (b.nat()) {
        out.n = ib.n;
        out.m = ib.m;
    }
    return out;
}

Caps FinmatModel::caps() const {
    return Caps::parse({"symmetric", "mix", "isomix", "duals", "cyclor", "dagger", "conjugation"});
}

Obj FinmatModel::space(Web w, std::vector<std::string> labels, FinTag tag) {
    return std::make_shared<FinSpace>(w, std::move(labels), tag);
}

Obj FinmatModel::finite(std::size_t dim, const std::string& prefix) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < dim; ++i) l.push_back(prefix + std::to_string(i));
    return space(Web::Finite, std::move(l), FinTag::None);
}

Obj FinmatModel::nat(FinTag tag) {
    if (tag != FinTag::Fin && tag != FinTag::All) throw std::invalid_argument("finmat: N takes Fin or All");
    return space(Web::NatProd, {"*"}, tag);
}

const FinSpace& FinmatModel::space_of(const Obj& a) {
    auto p = dynamic_cast<const FinSpace*>(a.get());
    if (!p) throw TypeError("finmat: foreign object " + a->describe());
    return *p;
}

const FinMatrix& FinmatModel::matrix_of(const Mor& f) {
    auto p = dynamic_cast<const FinMatrix*>(f.get());
    if (!p) throw TypeError("finmat: foreign morphism");
    return *p;
}

std::shared_ptr<FinMatrix> FinmatModel::raw(const Obj& dom, const Obj& cod, Sparse sparse,
                                            std::optional<DenseMatrix> tail) {
    auto f = std::make_shared<FinMatrix>();
    f->dom = dom;
    f->cod = cod;
    if (tail && tail->is_zero()) tail.reset();
    for (auto it = sparse.begin(); it != sparse.end();) {
        if (it->second.is_zero()) it = sparse.erase(it);
        else ++it;
    }
    f->sparse = std::move(sparse);
    f->tail = std::move(tail);
    return f;
}

Mor FinmatModel::make(const Obj& dom, const Obj& cod, Sparse sparse, std::optional<DenseMatrix> tail) const {
    auto f = raw(dom, cod, std::move(sparse), std::move(tail));
    auto v = fin_validate_map(*f);
    if (!v.valid) {
        throw ModelDefect("finmat: invalid map " + dom->describe() + " -> " + cod->describe() + ": " + v.reason +
                          (v.witness.empty() ? "" : " (witness " + v.witness + ")"));
    }
    return f;
}

Obj FinmatModel::top() const {
    static const Obj unit = space(Web::Finite, {"*"}, FinTag::None);
    return unit;
}

Obj FinmatModel::tensor(const Obj& a, const Obj& b) const {
    const auto& x = space_of(a);
    const auto& y = space_of(b);
    std::vector<std::string> l;
    for (const auto& p : x.labels)
        for (const auto& q : y.labels) l.push_back(p + "." + q);
    if (!x.nat() && !y.nat()) return space(Web::Finite, std::move(l), FinTag::None);
    if (x.web == Web::NatProd && !y.nat()) return space(Web::NatProd, std::move(l), x.tag);
    if (y.web == Web::NatProd && !x.nat()) return space(Web::NatProd, std::move(l), y.tag);
    if (x.web == Web::NatSq && !y.nat() && y.fin() == 1) return space(Web::NatSq, {"*"}, x.tag);
    if (y.web == Web::NatSq && !x.nat() && x.fin() == 1) return space(Web::NatSq, {"*"}, y.tag);
    if (x.web == Web::NatProd && y.web == Web::NatProd && x.fin() == 1 && y.fin() == 1) {
        if (x.tag == FinTag::Fin && y.tag == FinTag::All) return space(Web::NatSq, {"*"}, FinTag::FinRows);
        if (x.tag == FinTag::All && y.tag == FinTag::Fin) return space(Web::NatSq, {"*"}, FinTag::FinCols);
    }
    throw FragmentError("outside-fragment", "finmat: " + x.describe() + " (x) " + y.describe() +
                                                " is outside the representable fragment");
}

Obj FinmatModel::dual(const Obj& a) const {
    const auto& x = space_of(a);
    return space(x.web, x.labels, tag_dual(x.tag));
}

Obj FinmatModel::par(const Obj& a, const Obj& b) const { return dual(tensor(dual(a), dual(b))); }

bool FinmatModel::obj_equal(const Obj& a, const Obj& b) const {
    const auto& x = space_of(a);
    const auto& y = space_of(b);
    return x.web == y.web && x.fin() == y.fin() && x.tag == y.tag;
}

Mor FinmatModel::structural(const Obj& dom, const Obj& cod, const std::vector<std::size_t>& perm) const {
    const auto& d = space_of(dom);
    const auto& c = space_of(cod);
    if (perm.size() != d.fin() || c.fin() != d.fin()) throw ModelDefect("finmat: structural block has the wrong shape");
    if (!d.nat() && !c.nat()) {
        Sparse s;
        for (std::size_t q = 0; q < perm.size(); ++q) s[{{perm[q], 0, 0}, {q, 0, 0}}] = GR(1);
        return make(dom, cod, std::move(s), std::nullopt);
    }
    if (d.web != c.web) throw ModelDefect("finmat: structural map between different webs");
    DenseMatrix p(c.fin(), d.fin());
    for (std::size_t q = 0; q < perm.size(); ++q) p.at(perm[q], q) = GR(1);
    return make(dom, cod, {}, p);
}

Mor FinmatModel::id(const Obj& a) const { return structural(a, a, identity_perm(space_of(a).fin())); }

Mor FinmatModel::compose(const Mor& f, const Mor& g) const {
    if (!obj_equal(f->cod, g->dom)) {
        throw TypeError("finmat: cannot compose " + f->cod->describe() + " with " + g->dom->describe());
    }
    // h = G F; deviations S_G S_F + S_G D_F + D_G S_F, tail T_G T_F
    const auto& F = matrix_of(f);
    const auto& G = matrix_of(g);
    const auto& X = space_of(f->dom);
    const auto& Z = space_of(g->cod);
    Sparse h;
    std::map<WebIdx, std::vector<std::pair<WebIdx, GR>>> f_by_row;
    for (const auto& [key, v] : F.sparse) f_by_row[key.first].emplace_back(key.second, v);
    for (const auto& [key, v] : G.sparse) {
        auto it = f_by_row.find(key.second);
        if (it != f_by_row.end())
            for (const auto& [x, w] : it->second) h[{key.first, x}] += v * w;
        if (F.tail) {
            const WebIdx& y = key.second;
            for (std::size_t l0 = 0; l0 < X.fin(); ++l0) {
                const GR& t = F.tail->at(y.l, l0);
                if (!t.is_zero()) h[{key.first, {l0, y.n, y.m}}] += v * t;
            }
        }
    }
    if (G.tail) {
        for (const auto& [key, v] : F.sparse) {
            const WebIdx& y = key.first;
            for (std::size_t l1 = 0; l1 < Z.fin(); ++l1) {
                const GR& t = G.tail->at(l1, y.l);
                if (!t.is_zero()) h[{{l1, y.n, y.m}, key.second}] += t * v;
            }
        }
    }
    std::optional<DenseMatrix> tail;
    if (F.tail && G.tail) tail = mat_mul(*G.tail, *F.tail);
    return make(f->dom, g->cod, std::move(h), std::move(tail));
}

Mor FinmatModel::kron(const Mor& f, const Mor& g, const Obj& dom, const Obj& cod) const {
    const auto& F = matrix_of(f);
    const auto& G = matrix_of(g);
    const auto& A = space_of(f->dom);
    const auto& A2 = space_of(f->cod);
    const auto& B = space_of(g->dom);
    const auto& B2 = space_of(g->cod);
    Sparse s;
    for (const auto& [kf, vf] : F.sparse)
        for (const auto& [kg, vg] : G.sparse)
            s[{fin_pair_index(A2, B2, kf.first, kg.first), fin_pair_index(A, B, kf.second, kg.second)}] += vf * vg;
    std::optional<DenseMatrix> tail;
    auto outside = [&] {
        return FragmentError("outside-fragment", "finmat: tensor of " + f->dom->describe() + " -> " +
                                                     f->cod->describe() + " and " + g->dom->describe() + " -> " +
                                                     g->cod->describe() + " has no finite representation");
    };
    if (F.tail && G.tail) {
        if (!F.sparse.empty() || !G.sparse.empty()) throw outside();
        tail = mat_kron(*F.tail, *G.tail);
    } else if (F.tail) {
        if (B.nat() || B2.nat()) throw outside();
        tail = mat_kron(*F.tail, dense_of(G, B, B2));
    } else if (G.tail) {
        if (A.nat() || A2.nat()) throw outside();
        tail = mat_kron(dense_of(F, A, A2), *G.tail);
    }
    return make(dom, cod, std::move(s), std::move(tail));
}

Mor FinmatModel::tensor_map(const Mor& f, const Mor& g) const {
    return kron(f, g, tensor(f->dom, g->dom), tensor(f->cod, g->cod));
}

Mor FinmatModel::par_map(const Mor& f, const Mor& g) const {
    return kron(f, g, par(f->dom, g->dom), par(f->cod, g->cod));
}

Mor FinmatModel::dual_map(const Mor& f) const {
    const auto& F = matrix_of(f);
    Sparse s;
    for (const auto& [key, v] : F.sparse) s[{key.second, key.first}] = v;
    std::optional<DenseMatrix> tail;
    if (F.tail) tail = mat_transpose(*F.tail);
    return make(dual(f->cod), dual(f->dom), std::move(s), std::move(tail));
}

Mor FinmatModel::conj_map(const Mor& f) const {
    const auto& F = matrix_of(f);
    Sparse s;
    for (const auto& [key, v] : F.sparse) s[key] = gr_conj(v);
    std::optional<DenseMatrix> tail;
    if (F.tail) tail = mat_entrywise_conj(*F.tail);
    return make(conj(f->dom), conj(f->cod), std::move(s), std::move(tail));
}

bool FinmatModel::equal(const Mor& f, const Mor& g) const {
    const auto& a = matrix_of(f);
    const auto& b = matrix_of(g);
    return a.sparse == b.sparse && a.tail == b.tail;
}

std::optional<Mor> FinmatModel::inverse(const Mor& f) const {
    const auto& F = matrix_of(f);
    const auto& D = space_of(f->dom);
    const auto& C = space_of(f->cod);
    if (!D.nat() && !C.nat()) {
        if (D.fin() != C.fin()) return std::nullopt;
        auto inv = mat_inverse(dense_of(F, D, C));
        if (!inv) return std::nullopt;
        Sparse s;
        for (std::size_t r = 0; r < inv->rows(); ++r)
            for (std::size_t c = 0; c < inv->cols(); ++c) s[{{r, 0, 0}, {c, 0, 0}}] = inv->at(r, c);
        return make(f->cod, f->dom, std::move(s), std::nullopt);
    }
    if (D.web != C.web || !F.tail || D.fin() != C.fin()) return std::nullopt;
    // block diagonal: a finite window holding every deviation, then the tail
    auto tinv = mat_inverse(*F.tail);
    if (!tinv) return std::nullopt;
    std::uint64_t n0 = 0;
    for (const auto& [key, _] : F.sparse)
        n0 = std::max({n0, key.first.n + 1, key.first.m + 1, key.second.n + 1, key.second.m + 1});
    Sparse s;
    if (n0 > 0) {
        auto win = window(D, n0);
        DenseMatrix w(win.size(), win.size());
        for (std::size_t i = 0; i < win.size(); ++i)
            for (std::size_t j = 0; j < win.size(); ++j) w.at(i, j) = F.entry(win[i], win[j]);
        auto winv = mat_inverse(w);
        if (!winv) return std::nullopt;
        for (std::size_t i = 0; i < win.size(); ++i)
            for (std::size_t j = 0; j < win.size(); ++j) {
                GR v = winv->at(i, j);
                if (same_diag(win[i], win[j])) v -= tinv->at(win[i].l, win[j].l);
                s[{win[i], win[j]}] = v;
            }
    }
    auto g = raw(f->cod, f->dom, std::move(s), std::move(*tinv));
    if (!fin_validate_map(*g).valid) return std::nullopt;
    return g;
}

Mor FinmatModel::supply(ConstKind k, const std::vector<Obj>& args) const {
    auto endpoints = [&] { return const_endpoints(*this, k, args); };
    auto swap = [&](const Obj& a, const Obj& b) {
        if (space_of(a).nat() && space_of(b).nat())
            throw FragmentError("outside-fragment", "finmat: symmetry on N x N exchanges the N coordinates");
        auto [dom, cod] = endpoints();
        return structural(dom, cod, swap_perm(space_of(a).fin(), space_of(b).fin()));
    };
    switch (k) {
        case K::AOx: case K::AOp:
        case K::ULOx: case K::UROx: case K::ULOp: case K::UROp:
        case K::DL: case K::DR: case K::M:
        case K::LamOx: case K::LamOp: case K::LamTop: case K::LamBot:
        case K::Iota: case K::Chi0Top: case K::Chi0Bot: case K::ConjEps: {
            auto [dom, cod] = endpoints();
            return structural(dom, cod, identity_perm(space_of(dom).fin()));
        }
        case K::COx: case K::COp: case K::ChiOx: case K::ChiOp: return swap(args[0], args[1]);
        case K::ChiOxInv: case K::ChiOpInv: return swap(args[1], args[0]);
        case K::Eta:
        case K::Eps: {
            const auto& a = space_of(args[0]);
            if (a.nat()) throw FragmentError("outside-fragment", "finmat: duality maps on an N web are infinite columns");
            auto [dom, cod] = endpoints();
            std::size_t d = a.fin();
            Sparse s;
            for (std::size_t i = 0; i < d; ++i) {
                WebIdx pair{i * d + i, 0, 0};
                if (k == K::Eta) s[{pair, {0, 0, 0}}] = GR(1);
                else s[{{0, 0, 0}, pair}] = GR(1);
            }
            return make(dom, cod, std::move(s), std::nullopt);
        }
        default: return Model::supply(k, args);
    }
}

Mor FinmatModel::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    const auto& D = space_of(dom);
    const auto& C = space_of(cod);
    std::uniform_int_distribution<int> re(-2, 2);
    std::uniform_int_distribution<int> im(-1, 1);
    std::bernoulli_distribution coin(0.5);
    auto draw = [&] { return GR(Rational(re(rng)), Rational(im(rng))); };
    bool finite = !D.nat() && !C.nat();
    Sparse s;
    for (const auto& r : window(C, 2))
        for (const auto& c : window(D, 2))
            if (finite || coin(rng)) s[{r, c}] = draw();
    std::optional<DenseMatrix> tail;
    if (D.web == C.web && D.nat()) {
        DenseMatrix t(C.fin(), D.fin());
        for (std::size_t r = 0; r < t.rows(); ++r)
            for (std::size_t c = 0; c < t.cols(); ++c) t.at(r, c) = draw();
        if (fin_validate_map(*raw(dom, cod, {}, t)).valid) tail = std::move(t);
    }
    // deviations are relative to the tail
    return make(dom, cod, std::move(s), std::move(tail));
}

nlohmann::json FinmatModel::dump(const Mor& f) const {
    const auto& F = matrix_of(f);
    nlohmann::json j;
    j["dom"] = f->dom->describe();
    j["cod"] = f->cod->describe();
    nlohmann::json s = nlohmann::json::array();
    for (const auto& [key, v] : F.sparse)
        s.push_back({{"row", idx_json(key.first)}, {"col", idx_json(key.second)}, {"v", gr_to_json(v)}});
    j["sparse"] = std::move(s);
    if (F.tail) j["diagTail"] = mat_to_json(*F.tail);
    return j;
}

FinCoreWitness fin_core_witness(const FinmatModel& M) {
    FinCoreWitness w;
    Obj nf = FinmatModel::nat(FinTag::Fin);
    Obj na = FinmatModel::nat(FinTag::All);
    Mor mx = M.c(K::Mx, {nf, na});
    w.forward = M.dump(mx);
    w.forward_valid = fin_validate_map(FinmatModel::matrix_of(mx)).valid;
    w.mx_invertible = M.inverse(mx).has_value();
    auto back = FinmatModel::raw(M.par(nf, na), M.tensor(nf, na), {}, DenseMatrix::identity(1));
    w.reverse = fin_validate_map(*back);
    Obj f2 = FinmatModel::finite(2);
    w.finite_mx_invertible = M.inverse(M.c(K::Mx, {f2, f2})).has_value();
    return w;
}

}  // namespace muc
