#include "muc/chu.hpp"

#include <stdexcept>

namespace muc {

using K = ConstKind;

namespace {

std::vector<GR> column(const DenseMatrix& m, std::size_t j) {
    std::vector<GR> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, j);
    return v;
}

// e_i (x) e_j -> e_j (x) e_i for dims (m, n)
DenseMatrix swap_matrix(std::size_t m, std::size_t n) {
    DenseMatrix p(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) p.at(j * m + i, i * n + j) = GR(1);
    return p;
}

std::size_t ambient(const PullbackBasis& pb) { return pb.nyb * pb.nxa + pb.nxb * pb.nya; }

GR hval(const PullbackBasis& pb, const std::vector<GR>& w, std::size_t q, std::size_t a) {
    return w[pb.h_index(q, a)];
}
GR kval(const PullbackBasis& pb, const std::vector<GR>& w, std::size_t b, std::size_t p) {
    return w[pb.k_index(b, p)];
}

}  // namespace

std::string ChuObject::describe() const {
    return "Chu[" + std::to_string(na) + "," + std::to_string(nb) + "]" + psi.to_string();
}

DenseMatrix chu_tensor_constraints(const ChuObject& x, const ChuObject& y) {
    // rows (a, p): sum_b psi[a][b] k[b][p] - sum_q phi[p][q] h[q][a] = 0
    PullbackBasis shape{DenseMatrix(), x.na, x.nb, y.na, y.nb, {}, {}};
    DenseMatrix m(x.na * y.na, ambient(shape));
    for (std::size_t a = 0; a < x.na; ++a) {
        for (std::size_t p = 0; p < y.na; ++p) {
            std::size_t row = a * y.na + p;
            for (std::size_t b = 0; b < x.nb; ++b) m.at(row, shape.k_index(b, p)) += x.psi.at(a, b);
            for (std::size_t q = 0; q < y.nb; ++q) m.at(row, shape.h_index(q, a)) -= y.psi.at(p, q);
        }
    }
    return m;
}

bool chu_check_map(const DenseMatrix& f, const DenseMatrix& g, const ChuObject& x, const ChuObject& y) {
    if (f.rows() != y.na || f.cols() != x.na || g.rows() != x.nb || g.cols() != y.nb) return false;
    return mat_mul(mat_transpose(f), y.psi) == mat_mul(x.psi, g);
}

const ChuObject& ChuModel::obj_of(const Obj& a) {
    auto p = dynamic_cast<const ChuObject*>(a.get());
    if (!p) throw TypeError("chu: foreign object " + a->describe());
    return *p;
}

const ChuMap& ChuModel::map_of(const Mor& m) {
    auto p = dynamic_cast<const ChuMap*>(m.get());
    if (!p) throw TypeError("chu: foreign morphism");
    return *p;
}

Obj ChuModel::object(DenseMatrix psi) {
    std::size_t na = psi.rows();
    std::size_t nb = psi.cols();
    return std::make_shared<ChuObject>(na, nb, std::move(psi));
}

Mor ChuModel::make(const Obj& dom, const Obj& cod, DenseMatrix f, DenseMatrix g) const {
    if (!chu_check_map(f, g, obj_of(dom), obj_of(cod))) {
        throw ModelDefect("chu: (f, g) is not a Chu map " + dom->describe() + " -> " + cod->describe());
    }
    auto m = std::make_shared<ChuMap>();
    m->dom = dom;
    m->cod = cod;
    m->f = std::move(f);
    m->g = std::move(g);
    return m;
}

Caps ChuModel::caps() const {
    return Caps::parse({"symmetric", "mix", "isomix", "duals", "cyclor", "dagger", "conjugation"});
}

Obj ChuModel::top() const {
    static const Obj unit = object(DenseMatrix::identity(1));
    return unit;
}

const PullbackBasis& ChuModel::pullback(const Obj& x, const Obj& y) const {
    auto key = std::make_pair(x->describe(), y->describe());
    auto it = pb_cache_.find(key);
    if (it != pb_cache_.end()) return *it->second;
    const auto& X = obj_of(x);
    const auto& Y = obj_of(y);
    auto pb = std::make_unique<PullbackBasis>();
    pb->nxa = X.na;
    pb->nxb = X.nb;
    pb->nya = Y.na;
    pb->nyb = Y.nb;
    DenseMatrix cons = chu_tensor_constraints(X, Y);
    pb->basis = mat_hconcat(mat_nullspace(cons), ambient(*pb));
    auto piv = mat_rref(cons).pivots;
    for (std::size_t j = 0, i = 0; j < cons.cols(); ++j) {
        if (i < piv.size() && piv[i] == j) ++i;
        else pb->free.push_back(j);
    }
    pb->constraints = std::move(cons);
    return *pb_cache_.emplace(key, std::move(pb)).first->second;
}

std::vector<GR> ChuModel::coords(const PullbackBasis& pb, const std::vector<GR>& w) const {
    std::vector<GR> c(pb.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = w[pb.free[i]];
    if (!mat_mul(pb.constraints, DenseMatrix::column(w)).is_zero())
        throw ModelDefect("chu: element outside the tensor's second component");
    return c;
}

Obj ChuModel::tensor(const Obj& a, const Obj& b) const {
    auto key = std::make_pair(a->describe(), b->describe());
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second;
    const auto& X = obj_of(a);
    const auto& Y = obj_of(b);
    const auto& pb = pullback(a, b);
    DenseMatrix psi(X.na * Y.na, pb.dim());
    for (std::size_t t = 0; t < pb.dim(); ++t) {
        auto w = column(pb.basis, t);
        for (std::size_t p0 = 0; p0 < X.na; ++p0)
            for (std::size_t p1 = 0; p1 < Y.na; ++p1) {
                GR s;
                for (std::size_t q = 0; q < X.nb; ++q) s += X.psi.at(p0, q) * kval(pb, w, q, p1);
                psi.at(p0 * Y.na + p1, t) = s;
            }
    }
    return tensor_cache_.emplace(key, object(std::move(psi))).first->second;
}

Obj ChuModel::dual(const Obj& a) const { return object(mat_transpose(obj_of(a).psi)); }
Obj ChuModel::conj(const Obj& a) const { return object(mat_entrywise_conj(obj_of(a).psi)); }
Obj ChuModel::par(const Obj& a, const Obj& b) const { return dual(tensor(dual(a), dual(b))); }

bool ChuModel::obj_equal(const Obj& a, const Obj& b) const {
    const auto& x = obj_of(a);
    const auto& y = obj_of(b);
    return x.na == y.na && x.nb == y.nb && x.psi == y.psi;
}

Mor ChuModel::id(const Obj& a) const {
    const auto& x = obj_of(a);
    return make(a, a, DenseMatrix::identity(x.na), DenseMatrix::identity(x.nb));
}

Mor ChuModel::compose(const Mor& f, const Mor& g) const {
    if (!obj_equal(f->cod, g->dom)) {
        throw TypeError("chu: cannot compose " + f->cod->describe() + " with " + g->dom->describe());
    }
    const auto& a = map_of(f);
    const auto& b = map_of(g);
    return make(f->dom, g->cod, mat_mul(b.f, a.f), mat_mul(a.g, b.g));
}

Mor ChuModel::tensor_map(const Mor& f, const Mor& g) const {
    // (h, k) in C(X', Y') goes to (v h f, g k u) in C(X, Y)
    const auto& m0 = map_of(f);
    const auto& m1 = map_of(g);
    const auto& src = pullback(f->cod, g->cod);
    const auto& dst = pullback(f->dom, g->dom);
    std::vector<DenseMatrix> cols;
    for (std::size_t t = 0; t < src.dim(); ++t) {
        auto w = column(src.basis, t);
        DenseMatrix h(src.nyb, src.nxa);
        DenseMatrix k(src.nxb, src.nya);
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t c = 0; c < h.cols(); ++c) h.at(r, c) = hval(src, w, r, c);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t c = 0; c < k.cols(); ++c) k.at(r, c) = kval(src, w, r, c);
        DenseMatrix h2 = mat_mul(mat_mul(m1.g, h), m0.f);
        DenseMatrix k2 = mat_mul(mat_mul(m0.g, k), m1.f);
        std::vector<GR> out(ambient(dst));
        for (std::size_t r = 0; r < h2.rows(); ++r)
            for (std::size_t c = 0; c < h2.cols(); ++c) out[dst.h_index(r, c)] = h2.at(r, c);
        for (std::size_t r = 0; r < k2.rows(); ++r)
            for (std::size_t c = 0; c < k2.cols(); ++c) out[dst.k_index(r, c)] = k2.at(r, c);
        cols.push_back(DenseMatrix::column(coords(dst, out)));
    }
    return make(tensor(f->dom, g->dom), tensor(f->cod, g->cod), mat_kron(m0.f, m1.f),
                mat_hconcat(cols, dst.dim()));
}

Mor ChuModel::par_map(const Mor& f, const Mor& g) const {
    return dual_map(tensor_map(dual_map(f), dual_map(g)));
}

Mor ChuModel::dual_map(const Mor& f) const {
    const auto& m = map_of(f);
    return make(dual(f->cod), dual(f->dom), m.g, m.f);
}

Mor ChuModel::conj_map(const Mor& f) const {
    const auto& m = map_of(f);
    return make(conj(f->dom), conj(f->cod), mat_entrywise_conj(m.f), mat_entrywise_conj(m.g));
}

bool ChuModel::equal(const Mor& f, const Mor& g) const {
    const auto& a = map_of(f);
    const auto& b = map_of(g);
    return a.f == b.f && a.g == b.g;
}

std::optional<Mor> ChuModel::inverse(const Mor& f) const {
    const auto& m = map_of(f);
    if (!m.f.is_square() || !m.g.is_square()) return std::nullopt;
    auto fi = mat_inverse(m.f);
    auto gi = mat_inverse(m.g);
    if (!fi || !gi) return std::nullopt;
    return make(f->cod, f->dom, std::move(*fi), std::move(*gi));
}

Mor ChuModel::assoc(const Obj& x, const Obj& y, const Obj& z) const {
    // second component C(X(x)Y, Z) -> C(X, Y(x)Z):
    // (h, k) with k(r) = (h_r, k_r) goes to (a -> (p -> h(a.p), r -> h_r(a)), p.r -> k_r(p))
    const auto& X = obj_of(x);
    const auto& Y = obj_of(y);
    const auto& Z = obj_of(z);
    Obj xy = tensor(x, y);
    Obj yz = tensor(y, z);
    const auto& pxy = pullback(x, y);
    const auto& pyz = pullback(y, z);
    const auto& src = pullback(xy, z);
    const auto& dst = pullback(x, yz);
    std::vector<DenseMatrix> cols;
    for (std::size_t t = 0; t < src.dim(); ++t) {
        auto w = column(src.basis, t);
        std::vector<std::vector<GR>> er;
        for (std::size_t r = 0; r < Z.na; ++r) {
            std::vector<GR> c(pxy.dim());
            for (std::size_t i = 0; i < pxy.dim(); ++i) c[i] = kval(src, w, i, r);
            er.push_back(column(mat_mul(pxy.basis, DenseMatrix::column(c)), 0));
        }
        std::vector<GR> out(ambient(dst));
        for (std::size_t a = 0; a < X.na; ++a) {
            std::vector<GR> e(ambient(pyz));
            for (std::size_t s = 0; s < Z.nb; ++s)
                for (std::size_t p = 0; p < Y.na; ++p) e[pyz.h_index(s, p)] = hval(src, w, s, a * Y.na + p);
            for (std::size_t q = 0; q < Y.nb; ++q)
                for (std::size_t r = 0; r < Z.na; ++r) e[pyz.k_index(q, r)] = hval(pxy, er[r], q, a);
            auto ca = coords(pyz, e);
            for (std::size_t i = 0; i < ca.size(); ++i) out[dst.h_index(i, a)] = ca[i];
        }
        for (std::size_t b = 0; b < X.nb; ++b)
            for (std::size_t p = 0; p < Y.na; ++p)
                for (std::size_t r = 0; r < Z.na; ++r) out[dst.k_index(b, p * Z.na + r)] = kval(pxy, er[r], b, p);
        cols.push_back(DenseMatrix::column(coords(dst, out)));
    }
    Obj dom = tensor(x, yz);
    Obj cod = tensor(xy, z);
    return make(dom, cod, DenseMatrix::identity(X.na * Y.na * Z.na), mat_hconcat(cols, dst.dim()));
}

Mor ChuModel::unit_left(const Obj& x) const {
    // b -> (1 -> b, a -> <a, b>)
    const auto& X = obj_of(x);
    const auto& pb = pullback(top(), x);
    std::vector<DenseMatrix> cols;
    for (std::size_t b = 0; b < X.nb; ++b) {
        std::vector<GR> e(ambient(pb));
        e[pb.h_index(b, 0)] = GR(1);
        for (std::size_t a = 0; a < X.na; ++a) e[pb.k_index(0, a)] = X.psi.at(a, b);
        cols.push_back(DenseMatrix::column(coords(pb, e)));
    }
    return make(tensor(top(), x), x, DenseMatrix::identity(X.na), mat_hconcat(cols, pb.dim()));
}

Mor ChuModel::unit_right(const Obj& x) const {
    const auto& X = obj_of(x);
    const auto& pb = pullback(x, top());
    std::vector<DenseMatrix> cols;
    for (std::size_t b = 0; b < X.nb; ++b) {
        std::vector<GR> e(ambient(pb));
        for (std::size_t a = 0; a < X.na; ++a) e[pb.h_index(0, a)] = X.psi.at(a, b);
        e[pb.k_index(b, 0)] = GR(1);
        cols.push_back(DenseMatrix::column(coords(pb, e)));
    }
    return make(tensor(x, top()), x, DenseMatrix::identity(X.na), mat_hconcat(cols, pb.dim()));
}

Mor ChuModel::sym(const Obj& x, const Obj& y) const {
    // (h, k) in C(Y, X) goes to (k, h) in C(X, Y)
    const auto& X = obj_of(x);
    const auto& Y = obj_of(y);
    const auto& src = pullback(y, x);
    const auto& dst = pullback(x, y);
    std::vector<DenseMatrix> cols;
    for (std::size_t t = 0; t < src.dim(); ++t) {
        auto w = column(src.basis, t);
        std::vector<GR> e(ambient(dst));
        for (std::size_t q = 0; q < Y.nb; ++q)
            for (std::size_t a = 0; a < X.na; ++a) e[dst.h_index(q, a)] = kval(src, w, q, a);
        for (std::size_t b = 0; b < X.nb; ++b)
            for (std::size_t p = 0; p < Y.na; ++p) e[dst.k_index(b, p)] = hval(src, w, b, p);
        cols.push_back(DenseMatrix::column(coords(dst, e)));
    }
    return make(tensor(x, y), tensor(y, x), swap_matrix(X.na, Y.na), mat_hconcat(cols, dst.dim()));
}

Mor ChuModel::dist_left(const Obj& x, const Obj& y, const Obj& z) const {
    // X (x) (Y (+) Z) -> (X (x) Y) (+) Z, elements of Y (+) Z being pairs
    // (h : Y.B -> Z.A, k : Z.B -> Y.A).
    //   f : a.(h, k) -> (c -> h(h_c(a)), s -> a.k(s))
    //   g : c.s -> (a -> h_c(a).s, (h, k) -> k_c(k(s)))
    // where c = (h_c, k_c) runs over C(X, Y).
    const auto& X = obj_of(x);
    const auto& Y = obj_of(y);
    const auto& Z = obj_of(z);
    Obj xy = tensor(x, y);
    Obj yz = par(y, z);
    const auto& pxy = pullback(x, y);
    const auto& pu = pullback(dual(y), dual(z));
    const auto& pf = pullback(dual(xy), dual(z));
    const auto& pg = pullback(x, yz);
    std::size_t nc = pxy.dim();
    std::vector<std::vector<GR>> ec;
    for (std::size_t c = 0; c < nc; ++c) ec.push_back(column(pxy.basis, c));
    std::vector<std::vector<GR>> eu;
    for (std::size_t u = 0; u < pu.dim(); ++u) eu.push_back(column(pu.basis, u));

    std::vector<DenseMatrix> fcols;
    for (std::size_t a = 0; a < X.na; ++a) {
        for (std::size_t u = 0; u < pu.dim(); ++u) {
            std::vector<GR> e(ambient(pf));
            for (std::size_t r = 0; r < Z.na; ++r)
                for (std::size_t c = 0; c < nc; ++c) {
                    GR s;
                    for (std::size_t q = 0; q < Y.nb; ++q) s += hval(pu, eu[u], r, q) * hval(pxy, ec[c], q, a);
                    e[pf.h_index(r, c)] = s;
                }
            for (std::size_t p = 0; p < Y.na; ++p)
                for (std::size_t s = 0; s < Z.nb; ++s) e[pf.k_index(a * Y.na + p, s)] = kval(pu, eu[u], p, s);
            fcols.push_back(DenseMatrix::column(coords(pf, e)));
        }
    }
    std::vector<DenseMatrix> gcols;
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t s = 0; s < Z.nb; ++s) {
            std::vector<GR> e(ambient(pg));
            for (std::size_t q = 0; q < Y.nb; ++q)
                for (std::size_t a = 0; a < X.na; ++a) e[pg.h_index(q * Z.nb + s, a)] = hval(pxy, ec[c], q, a);
            for (std::size_t b = 0; b < X.nb; ++b)
                for (std::size_t u = 0; u < pu.dim(); ++u) {
                    GR v;
                    for (std::size_t p = 0; p < Y.na; ++p) v += kval(pxy, ec[c], b, p) * kval(pu, eu[u], p, s);
                    e[pg.k_index(b, u)] = v;
                }
            gcols.push_back(DenseMatrix::column(coords(pg, e)));
        }
    }
    return make(tensor(x, yz), par(xy, z), mat_hconcat(fcols, pf.dim()), mat_hconcat(gcols, pg.dim()));
}

Mor ChuModel::counit(const Obj& x) const {
    const auto& X = obj_of(x);
    Obj dx = dual(x);
    const auto& pb = pullback(x, dx);
    DenseMatrix f(1, X.na * X.nb);
    for (std::size_t a = 0; a < X.na; ++a)
        for (std::size_t b = 0; b < X.nb; ++b) f.at(0, a * X.nb + b) = X.psi.at(a, b);
    std::vector<GR> e(ambient(pb));
    for (std::size_t a = 0; a < X.na; ++a) e[pb.h_index(a, a)] = GR(1);
    for (std::size_t b = 0; b < X.nb; ++b) e[pb.k_index(b, b)] = GR(1);
    return make(tensor(x, dx), bot(), std::move(f), DenseMatrix::column(coords(pb, e)));
}

Mor ChuModel::supply(ConstKind k, const std::vector<Obj>& args) const {
    auto rewrap = [&](const Mor& m) {
        auto [dom, cod] = const_endpoints(*this, k, args);
        const auto& c = map_of(m);
        return make(dom, cod, c.f, c.g);
    };
    switch (k) {
        case K::AOx: return assoc(args[0], args[1], args[2]);
        case K::AOp: return rewrap(dual_map(c(K::AOxInv, {dual(args[0]), dual(args[1]), dual(args[2])})));
        case K::ULOx: return unit_left(args[0]);
        case K::UROx: return unit_right(args[0]);
        case K::ULOp: return rewrap(dual_map(c(K::ULOxInv, {dual(args[0])})));
        case K::UROp: return rewrap(dual_map(c(K::UROxInv, {dual(args[0])})));
        case K::COx: return sym(args[0], args[1]);
        case K::COp: return rewrap(dual_map(sym(dual(args[1]), dual(args[0]))));
        case K::DL: return dist_left(args[0], args[1], args[2]);
        case K::DR: {
            const Obj& a = args[0];
            const Obj& b = args[1];
            const Obj& cc = args[2];
            return rewrap(seq({c(K::COx, {par(a, b), cc}), tensor_map(id(cc), c(K::COp, {a, b})),
                               c(K::DL, {cc, b, a}), par_map(c(K::COx, {cc, b}), id(a)),
                               c(K::COp, {tensor(b, cc), a})}));
        }
        case K::Eps: return counit(args[0]);
        case K::Eta: return rewrap(dual_map(counit(args[0])));
        case K::ChiOx: return rewrap(sym(conj(args[0]), conj(args[1])));
        case K::ChiOp: return rewrap(c(K::COp, {conj(args[0]), conj(args[1])}));
        // conjugation and dagger commute with the constructions on the nose
        case K::M:
        case K::Chi0Top:
        case K::Chi0Bot:
        case K::ConjEps:
        case K::LamOx:
        case K::LamOp:
        case K::LamTop:
        case K::LamBot:
        case K::Iota: {
            auto [dom, cod] = const_endpoints(*this, k, args);
            if (!obj_equal(dom, cod)) throw ModelDefect("chu: identity constant with distinct endpoints");
            const auto& x = obj_of(dom);
            return make(dom, cod, DenseMatrix::identity(x.na), DenseMatrix::identity(x.nb));
        }
        default: return Model::supply(k, args);
    }
}

DenseMatrix ChuModel::hom_basis(const Obj& x, const Obj& y) const {
    // unknowns [vec f; vec g]; rows (a, b'): sum_a' f[a'][a] psi'[a'][b'] - sum_b psi[a][b] g[b][b']
    const auto& X = obj_of(x);
    const auto& Y = obj_of(y);
    std::size_t nf = Y.na * X.na;
    std::size_t n = nf + X.nb * Y.nb;
    DenseMatrix m(X.na * Y.nb, n);
    for (std::size_t a = 0; a < X.na; ++a)
        for (std::size_t b2 = 0; b2 < Y.nb; ++b2) {
            std::size_t row = a * Y.nb + b2;
            for (std::size_t a2 = 0; a2 < Y.na; ++a2) m.at(row, a2 * X.na + a) += Y.psi.at(a2, b2);
            for (std::size_t b = 0; b < X.nb; ++b) m.at(row, nf + b * Y.nb + b2) -= X.psi.at(a, b);
        }
    return mat_hconcat(mat_nullspace(m), n);
}

Mor ChuModel::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    const auto& X = obj_of(dom);
    const auto& Y = obj_of(cod);
    DenseMatrix hb = hom_basis(dom, cod);
    std::uniform_int_distribution<int> re(-2, 2);
    std::uniform_int_distribution<int> im(-1, 1);
    std::vector<GR> coef(hb.cols());
    for (auto& c : coef) c = GR(Rational(re(rng)), Rational(im(rng)));
    auto v = column(mat_mul(hb, DenseMatrix::column(coef)), 0);
    std::size_t nf = Y.na * X.na;
    DenseMatrix f(Y.na, X.na);
    DenseMatrix g(X.nb, Y.nb);
    for (std::size_t r = 0; r < Y.na; ++r)
        for (std::size_t c = 0; c < X.na; ++c) f.at(r, c) = v[r * X.na + c];
    for (std::size_t r = 0; r < X.nb; ++r)
        for (std::size_t c = 0; c < Y.nb; ++c) g.at(r, c) = v[nf + r * Y.nb + c];
    return make(dom, cod, std::move(f), std::move(g));
}

nlohmann::json ChuModel::dump(const Mor& f) const {
    const auto& m = map_of(f);
    return {{"f", mat_to_json(m.f)}, {"g", mat_to_json(m.g)}};
}

std::string chu_form_problem(const DenseMatrix& e) {
    if (!e.is_square() || e.rows() == 0) return "form is not a nonempty square matrix";
    if (!mat_inverse(e)) return "form is singular";
    if (mat_conj_transpose(e) != e) return "form is not Hermitian";
    return "";
}

ChuPreunitary chu_preunitary_from_form(const ChuModel& M, const DenseMatrix& e) {
    if (!e.is_square() || e.rows() == 0) throw std::invalid_argument("chu: form must be square");
    if (!mat_inverse(e)) throw std::invalid_argument("chu: form must be invertible");
    Obj x = ChuModel::object(DenseMatrix::identity(e.rows()));
    return {x, M.make(x, M.dag(x), e, mat_transpose(e))};
}

}  // namespace muc
