#include "muc/derived.hpp"

namespace muc {

using K = ConstKind;

Mor mixor_other_path(const Model& M, const Obj& a, const Obj& b) {
    return M.seq({M.tensor_map(M.c(K::UROpInv, {a}), M.id(b)), M.c(K::DR, {a, M.bot(), b}),
                  M.par_map(M.id(a), M.tensor_map(M.c(K::M), M.id(b))), M.par_map(M.id(a), M.c(K::ULOx, {b}))});
}

Mor mixor_from_mix(const Model& M, const Obj& a, const Obj& b) {
    Mor first = M.seq({M.tensor_map(M.id(a), M.c(K::ULOpInv, {b})), M.tensor_map(M.id(a), M.par_map(M.c(K::M), M.id(b))),
                       M.c(K::DL, {a, M.top(), b}), M.par_map(M.c(K::UROx, {a}), M.id(b))});
    Mor second = mixor_other_path(M, a, b);
    if (!M.equal(first, second)) {
        throw ModelDefect(M.name() + ": the two sides of the mix square differ at " + a->describe() + ", " +
                          b->describe());
    }
    return first;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// 0 invertible, 1 not invertible, 2 cannot tell
int two_sided(const Model& M, const Mor& f, std::string& why) {
    std::optional<Mor> inv;
    try {
        inv = M.inverse(f);
    } catch (const FragmentError& e) {
        why = e.what();
        return 2;
    }
    if (!inv) return 1;
    if (!M.equal(M.compose(f, *inv), M.id(f->dom)) || !M.equal(M.compose(*inv, f), M.id(f->cod))) {
        why = "claimed inverse is not two-sided";
        return 1;
    }
    return 0;
}

}  // namespace

CoreReport core_probe(const Model& M, const Obj& a, const std::vector<Obj>& probes) {
    CoreReport r;
    for (const auto& x : probes) {
        for (int side = 0; side < 2; ++side) {
            const Obj& l = side == 0 ? a : x;
            const Obj& rr = side == 0 ? x : a;
            std::string label = "mx[" + l->describe() + "," + rr->describe() + "]";
            Mor mx;
            try {
                mx = M.c(K::Mx, {l, rr});
            } catch (const FragmentError& e) {
                r.notes.push_back(label + ": " + e.what());
                if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
                continue;
            }
            std::string why;
            int s = two_sided(M, mx, why);
            if (s == 1) {
                r.verdict = Verdict::Fail;
                r.notes.push_back(label + " not invertible" + (why.empty() ? "" : ": " + why));
            } else if (s == 2) {
                if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
                r.notes.push_back(label + ": " + why);
            }
        }
    }
    return r;
}

Mor derived_ddagger(const Model& M, const Mor& f) {
    const Obj& a = f->dom;
    const Obj& b = f->cod;
    if (!M.is_unitary(a) || !M.is_unitary(b)) {
        throw CapabilityError("ddag needs unitary endpoints, got " + a->describe() + " -> " + b->describe());
    }
    return M.seq({M.c(K::Phi, {b}), M.dag_map(f), M.c(K::PhiInv, {a})});
}

bool unitary_map_check(const Model& M, const Mor& f) {
    if (!M.inverse(f)) throw NotInvertible("unitary_map_check: morphism is not invertible");
    return M.equal(M.c(K::Phi, {f->dom}), M.seq({f, M.c(K::Phi, {f->cod}), M.dag_map(f)}));
}

Mor omega_map(const Model& M, const Obj& a) { return M.c(K::Omega, {a}); }
Mor sigma_map(const Model& M, const Obj& a) { return M.c(K::Sigma, {a}); }
Mor dualizor_map(const Model& M, const Obj& a) { return M.c(K::Dualizor, {a}); }

Mor dual_laxor_ox(const Model& M, const Obj& a, const Obj& b) {
    Obj da = M.dual(a);
    Obj db = M.dual(b);
    Obj ab = M.par(a, b);
    Mor eps_x = M.seq({M.c(K::AOx, {ab, db, da}), M.tensor_map(M.c(K::DR, {a, b, db}), M.id(da)),
                       M.tensor_map(M.par_map(M.id(a), M.c(K::Eps, {b})), M.id(da)),
                       M.tensor_map(M.c(K::UROp, {a}), M.id(da)), M.c(K::Eps, {a})});
    return transfer_left_dual(M, M.tensor(db, da), M.dual(ab), ab, M.c(K::Eta, {ab}), eps_x);
}

Mor dual_colaxor_op_inv(const Model& M, const Obj& a, const Obj& b) {
    Obj da = M.dual(a);
    Obj db = M.dual(b);
    Obj ab = M.tensor(a, b);
    Obj x = M.par(db, da);
    Mor eps_x = M.seq({M.c(K::AOxInv, {a, b, x}), M.tensor_map(M.id(a), M.c(K::DL, {b, db, da})),
                       M.tensor_map(M.id(a), M.par_map(M.c(K::Eps, {b}), M.id(da))),
                       M.tensor_map(M.id(a), M.c(K::ULOp, {da})), M.c(K::Eps, {a})});
    return transfer_left_dual(M, x, M.dual(ab), ab, M.c(K::Eta, {ab}), eps_x);
}

Mor dual_laxor_top(const Model& M) {
    return transfer_left_dual(M, M.top(), M.dual(M.bot()), M.bot(), M.c(K::Eta, {M.bot()}), M.c(K::UROx, {M.bot()}));
}

Mor dual_colaxor_bot_inv(const Model& M) {
    return transfer_left_dual(M, M.bot(), M.dual(M.top()), M.top(), M.c(K::Eta, {M.top()}), M.c(K::ULOx, {M.bot()}));
}

Mor DelegatingModel::supply(ConstKind k, const std::vector<Obj>& args) const {
    if (overrides(k)) {
        const auto& info = const_info(k);
        require(info.needs, info.name);
        return own_supply(k, args);
    }
    if (is_generic_kind(k)) return generic_supply(k, args);
    return base_.supply(k, args);
}

DaggerFromConjugation::DaggerFromConjugation(const Model& base) : DelegatingModel(base) {
    Caps need;
    need.conjugation = need.duals = need.symmetric = true;
    std::string miss = base.caps().missing(need);
    if (!miss.empty()) throw CapabilityError("dagger_from_conjugation needs " + miss);
}

Caps DaggerFromConjugation::caps() const {
    Caps c = base_.caps();
    c.dagger = true;
    return c;
}

Obj DaggerFromConjugation::dag(const Obj& a) const { return conj(dual(a)); }

Mor DaggerFromConjugation::dag_map(const Mor& f) const { return conj_map(dual_map(f)); }

bool DaggerFromConjugation::overrides(ConstKind k) const {
    return k == K::LamOx || k == K::LamOp || k == K::LamTop || k == K::LamBot || k == K::Iota;
}

Mor DaggerFromConjugation::own_supply(ConstKind k, const std::vector<Obj>& args) const {
    switch (k) {
        case K::LamOx:
            return compose(c(K::ChiOx, {dual(args[0]), dual(args[1])}), conj_map(dual_laxor_ox(*this, args[0], args[1])));
        case K::LamOp:
            return compose(c(K::ChiOpInv, {dual(args[1]), dual(args[0])}),
                           conj_map(dual_colaxor_op_inv(*this, args[0], args[1])));
        case K::LamTop: return compose(c(K::Chi0Top), conj_map(dual_laxor_top(*this)));
        case K::LamBot: return compose(c(K::Chi0Bot), conj_map(dual_colaxor_bot_inv(*this)));
        case K::Iota: {
            Obj da = dual(args[0]);
            return seq({c(K::Dualizor, {args[0]}), c(K::ConjEpsInv, {dual(da)}), conj_map(c(K::SigmaInv, {da}))});
        }
        default: return DelegatingModel::own_supply(k, args);
    }
}

ConjugationFromDagger::ConjugationFromDagger(const Model& base) : DelegatingModel(base) {
    Caps need;
    need.dagger = need.duals = need.symmetric = true;
    std::string miss = base.caps().missing(need);
    if (!miss.empty()) throw CapabilityError("conjugation_from_dagger needs " + miss);
}

Caps ConjugationFromDagger::caps() const {
    Caps c = base_.caps();
    c.conjugation = true;
    return c;
}

Obj ConjugationFromDagger::conj(const Obj& a) const { return dual(dag(a)); }

Mor ConjugationFromDagger::conj_map(const Mor& f) const { return dual_map(dag_map(f)); }

bool ConjugationFromDagger::overrides(ConstKind k) const {
    return k == K::ChiOx || k == K::ChiOp || k == K::Chi0Top || k == K::Chi0Bot || k == K::ConjEps;
}

Mor ConjugationFromDagger::own_supply(ConstKind k, const std::vector<Obj>& args) const {
    switch (k) {
        case K::ChiOx:
            return compose(dual_laxor_ox(*this, dag(args[1]), dag(args[0])),
                           dual_map(c(K::LamOpInv, {args[1], args[0]})));
        case K::ChiOp:
            return compose(dual_map(c(K::LamOx, {args[0], args[1]})),
                           invert(dual_colaxor_op_inv(*this, dag(args[0]), dag(args[1]))));
        case K::Chi0Top: return compose(dual_laxor_top(*this), dual_map(c(K::LamBotInv)));
        case K::Chi0Bot: return compose(dual_colaxor_bot_inv(*this), dual_map(c(K::LamTopInv)));
        case K::ConjEps: {
            Obj da = dag(args[0]);
            return seq({c(K::Omega, {dual(da)}), dag_map(c(K::Dualizor, {da})), c(K::IotaInv, {args[0]})});
        }
        default: return DelegatingModel::own_supply(k, args);
    }
}

}  // namespace muc
