#include <set>
#include <stdexcept>

#include "muc/laws.hpp"

namespace muc {

namespace {

using S = std::string;

// ---- syntax builders ----------------------------------------------------

S po(const S& o) { return o.find(' ') == S::npos ? o : "(" + o + ")"; }
S ox(const S& a, const S& b) { return po(a) + " (x) " + po(b); }
S op(const S& a, const S& b) { return po(a) + " (+) " + po(b); }
S dg(const S& a) { return "dag(" + a + ")"; }
S br(const S& a) { return "bar(" + a + ")"; }
S du(const S& a) {
    bool simple = a.find(' ') == S::npos && a.rfind("*^", 0) != 0;
    return (simple ? a : "(" + a + ")") + "^*";
}
S ld(const S& a) { return "*^" + (a.find(' ') == S::npos ? a : "(" + a + ")"); }

S pm(const S& f) { return f.find(' ') == S::npos ? f : "(" + f + ")"; }
S idm(const S& a) { return "id[" + a + "]"; }
S k0(const S& n) { return n + "[]"; }
S k(const S& n, std::initializer_list<S> args) {
    S s = n + "[";
    bool first = true;
    for (const auto& a : args) {
        if (!first) s += ",";
        s += a;
        first = false;
    }
    return s + "]";
}
S sq(std::initializer_list<S> fs) {
    S s;
    for (const auto& f : fs) s += (s.empty() ? "" : " ; ") + f;
    return s;
}
S mt(const S& f, const S& g) { return pm(f) + " (x) " + pm(g); }
S mp(const S& f, const S& g) { return pm(f) + " (+) " + pm(g); }
S mdag(const S& f) { return "dag(" + f + ")"; }
S mbar(const S& f) { return "bar(" + f + ")"; }

// X -> Y between two P-duals X, Y of Z, given eta_Y : Top -> Y (+) Z and
// eps_X : Z (x) X -> Bot.
S trans_l(const S& X, const S& Y, const S& Z, const S& eta_y, const S& eps_x) {
    return sq({k("uL_ox_inv", {X}), mt(eta_y, idm(X)), k("dR", {Y, Z, X}), mp(idm(Y), eps_x), k("uR_op", {Y})});
}

// X -> Y between two Q-duals X, Y of P, given eta_Y : Top -> P (+) Y and
// eps_X : X (x) P -> Bot.
S trans_r(const S& X, const S& Y, const S& P, const S& eta_y, const S& eps_x) {
    return sq({k("uR_ox_inv", {X}), mt(idm(X), eta_y), k("dL", {X, P, Y}), mp(eps_x, idm(Y)), k("uL_op", {Y})});
}

// f : X -> Y gives Y^* -> X^*
S dualmap(const S& f, const S& X, const S& Y) {
    return trans_l(du(Y), du(X), X, k("eta", {X}), sq({mt(f, idm(du(Y))), k("eps", {Y})}));
}

// f : X -> Y gives *^Y -> *^X
S ldualmap(const S& f, const S& X, const S& Y) {
    return trans_r(ld(Y), ld(X), X, k("reta", {X}), sq({mt(idm(ld(Y)), f), k("reps", {Y})}));
}

// ---- capability inference ----------------------------------------------

void add(Caps& c, const Caps& d) {
    c.symmetric |= d.symmetric;
    c.mix |= d.mix;
    c.isomix |= d.isomix;
    c.compact |= d.compact;
    c.duals |= d.duals;
    c.cyclor |= d.cyclor;
    c.dagger |= d.dagger;
    c.conjugation |= d.conjugation;
    c.unitary |= d.unitary;
}

void obj_caps(const ObjTerm& t, Caps& c) {
    switch (t.op) {
        case ObjOp::Dag: c.dagger = true; break;
        case ObjOp::DualL:
        case ObjOp::DualR: c.duals = true; break;
        case ObjOp::Conj: c.conjugation = true; break;
        default: break;
    }
    if (t.a) obj_caps(*t.a, c);
    if (t.b) obj_caps(*t.b, c);
}

void mor_caps(const MorTerm& t, Caps& c) {
    switch (t.op) {
        case MorOp::Dag: c.dagger = true; break;
        case MorOp::Conj: c.conjugation = true; break;
        case MorOp::DDag:
            c.dagger = true;
            c.unitary = true;
            break;
        case MorOp::Const: add(c, const_info(t.kind).needs); break;
        default: break;
    }
    if (t.obj) obj_caps(*t.obj, c);
    for (const auto& a : t.args) obj_caps(*a, c);
    if (t.a) mor_caps(*t.a, c);
    if (t.b) mor_caps(*t.b, c);
}

// ---- law construction ---------------------------------------------------

struct Builder {
    std::vector<LawSpec> laws;

    void law(const S& id, std::vector<S> objs, const S& lhs, const S& rhs, std::vector<MorVar> mors = {},
             const S& package = "") {
        LawSpec l;
        l.id = id;
        l.obj_vars = std::move(objs);
        l.mor_vars = std::move(mors);
        l.package = package;
        try {
            l.lhs = parse_mor(lhs);
            l.rhs = parse_mor(rhs);
        } catch (const std::exception& e) {
            throw std::logic_error("catalog law " + id + ": " + e.what());
        }
        mor_caps(*l.lhs, l.caps);
        mor_caps(*l.rhs, l.caps);
        TypeEnv env;
        env.atoms = std::set<std::string>(l.obj_vars.begin(), l.obj_vars.end());
        for (const auto& v : l.mor_vars) {
            ObjPtr d = parse_obj(v.dom);
            ObjPtr c = parse_obj(v.cod);
            obj_caps(*d, l.caps);
            obj_caps(*c, l.caps);
            if (v.unitary) {
                l.caps.dagger = true;
                l.caps.unitary = true;
            }
            env.named[v.name] = {d, c};
        }
        TypeJudgment jl, jr;
        try {
            jl = typecheck_mor(l.lhs, env);
            jr = typecheck_mor(l.rhs, env);
        } catch (const std::exception& e) {
            throw std::logic_error("catalog law " + id + ": " + e.what());
        }
        if (!obj_equal(*jl.dom, *jr.dom) || !obj_equal(*jl.cod, *jr.cod)) {
            throw std::logic_error("catalog law " + id + ": sides typed differently: " + obj_to_string(*jl.dom) +
                                   " -> " + obj_to_string(*jl.cod) + " vs " + obj_to_string(*jr.dom) + " -> " +
                                   obj_to_string(*jr.cod));
        }
        laws.push_back(std::move(l));
    }
};

MorVar mv(const S& n, const S& d, const S& c) { return MorVar{n, d, c, false}; }

void monoidal(Builder& b) {
    for (auto [tag, t, a, ul, ur, c, unit] :
         {std::tuple{"ox", " (x) ", "a_ox", "uL_ox", "uR_ox", "c_ox", "Top"},
          std::tuple{"op", " (+) ", "a_op", "uL_op", "uR_op", "c_op", "Bot"}}) {
        auto T = [&](const S& x, const S& y) { return po(x) + t + po(y); };
        auto MT = [&](const S& f, const S& g) { return pm(f) + t + pm(g); };
        S tg = tag;
        b.law("MON.pentagon-" + tg, {"A", "B", "C", "D"},
              sq({k(a, {"A", "B", T("C", "D")}), k(a, {T("A", "B"), "C", "D"})}),
              sq({MT(idm("A"), k(a, {"B", "C", "D"})), k(a, {"A", T("B", "C"), "D"}),
                  MT(k(a, {"A", "B", "C"}), idm("D"))}));
        b.law("MON.triangle-" + tg, {"A", "B"}, sq({k(a, {"A", unit, "B"}), MT(k(ur, {"A"}), idm("B"))}),
              MT(idm("A"), k(ul, {"B"})));
        b.law("MON.hexagon-" + tg, {"A", "B", "C"},
              sq({k(a, {"A", "B", "C"}), k(c, {T("A", "B"), "C"}), k(a, {"C", "A", "B"})}),
              sq({MT(idm("A"), k(c, {"B", "C"})), k(a, {"A", "C", "B"}), MT(k(c, {"A", "C"}), idm("B"))}));
        b.law("MON.symmetry-" + tg, {"A", "B"}, sq({k(c, {"A", "B"}), k(c, {"B", "A"})}), idm(T("A", "B")));
        b.law("MON.unit-swap-" + tg, {"A"}, sq({k(c, {"A", unit}), k(ul, {"A"})}), k(ur, {"A"}));
    }
}

void ldc(Builder& b) {
    b.law("LDC.unit-dL", {"A", "B"}, sq({k("dL", {"Top", "A", "B"}), mp(k("uL_ox", {"A"}), idm("B"))}),
          k("uL_ox", {op("A", "B")}));
    b.law("LDC.unit-dR", {"A", "B"}, sq({k("dR", {"A", "B", "Top"}), mp(idm("A"), k("uR_ox", {"B"}))}),
          k("uR_ox", {op("A", "B")}));
    b.law("LDC.counit-dL", {"A", "B"}, sq({k("dL", {"A", "B", "Bot"}), k("uR_op", {ox("A", "B")})}),
          mt(idm("A"), k("uR_op", {"B"})));
    b.law("LDC.counit-dR", {"A", "B"}, sq({k("dR", {"Bot", "A", "B"}), k("uL_op", {ox("A", "B")})}),
          mt(k("uL_op", {"A"}), idm("B")));
    b.law("LDC.assoc-dL", {"A", "B", "C", "D"},
          sq({k("a_ox", {"A", "B", op("C", "D")}), k("dL", {ox("A", "B"), "C", "D"})}),
          sq({mt(idm("A"), k("dL", {"B", "C", "D"})), k("dL", {"A", ox("B", "C"), "D"}),
              mp(k("a_ox", {"A", "B", "C"}), idm("D"))}));
    b.law("LDC.coassoc-dL", {"A", "B", "C", "D"},
          sq({mt(idm("A"), k("a_op", {"B", "C", "D"})), k("dL", {"A", op("B", "C"), "D"}),
              mp(k("dL", {"A", "B", "C"}), idm("D"))}),
          sq({k("dL", {"A", "B", op("C", "D")}), k("a_op", {ox("A", "B"), "C", "D"})}));
    b.law("LDC.symmetric-dR", {"A", "B", "C"}, k("dR", {"A", "B", "C"}),
          sq({k("c_ox", {op("A", "B"), "C"}), mt(idm("C"), k("c_op", {"A", "B"})), k("dL", {"C", "B", "A"}),
              mp(k("c_ox", {"C", "B"}), idm("A")), k("c_op", {ox("B", "C"), "A"})}));
}

void mix(Builder& b) {
    b.law("MIX.coh", {"A", "B"}, k("mx", {"A", "B"}),
          sq({mt(k("uR_op_inv", {"A"}), idm("B")), k("dR", {"A", "Bot", "B"}), mp(idm("A"), mt(k0("m"), idm("B"))),
              mp(idm("A"), k("uL_ox", {"B"}))}));
    b.law("MIX.natural", {"A", "B", "C", "D"}, sq({mt("f", "g"), k("mx", {"B", "D"})}),
          sq({k("mx", {"A", "C"}), mp("f", "g")}), {mv("f", "A", "B"), mv("g", "C", "D")});
}

void duals(Builder& b) {
    b.law("DUAL.snake-L", {"A"},
          sq({k("uR_ox_inv", {"A"}), mt(idm("A"), k("eta", {"A"})), k("dL", {"A", du("A"), "A"}),
              mp(k("eps", {"A"}), idm("A")), k("uL_op", {"A"})}),
          idm("A"));
    b.law("DUAL.snake-R", {"A"},
          sq({k("uL_ox_inv", {du("A")}), mt(k("eta", {"A"}), idm(du("A"))), k("dR", {du("A"), "A", du("A")}),
              mp(idm(du("A")), k("eps", {"A"})), k("uR_op", {du("A")})}),
          idm(du("A")));
    b.law("DUAL.rsnake-L", {"A"},
          sq({k("uR_ox_inv", {ld("A")}), mt(idm(ld("A")), k("reta", {"A"})), k("dL", {ld("A"), "A", ld("A")}),
              mp(k("reps", {"A"}), idm(ld("A"))), k("uL_op", {ld("A")})}),
          idm(ld("A")));
    b.law("DUAL.rsnake-R", {"A"},
          sq({k("uL_ox_inv", {"A"}), mt(k("reta", {"A"}), idm("A")), k("dR", {"A", ld("A"), "A"}),
              mp(idm("A"), k("reps", {"A"})), k("uR_op", {"A"})}),
          idm("A"));
    b.law("DUAL.functor-id", {"A"}, dualmap(idm("A"), "A", "A"), idm(du("A")));
    b.law("DUAL.functor-seq", {"A", "B", "C"}, dualmap(sq({"f", "g"}), "A", "C"),
          sq({pm(dualmap("g", "B", "C")), pm(dualmap("f", "A", "B"))}), {mv("f", "A", "B"), mv("g", "B", "C")});
}

void cyclor(Builder& b) {
    // canonical Bot^* -> Top and *^Bot -> Top
    b.law("CYC.C1", {},
          sq({k("psi", {"Bot"}), pm(trans_r(ld("Bot"), "Top", "Bot", k("uL_op_inv", {"Top"}), k("reps", {"Bot"})))}),
          trans_l(du("Bot"), "Top", "Bot", k("uR_op_inv", {"Top"}), k("eps", {"Bot"})));
    S can1 = trans_l("A", du(ld("A")), ld("A"), k("eta", {ld("A")}), k("reps", {"A"}));
    S can2 = trans_r("A", ld(du("A")), du("A"), k("reta", {du("A")}), k("eps", {"A"}));
    b.law("CYC.C2", {"A"},
          sq({pm(can1), pm(dualmap(k("psi", {"A"}), du("A"), ld("A"))), k("psi", {du("A")})}), can2);
    b.law("CYC.C3", {},
          sq({k("psi", {"Top"}), pm(trans_r(ld("Top"), "Bot", "Top", k("uR_op_inv", {"Top"}), k("reps", {"Top"})))}),
          trans_l(du("Top"), "Bot", "Top", k("uL_op_inv", {"Top"}), k("eps", {"Top"})));
    {
        S AB = ox("A", "B");
        S X = op(du("B"), du("A"));
        S eps_x = sq({k("a_ox_inv", {"A", "B", X}), mt(idm("A"), k("dL", {"B", du("B"), du("A")})),
                      mt(idm("A"), mp(k("eps", {"B"}), idm(du("A")))), mt(idm("A"), k("uL_op", {du("A")})),
                      k("eps", {"A"})});
        S colax = trans_l(X, du(AB), AB, k("eta", {AB}), eps_x);
        S Xl = op(ld("B"), ld("A"));
        S eps_l = sq({k("a_ox", {Xl, "A", "B"}), mt(k("dR", {ld("B"), ld("A"), "A"}), idm("B")),
                      mt(mp(idm(ld("B")), k("reps", {"A"})), idm("B")), mt(k("uR_op", {ld("B")}), idm("B")),
                      k("reps", {"B"})});
        S colax_l = trans_r(Xl, ld(AB), AB, k("reta", {AB}), eps_l);
        b.law("CYC.C4", {"A", "B"}, sq({pm(colax), k("psi", {AB})}),
              sq({mp(k("psi", {"B"}), k("psi", {"A"})), pm(colax_l)}));
    }
    {
        S AB = op("A", "B");
        S X = ox(du("B"), du("A"));
        S eps_x = sq({k("a_ox", {AB, du("B"), du("A")}), mt(k("dR", {"A", "B", du("B")}), idm(du("A"))),
                      mt(mp(idm("A"), k("eps", {"B"})), idm(du("A"))), mt(k("uR_op", {"A"}), idm(du("A"))),
                      k("eps", {"A"})});
        S lax = trans_l(X, du(AB), AB, k("eta", {AB}), eps_x);
        S Xl = ox(ld("B"), ld("A"));
        S eps_l = sq({k("a_ox_inv", {ld("B"), ld("A"), AB}), mt(idm(ld("B")), k("dL", {ld("A"), "A", "B"})),
                      mt(idm(ld("B")), mp(k("reps", {"A"}), idm("B"))), mt(idm(ld("B")), k("uL_op", {"B"})),
                      k("reps", {"B"})});
        S lax_l = trans_r(Xl, ld(AB), AB, k("reta", {AB}), eps_l);
        b.law("CYC.C5", {"A", "B"}, sq({pm(lax), k("psi", {AB})}),
              sq({mt(k("psi", {"B"}), k("psi", {"A"})), pm(lax_l)}));
    }
}

void dagger_ldc(Builder& b) {
    S dA = dg("A"), dB = dg("B"), dC = dg("C");
    b.law("DLDC.1a", {"A", "B", "C"},
          sq({k("a_ox", {dA, dB, dC}), mt(k("lam_ox", {"A", "B"}), idm(dC)), k("lam_ox", {op("A", "B"), "C"})}),
          sq({mt(idm(dA), k("lam_ox", {"B", "C"})), k("lam_ox", {"A", op("B", "C")}),
              mdag(k("a_op_inv", {"A", "B", "C"}))}));
    b.law("DLDC.1b", {"A", "B", "C"},
          sq({k("a_op", {dA, dB, dC}), mp(k("lam_op", {"A", "B"}), idm(dC)), k("lam_op", {ox("A", "B"), "C"})}),
          sq({mp(idm(dA), k("lam_op", {"B", "C"})), k("lam_op", {"A", ox("B", "C")}),
              mdag(k("a_ox_inv", {"A", "B", "C"}))}));
    b.law("DLDC.2a", {"A"}, sq({mt(k0("lam_top"), idm(dA)), k("lam_ox", {"Bot", "A"})}),
          sq({k("uL_ox", {dA}), mdag(k("uL_op", {"A"}))}));
    b.law("DLDC.2b", {"A"}, sq({mp(k0("lam_bot"), idm(dA)), k("lam_op", {"Top", "A"})}),
          sq({k("uL_op", {dA}), mdag(k("uL_ox", {"A"}))}));
    b.law("DLDC.2c", {"A"}, sq({mt(idm(dA), k0("lam_top")), k("lam_ox", {"A", "Bot"})}),
          sq({k("uR_ox", {dA}), mdag(k("uR_op", {"A"}))}));
    b.law("DLDC.2d", {"A"}, sq({mp(idm(dA), k0("lam_bot")), k("lam_op", {"A", "Top"})}),
          sq({k("uR_op", {dA}), mdag(k("uR_ox", {"A"}))}));
    b.law("DLDC.3a", {"A", "B", "C"},
          sq({k("dL", {dA, dB, dC}), mp(k("lam_ox", {"A", "B"}), idm(dC)), k("lam_op", {op("A", "B"), "C"})}),
          sq({mt(idm(dA), k("lam_op", {"B", "C"})), k("lam_ox", {"A", ox("B", "C")}),
              mdag(k("dR", {"A", "B", "C"}))}));
    b.law("DLDC.3b", {"A", "B", "C"},
          sq({k("dR", {dA, dB, dC}), mp(idm(dA), k("lam_ox", {"B", "C"})), k("lam_op", {"A", op("B", "C")})}),
          sq({mt(k("lam_op", {"A", "B"}), idm(dC)), k("lam_ox", {ox("A", "B"), "C"}),
              mdag(k("dL", {"A", "B", "C"}))}));
    b.law("DLDC.4a", {"A", "B"}, sq({k("iota", {op("A", "B")}), mdag(k("lam_ox", {"A", "B"}))}),
          sq({mp(k("iota", {"A"}), k("iota", {"B"})), k("lam_op", {dA, dB})}));
    b.law("DLDC.4b", {"A", "B"}, sq({k("iota", {ox("A", "B")}), mdag(k("lam_op", {"A", "B"}))}),
          sq({mt(k("iota", {"A"}), k("iota", {"B"})), k("lam_ox", {dA, dB})}));
    b.law("DLDC.5a", {}, sq({k("iota", {"Bot"}), mdag(k0("lam_top"))}), k0("lam_bot"));
    b.law("DLDC.5b", {}, sq({k("iota", {"Top"}), mdag(k0("lam_bot"))}), k0("lam_top"));
    b.law("DLDC.6", {"A"}, k("iota", {dA}), mdag(k("iota_inv", {"A"})));
    b.law("DLDC.7a", {"A", "B"}, sq({k("lam_ox", {"A", "B"}), mdag(k("c_op", {"B", "A"}))}),
          sq({k("c_ox", {dA, dB}), k("lam_ox", {"B", "A"})}));
    b.law("DLDC.7b", {"A", "B"}, sq({k("lam_op", {"A", "B"}), mdag(k("c_ox", {"B", "A"}))}),
          sq({k("c_op", {dA, dB}), k("lam_op", {"B", "A"})}));
    b.law("DLDC.mix", {}, sq({k0("m"), k0("lam_top")}), sq({k0("lam_bot"), mdag(k0("m"))}));
    b.law("DLDC.mxsq", {"A", "B"}, sq({k("mx", {dA, dB}), k("lam_op", {"A", "B"})}),
          sq({k("lam_ox", {"A", "B"}), mdag(k("mx", {"A", "B"}))}));
}

void conjugation(Builder& b) {
    S bA = br("A"), bB = br("B"), bC = br("C");
    b.law("CONJ.CF1a", {"A", "B", "C"},
          sq({mt(k("chi_ox", {"A", "B"}), idm(bC)), k("chi_ox", {ox("B", "A"), "C"}),
              mbar(k("a_ox", {"C", "B", "A"}))}),
          sq({k("a_ox_inv", {bA, bB, bC}), mt(idm(bA), k("chi_ox", {"B", "C"})), k("chi_ox", {"A", ox("C", "B")})}));
    b.law("CONJ.CF1b", {"A", "B", "C"},
          sq({mp(k("chi_op_inv", {"B", "A"}), idm(bC)), k("chi_op_inv", {"C", op("B", "A")}),
              mbar(k("a_op", {"C", "B", "A"}))}),
          sq({k("a_op_inv", {bA, bB, bC}), mp(idm(bA), k("chi_op_inv", {"C", "B"})),
              k("chi_op_inv", {op("C", "B"), "A"})}));
    b.law("CONJ.CF2a", {"A", "B"},
          sq({k("chi_ox", {bA, bB}), mbar(k("chi_ox", {"B", "A"})), k("conj_eps", {ox("A", "B")})}),
          mt(k("conj_eps", {"A"}), k("conj_eps", {"B"})));
    b.law("CONJ.CF2b", {"A", "B"},
          sq({k("chi_op_inv", {bB, bA}), mbar(k("chi_op_inv", {"A", "B"})), k("conj_eps", {op("A", "B")})}),
          mp(k("conj_eps", {"A"}), k("conj_eps", {"B"})));
    b.law("CONJ.CF3a", {"A", "B"}, sq({k("chi_ox", {"A", "B"}), mbar(k("c_ox", {"B", "A"}))}),
          sq({k("c_ox", {bA, bB}), k("chi_ox", {"B", "A"})}));
    b.law("CONJ.CF3b", {"A", "B"}, sq({k("chi_op_inv", {"B", "A"}), mbar(k("c_op", {"B", "A"}))}),
          sq({k("c_op", {bA, bB}), k("chi_op_inv", {"A", "B"})}));
    b.law("CONJ.CF4a", {"A"}, sq({k("uL_ox", {bA}), mbar(k("uR_ox_inv", {"A"}))}),
          sq({mt(k0("chi0_top"), idm(bA)), k("chi_ox", {"Top", "A"})}));
    b.law("CONJ.CF4b", {"A"}, sq({k("uL_op", {bA}), mbar(k("uR_op_inv", {"A"}))}),
          sq({mp(k0("chi0_bot"), idm(bA)), k("chi_op_inv", {"A", "Bot"})}));
    b.law("CONJ.CF5a", {"A"}, sq({k("uR_ox", {bA}), mbar(k("uL_ox_inv", {"A"}))}),
          sq({mt(idm(bA), k0("chi0_top")), k("chi_ox", {"A", "Top"})}));
    b.law("CONJ.CF5b", {"A"}, sq({k("uR_op", {bA}), mbar(k("uL_op_inv", {"A"}))}),
          sq({mp(idm(bA), k0("chi0_bot")), k("chi_op_inv", {"Bot", "A"})}));
    b.law("CONJ.CF6a", {}, sq({k0("chi0_top"), mbar(k0("chi0_top"))}), k("conj_eps_inv", {"Top"}));
    b.law("CONJ.CF6b", {}, sq({k0("chi0_bot"), mbar(k0("chi0_bot"))}), k("conj_eps_inv", {"Bot"}));
    b.law("CONJ.CF7", {"A", "B", "C"},
          sq({mt(k("chi_op", {"B", "C"}), idm(bA)), k("dR", {bC, bB, bA}), mp(idm(bC), k("chi_ox", {"B", "A"}))}),
          sq({k("chi_ox", {op("B", "C"), "A"}), mbar(k("dL", {"A", "B", "C"})), k("chi_op", {ox("A", "B"), "C"})}));
    b.law("CONJ.CF8", {"A", "B", "C"},
          sq({mt(idm(bA), k("chi_op", {"C", "B"})), k("dL", {bA, bB, bC}), mp(k("chi_ox", {"A", "B"}), idm(bC))}),
          sq({k("chi_ox", {"A", op("C", "B")}), mbar(k("dR", {"C", "B", "A"})), k("chi_op", {"C", ox("B", "A")})}));
    b.law("CONJ.CF9", {}, mbar(k0("m")), sq({k0("chi0_bot_inv"), k0("m"), k0("chi0_top")}));
    b.law("CONJ.eps-bar", {"A"}, mbar(k("conj_eps", {"A"})), k("conj_eps", {bA}));
}

void unitary(Builder& b) {
    S dA = dg("A"), dB = dg("B");
    b.law("U.3", {"A"}, k("phi", {dA}), mdag(k("phi_inv", {"A"})));
    b.law("U.4", {"A"}, sq({k("phi", {"A"}), k("phi", {dA})}), k("iota", {"A"}));
    b.law("U.5a", {}, k("phi", {"Bot"}), sq({k0("m"), k0("lam_top")}));
    b.law("U.5a-dag", {}, k("phi", {"Bot"}), sq({k0("lam_bot"), mdag(k0("m"))}));
    b.law("U.5b", {}, k("phi", {"Top"}), sq({k0("m_inv"), k0("lam_bot")}));
    b.law("U.5b-dag", {}, k("phi", {"Top"}), sq({k0("lam_top"), mdag(k0("m_inv"))}));
    b.law("U.6a", {"A", "B"}, sq({mt(k("phi", {"A"}), k("phi", {"B"})), k("lam_ox", {"A", "B"})}),
          sq({k("mx", {"A", "B"}), k("phi", {op("A", "B")})}));
    b.law("U.6b", {"A", "B"}, k("phi", {ox("A", "B")}),
          sq({k("mx", {"A", "B"}), mp(k("phi", {"A"}), k("phi", {"B"})), k("lam_op", {"A", "B"})}));
    b.law("SQRT.i", {"A", "B"},
          sq({k("mx_inv", {"A", "B"}), mt(k("phi", {"A"}), k("phi", {"B"})), k("lam_ox", {"A", "B"}),
              mdag(sq({k("lam_ox_inv", {"A", "B"}), mt(k("phi_inv", {"A"}), k("phi_inv", {"B"})),
                       k("mx", {"A", "B"})}))}),
          k("iota", {op("A", "B")}));
    b.law("SQRT.ii", {"A"}, k("phi", {dg(dA)}), mdag(mdag(k("phi", {"A"}))));
    b.law("PREU", {"A"}, sq({k("phi", {"A"}), mdag(k("phi_inv", {"A"}))}), k("iota", {"A"}));
    b.law("UD.a", {"A"},
          sq({k("eta", {"A"}), mp(k("phi", {du("A")}), k("phi", {"A"})), k("c_op", {dg(du("A")), dA})}),
          sq({k0("lam_top"), mdag(k("eps", {"A"})), k("lam_op_inv", {"A", du("A")})}));
    b.law("UD.b", {"A"},
          sq({mt(k("phi", {du("A")}), k("phi", {"A"})), k("lam_ox", {du("A"), "A"}), mdag(k("eta", {"A"}))}),
          sq({k("c_ox", {du("A"), "A"}), k("eps", {"A"}), k0("lam_bot")}));
    b.law("U2D.dual", {"A"}, sq({k("c_op", {du("A"), "A"}), k("mx_inv", {"A", du("A")}), k("eps", {"A"})}),
          "ddag(" + sq({k0("m"), k("eta", {"A"})}) + ")");
    b.law("U2D.ddag-invol", {"A", "B"}, "ddag(ddag(f))", "f", {mv("f", "A", "B")});
    b.law("U2D.ddag-seq", {"A", "B", "C"}, "ddag(f ; g)", "ddag(g) ; ddag(f)", {mv("f", "A", "B"), mv("g", "B", "C")});
    b.law("U2D.ddag-id", {"A"}, "ddag(" + idm("A") + ")", idm("A"));
    b.law("U2D.unitary-auto", {"A"}, k("phi", {"A"}), sq({"u", k("phi", {"A"}), mdag("u")}),
          {MorVar{"u", "A", "A", true}});

    // f : X -> Y is unitary when phi[X] = f ; phi[Y] ; dag(f)
    auto um = [&](const S& tag, std::vector<S> objs, const S& f, const S& X, const S& Y) {
        b.law("COH-UNITARY." + tag, std::move(objs), k("phi", {X}), sq({pm(f), k("phi", {Y}), mdag(f)}));
    };
    um("i", {"A", "B"}, k("lam_ox", {"A", "B"}), ox(dA, dB), dg(op("A", "B")));
    um("ii", {"A", "B"}, k("lam_op", {"A", "B"}), op(dA, dB), dg(ox("A", "B")));
    um("iii", {}, k0("lam_top"), "Top", dg("Bot"));
    um("iv", {}, k0("lam_bot"), "Bot", dg("Top"));
    um("v", {"A"}, k("phi", {"A"}), "A", dA);
    um("vi", {}, k0("m"), "Bot", "Top");
    um("vii", {"A", "B"}, k("mx", {"A", "B"}), ox("A", "B"), op("A", "B"));
    um("viii", {"A"}, k("iota", {"A"}), "A", dg(dA));
    um("ix", {"A", "B", "C"}, k("a_ox", {"A", "B", "C"}), ox("A", ox("B", "C")), ox(ox("A", "B"), "C"));
    um("x", {"A", "B", "C"}, k("a_op", {"A", "B", "C"}), op("A", op("B", "C")), op(op("A", "B"), "C"));
    um("xi", {"A", "B"}, k("c_ox", {"A", "B"}), ox("A", "B"), ox("B", "A"));
    um("xii", {"A", "B"}, k("c_op", {"A", "B"}), op("A", "B"), op("B", "A"));
    um("xiii", {"A", "B", "C"}, k("dL", {"A", "B", "C"}), ox("A", op("B", "C")), op(ox("A", "B"), "C"));
    um("xiv", {"A", "B", "C"}, k("dR", {"A", "B", "C"}), ox(op("A", "B"), "C"), op("A", ox("B", "C")));
}

void naturality(Builder& b) {
    std::vector<MorVar> fg = {mv("f", "A", "B"), mv("g", "C", "D")};
    std::vector<S> v4 = {"A", "B", "C", "D"};
    b.law("NATURAL.c_ox", v4, sq({mt("f", "g"), k("c_ox", {"B", "D"})}), sq({k("c_ox", {"A", "C"}), mt("g", "f")}),
          fg);
    b.law("NATURAL.c_op", v4, sq({mp("f", "g"), k("c_op", {"B", "D"})}), sq({k("c_op", {"A", "C"}), mp("g", "f")}),
          fg);
    b.law("NATURAL.a_ox", v4, sq({mt("f", mt("g", idm("A"))), k("a_ox", {"B", "D", "A"})}),
          sq({k("a_ox", {"A", "C", "A"}), mt(mt("f", "g"), idm("A"))}), fg);
    b.law("NATURAL.dL", v4, sq({mt("f", mp("g", idm("A"))), k("dL", {"B", "D", "A"})}),
          sq({k("dL", {"A", "C", "A"}), mp(mt("f", "g"), idm("A"))}), fg);
    b.law("NATURAL.dR", v4, sq({mt(mp("f", "g"), idm("A")), k("dR", {"B", "D", "A"})}),
          sq({k("dR", {"A", "C", "A"}), mp("f", mt("g", idm("A")))}), fg);
    b.law("NATURAL.lam_ox", v4, sq({mt(mdag("f"), mdag("g")), k("lam_ox", {"A", "C"})}),
          sq({k("lam_ox", {"B", "D"}), mdag(mp("f", "g"))}), fg);
    b.law("NATURAL.lam_op", v4, sq({mp(mdag("f"), mdag("g")), k("lam_op", {"A", "C"})}),
          sq({k("lam_op", {"B", "D"}), mdag(mt("f", "g"))}), fg);
    b.law("NATURAL.chi_ox", v4, sq({mt(mbar("f"), mbar("g")), k("chi_ox", {"B", "D"})}),
          sq({k("chi_ox", {"A", "C"}), mbar(mt("g", "f"))}), fg);
    std::vector<MorVar> f = {mv("f", "A", "B")};
    b.law("NATURAL.iota", {"A", "B"}, sq({"f", k("iota", {"B"})}), sq({k("iota", {"A"}), mdag(mdag("f"))}), f);
    b.law("NATURAL.conj_eps", {"A", "B"}, sq({mbar(mbar("f")), k("conj_eps", {"B"})}),
          sq({k("conj_eps", {"A"}), "f"}), f);
    b.law("NATURAL.psi", {"A", "B"}, sq({k("psi", {"B"}), pm(ldualmap("f", "A", "B"))}),
          sq({pm(dualmap("f", "A", "B")), k("psi", {"A"})}), f);
    b.law("NATURAL.omega", {"A", "B"}, sq({pm(dualmap(mdag("f"), dg("B"), dg("A"))), k("omega", {"B"})}),
          sq({k("omega", {"A"}), mdag(dualmap("f", "A", "B"))}), f);
}

void isos(Builder& b) {
    const char* vars[] = {"A", "B", "C"};
    for (int i = 0; i <= static_cast<int>(ConstKind::DualizorInv); ++i) {
        auto kind = static_cast<ConstKind>(i);
        const auto& info = const_info(kind);
        S name = info.name;
        if (name.size() > 4 && name.compare(name.size() - 4, 4, "_inv") == 0) continue;
        auto inv = const_inverse(kind);
        if (!inv) continue;
        std::vector<S> objs(vars, vars + info.arity);
        std::vector<ObjPtr> args;
        S a = name + "[";
        S ai = S(const_info(*inv).name) + "[";
        for (int j = 0; j < info.arity; ++j) {
            args.push_back(o_atom(vars[j]));
            a += (j ? "," : "") + S(vars[j]);
            ai += (j ? "," : "") + S(vars[j]);
        }
        a += "]";
        ai += "]";
        auto sig = const_signature(kind, args);
        b.law("ISO." + name, objs, sq({a, ai}), idm(obj_to_string(*sig.dom)));
        b.law("ISO." + name + "-rev", objs, sq({ai, a}), idm(obj_to_string(*sig.cod)));
    }
}

// ---- functor packages (identity on objects and maps) -----------------------

S vT(const View& v, const S& a, const S& b) { return v.tensor_is_ox ? ox(a, b) : op(a, b); }
S vP(const View& v, const S& a, const S& b) { return v.par_is_op ? op(a, b) : ox(a, b); }
S vMT(const View& v, const S& f, const S& g) { return v.tensor_is_ox ? mt(f, g) : mp(f, g); }
S vMP(const View& v, const S& f, const S& g) { return v.par_is_op ? mp(f, g) : mt(f, g); }
S vTop(const View& v) { return v.tensor_is_ox ? "Top" : "Bot"; }
S vBot(const View& v) { return v.par_is_op ? "Bot" : "Top"; }
S vAT(const View& v, const S& a, const S& b, const S& c) { return k(v.tensor_is_ox ? "a_ox" : "a_op", {a, b, c}); }
S vAP(const View& v, const S& a, const S& b, const S& c) { return k(v.par_is_op ? "a_op" : "a_ox", {a, b, c}); }
S vUT(const View& v, const S& a) { return k(v.tensor_is_ox ? "uL_ox" : "uL_op", {a}); }
S vUP(const View& v, const S& a) { return k(v.par_is_op ? "uL_op" : "uL_ox", {a}); }
S vDL(const View& v, const S& a, const S& b, const S& c) {
    if (v.name == "std") return k("dL", {a, b, c});
    return k(v.tensor_is_ox ? "a_ox" : "a_op", {a, b, c});
}
S vDR(const View& v, const S& a, const S& b, const S& c) {
    if (v.name == "std") return k("dR", {a, b, c});
    return k(v.tensor_is_ox ? "a_ox_inv" : "a_op_inv", {a, b, c});
}
S vM(const View& v) { return v.name == "std" ? k0("m") : idm(vTop(v)); }
S vMInv(const View& v) { return v.name == "std" ? k0("m_inv") : idm(vTop(v)); }
S vMx(const View& v, const S& a, const S& b) { return v.name == "std" ? k("mx", {a, b}) : idm(vT(v, a, b)); }

void package_laws(Builder& b, const FunctorPackage& P) {
    const View& s = P.src;
    const View& t = P.tgt;
    S tag = "/" + P.name;
    auto law = [&](const S& id, std::vector<S> objs, const S& l, const S& r) {
        b.law(id + tag, std::move(objs), l, r, {}, P.name);
    };
    law("FROB.LF-assoc", {"A", "B", "C"},
        sq({vAT(t, "A", "B", "C"), vMT(t, P.m_ox("A", "B"), idm("C")), P.m_ox(vT(s, "A", "B"), "C")}),
        sq({vMT(t, idm("A"), P.m_ox("B", "C")), P.m_ox("A", vT(s, "B", "C")), vAT(s, "A", "B", "C")}));
    law("FROB.LF-unit", {"A"}, sq({vMT(t, P.m_top(), idm("A")), P.m_ox(vTop(s), "A"), vUT(s, "A")}), vUT(t, "A"));
    law("FROB.LF-coassoc", {"A", "B", "C"},
        sq({vAP(s, "A", "B", "C"), P.n_op(vP(s, "A", "B"), "C"), vMP(t, P.n_op("A", "B"), idm("C"))}),
        sq({P.n_op("A", vP(s, "B", "C")), vMP(t, idm("A"), P.n_op("B", "C")), vAP(t, "A", "B", "C")}));
    law("FROB.LF-counit", {"A"}, sq({P.n_op(vBot(s), "A"), vMP(t, P.n_bot(), idm("A")), vUP(t, "A")}), vUP(s, "A"));
    law("FROB.F1", {"A", "B", "C"},
        sq({P.m_ox("A", vP(s, "B", "C")), vDL(s, "A", "B", "C"), P.n_op(vT(s, "A", "B"), "C")}),
        sq({vMT(t, idm("A"), P.n_op("B", "C")), vDL(t, "A", "B", "C"), vMP(t, P.m_ox("A", "B"), idm("C"))}));
    law("FROB.F2", {"A", "B", "C"},
        sq({P.m_ox(vP(s, "A", "B"), "C"), vDR(s, "A", "B", "C"), P.n_op("A", vT(s, "B", "C"))}),
        sq({vMT(t, P.n_op("A", "B"), idm("C")), vDR(t, "A", "B", "C"), vMP(t, idm("A"), P.m_ox("B", "C"))}));
    law("FROB.mixFF", {}, sq({P.n_bot(), vM(t), P.m_top()}), vM(s));
    law("FROB.isomixFF", {}, sq({P.m_top(), vMInv(s), P.n_bot()}), vMInv(t));
    law("FROB.mixpres", {"A", "B"}, sq({P.m_ox("A", "B"), vMx(s, "A", "B"), P.n_op("A", "B")}), vMx(t, "A", "B"));
    // the identity transformation F => F
    law("NAT.1a", {}, sq({P.m_top(), idm(vTop(s))}), P.m_top());
    law("NAT.1b", {}, sq({idm(vBot(s)), P.n_bot()}), P.n_bot());
    law("NAT.2a", {"A", "B"}, sq({vMT(t, idm("A"), idm("B")), P.m_ox("A", "B"), idm(vT(s, "A", "B"))}),
        P.m_ox("A", "B"));
    law("NAT.2b", {"A", "B"}, sq({idm(vP(s, "A", "B")), P.n_op("A", "B"), vMP(t, idm("A"), idm("B"))}),
        P.n_op("A", "B"));
    if (s.name == "std" && t.name == "std") {
        S iso1 = trans_l(du("A"), du("A"), "A", k("eta", {"A"}),
                         sq({P.m_ox("A", du("A")), k("eps", {"A"}), P.n_bot()}));
        S iso2 = trans_r(ld("A"), ld("A"), "A", k("reta", {"A"}),
                         sq({P.m_ox(ld("A"), "A"), k("reps", {"A"}), P.n_bot()}));
        law("CFF", {"A"}, sq({k("psi", {"A"}), pm(iso2)}), sq({pm(iso1), k("psi", {"A"})}));
    }
    if (P.dagger_preserving) {
        // preservators are identities
        S rho_ox_dA = idm(dg(dg("A")));
        S rho_op_A = idm(dg("A"));
        law("DLF.1", {"A"}, sq({k("iota", {"A"}), rho_ox_dA, mdag(rho_op_A)}), k("iota", {"A"}));
        law("DLF.2", {"A"}, sq({k("iota", {"A"}), mdag(rho_op_A), rho_ox_dA}), k("iota", {"A"}));
    }
}

S pk_id2(const S& a, const S& b, bool tensor) { return idm(tensor ? ox(a, b) : op(a, b)); }

}  // namespace

std::string LawSpec::base_id() const {
    auto p = id.find('/');
    return p == std::string::npos ? id : id.substr(0, p);
}

const std::vector<FunctorPackage>& functor_packages() {
    static const View vstd{"std", true, true};
    static const View vpp{"parpar", false, true};
    static const View vtt{"tenten", true, false};
    static const std::vector<FunctorPackage> pk = {
        {"id", vstd, vstd, [](const S& a, const S& b) { return pk_id2(a, b, true); }, [] { return idm("Top"); },
         [](const S& a, const S& b) { return pk_id2(a, b, false); }, [] { return idm("Bot"); }, true},
        {"mxdown", vpp, vstd, [](const S& a, const S& b) { return k("mx", {a, b}); }, [] { return k0("m_inv"); },
         [](const S& a, const S& b) { return pk_id2(a, b, false); }, [] { return idm("Bot"); }, false},
        {"mxdownstar", vstd, vpp, [](const S& a, const S& b) { return k("mx_inv", {a, b}); },
         [] { return k0("m"); }, [](const S& a, const S& b) { return pk_id2(a, b, false); },
         [] { return idm("Bot"); }, false},
        {"mxup", vtt, vstd, [](const S& a, const S& b) { return pk_id2(a, b, true); }, [] { return idm("Top"); },
         [](const S& a, const S& b) { return k("mx", {a, b}); }, [] { return k0("m_inv"); }, false},
    };
    return pk;
}

const std::vector<LawSpec>& catalog() {
    static const std::vector<LawSpec> laws = [] {
        Builder b;
        monoidal(b);
        ldc(b);
        mix(b);
        duals(b);
        cyclor(b);
        dagger_ldc(b);
        conjugation(b);
        unitary(b);
        naturality(b);
        isos(b);
        for (const auto& p : functor_packages()) package_laws(b, p);
        std::set<std::string> seen;
        for (const auto& l : b.laws)
            if (!seen.insert(l.id).second) throw std::logic_error("duplicate law id " + l.id);
        return b.laws;
    }();
    return laws;
}

const LawSpec* find_law(const std::string& id) {
    for (const auto& l : catalog())
        if (l.id == id) return &l;
    return nullptr;
}

bool law_matches(const LawSpec& law, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter.back() == '*') {
        std::string pre = filter.substr(0, filter.size() - 1);
        return law.id.rfind(pre, 0) == 0;
    }
    return law.id == filter || law.base_id() == filter;
}

}  // namespace muc
