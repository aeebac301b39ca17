#include "muc/terms.hpp"

namespace muc {

namespace {

struct ParsedSig {
    ObjPtr dom;
    ObjPtr cod;
};

const std::vector<ParsedSig>& parsed_sigs() {
    static const std::vector<ParsedSig> sigs = [] {
        std::vector<ParsedSig> v;
        for (const auto& c : const_table()) v.push_back({parse_obj(c.dom), parse_obj(c.cod)});
        return v;
    }();
    return sigs;
}

void require(const Caps* caps, const Caps& need, const std::string& what) {
    if (!caps) return;
    std::string miss = caps->missing(need);
    if (!miss.empty()) throw CapabilityError(what + " needs capability " + miss);
}

void check_atoms(const ObjPtr& o, const TypeEnv& env) {
    if (!env.atoms) return;
    std::set<std::string> used;
    obj_atoms(*o, used);
    for (const auto& a : used) {
        if (!env.atoms->count(a)) throw TypeError("unknown atom '" + a + "'");
    }
}

}  // namespace

TypeJudgment const_signature(ConstKind k, const std::vector<ObjPtr>& args) {
    const auto& info = const_info(k);
    if (static_cast<int>(args.size()) != info.arity) {
        throw TypeError(std::string(info.name) + " expects " + std::to_string(info.arity) + " object arguments");
    }
    std::map<std::string, ObjPtr> s;
    for (std::size_t i = 0; i < args.size(); ++i) s["$" + std::to_string(i)] = args[i];
    const auto& sig = parsed_sigs()[static_cast<std::size_t>(k)];
    return {obj_subst(sig.dom, s), obj_subst(sig.cod, s)};
}

TypeJudgment typecheck_mor(const MorTerm& t, const TypeEnv& env, const Caps* caps) {
    switch (t.op) {
        case MorOp::Id:
            check_atoms(t.obj, env);
            return {t.obj, t.obj};
        case MorOp::Named: {
            auto it = env.named.find(t.name);
            if (it == env.named.end()) throw TypeError("unknown morphism name '" + t.name + "'");
            return it->second;
        }
        case MorOp::Const: {
            for (const auto& a : t.args) check_atoms(a, env);
            require(caps, const_info(t.kind).needs, const_info(t.kind).name);
            return const_signature(t.kind, t.args);
        }
        case MorOp::Seq: {
            TypeJudgment f = typecheck_mor(*t.a, env, caps);
            TypeJudgment g = typecheck_mor(*t.b, env, caps);
            if (!obj_equal(*f.cod, *g.dom)) {
                throw TypeError("composition mismatch: " + obj_to_string(*f.cod) + " vs " + obj_to_string(*g.dom));
            }
            return {f.dom, g.cod};
        }
        case MorOp::Tensor: {
            TypeJudgment f = typecheck_mor(*t.a, env, caps);
            TypeJudgment g = typecheck_mor(*t.b, env, caps);
            return {o_tensor(f.dom, g.dom), o_tensor(f.cod, g.cod)};
        }
        case MorOp::Par: {
            TypeJudgment f = typecheck_mor(*t.a, env, caps);
            TypeJudgment g = typecheck_mor(*t.b, env, caps);
            return {o_par(f.dom, g.dom), o_par(f.cod, g.cod)};
        }
        case MorOp::Dag: {
            Caps need;
            need.dagger = true;
            require(caps, need, "dag");
            TypeJudgment f = typecheck_mor(*t.a, env, caps);
            return {o_dag(f.cod), o_dag(f.dom)};
        }
        case MorOp::Conj: {
            Caps need;
            need.conjugation = true;
            require(caps, need, "bar");
            TypeJudgment f = typecheck_mor(*t.a, env, caps);
            return {o_conj(f.dom), o_conj(f.cod)};
        }
        case MorOp::DDag: {
            Caps need;
            need.dagger = true;
            need.unitary = true;
            require(caps, need, "ddag");
            TypeJudgment f = typecheck_mor(*t.a, env, caps);
            return {f.cod, f.dom};
        }
    }
    throw TypeError("malformed term");
}

}  // namespace muc
