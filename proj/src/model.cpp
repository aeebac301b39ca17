#include "muc/model.hpp"

#include "muc/derived.hpp"

namespace muc {

namespace {

Caps caps_of(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    for (auto* n : names) v.emplace_back(n);
    return Caps::parse(v);
}

bool ends_with_inv(const std::string& n) {
    return n.size() > 4 && n.compare(n.size() - 4, 4, "_inv") == 0;
}

}  // namespace

Obj Model::dag(const Obj&) const { throw CapabilityError(name() + " has no dagger"); }
Obj Model::dual(const Obj&) const { throw CapabilityError(name() + " has no duals"); }
Obj Model::conj(const Obj&) const { throw CapabilityError(name() + " has no conjugation"); }
Mor Model::dag_map(const Mor&) const { throw CapabilityError(name() + " has no dagger"); }
Mor Model::conj_map(const Mor&) const { throw CapabilityError(name() + " has no conjugation"); }

std::optional<Mor> Model::inverse(const Mor&) const {
    throw CapabilityError(name() + " cannot invert morphisms");
}

Mor Model::random_unitary(const Obj& a, Rng&) const {
    throw FragmentError("no-unitary-generator", name() + " has no unitary generator for " + a->describe());
}

Mor Model::dual_map(const Mor& f) const {
    require(caps_of({"duals"}), "dual_map");
    const Obj& x = f->dom;
    const Obj& y = f->cod;
    Mor eps_y = seq({tensor_map(f, id(dual(y))), c(ConstKind::Eps, {y})});
    return transfer_left_dual(*this, dual(y), dual(x), x, c(ConstKind::Eta, {x}), eps_y);
}

Mor Model::seq(std::initializer_list<Mor> fs) const {
    Mor acc;
    for (const auto& f : fs) acc = acc ? compose(acc, f) : f;
    if (!acc) throw std::invalid_argument("seq of nothing");
    return acc;
}

Mor Model::invert(const Mor& f) const {
    auto inv = inverse(f);
    if (!inv) throw NotInvertible(name() + ": morphism " + f->dom->describe() + " -> " + f->cod->describe() +
                                  " is not invertible");
    return *inv;
}

void Model::require(const Caps& need, const std::string& what) const {
    std::string miss = caps().missing(need);
    if (!miss.empty()) throw CapabilityError(what + " needs capability " + miss + " in " + name());
}

Mor Model::supply(ConstKind k, const std::vector<Obj>& args) const { return generic_supply(k, args); }

bool is_generic_kind(ConstKind k) {
    using K = ConstKind;
    if (ends_with_inv(const_info(k).name)) return true;
    switch (k) {
        case K::Mx:
        case K::REta:
        case K::REps:
        case K::Psi:
        case K::Sigma:
        case K::Omega:
        case K::Dualizor: return true;
        default: return false;
    }
}

Mor Model::generic_supply(ConstKind k, const std::vector<Obj>& args) const {
    using K = ConstKind;
    const auto& info = const_info(k);
    require(info.needs, info.name);
    if (static_cast<int>(args.size()) != info.arity) throw TypeError(std::string(info.name) + ": wrong arity");
    if (ends_with_inv(info.name)) {
        auto fwd = const_inverse(k);
        if (!fwd) throw ModelDefect(std::string("no forward constant for ") + info.name);
        if (k == K::MxInv) {
            // mx is invertible exactly on core pairs
            auto inv = inverse(supply(*fwd, args));
            if (!inv) throw FragmentError("outside-core", name() + ": mixor not invertible at these objects");
            return *inv;
        }
        return invert(supply(*fwd, args));
    }
    switch (k) {
        case K::Mx: {
            const Obj& a = args[0];
            const Obj& b = args[1];
            return seq({tensor_map(id(a), c(K::ULOpInv, {b})), tensor_map(id(a), par_map(c(K::M), id(b))),
                        c(K::DL, {a, top(), b}), par_map(c(K::UROx, {a}), id(b))});
        }
        case K::REta: {
            const Obj& a = args[0];
            return seq({c(K::Eta, {a}), c(K::COp, {dual(a), a})});
        }
        case K::REps: {
            const Obj& a = args[0];
            return seq({c(K::COx, {dual_left(a), a}), c(K::Eps, {a})});
        }
        case K::Psi: {
            const Obj& a = args[0];
            Obj l = dual_left(a);
            Mor eta_y = seq({c(K::REta, {a}), c(K::COp, {a, l})});
            return transfer_left_dual(*this, dual(a), l, a, eta_y, c(K::Eps, {a}));
        }
        case K::Dualizor: {
            const Obj& a = args[0];
            Obj da = dual(a);
            Mor eps_x = seq({c(K::COx, {da, a}), c(K::Eps, {a})});
            return transfer_left_dual(*this, a, dual(da), da, c(K::Eta, {da}), eps_x);
        }
        case K::Sigma: {
            const Obj& a = args[0];
            Obj ba = conj(a);
            Obj bda = conj(dual(a));
            Mor eta_y = seq({c(K::Chi0Top), conj_map(c(K::Eta, {a})), c(K::ChiOp, {dual(a), a}),
                             c(K::COp, {ba, bda})});
            return transfer_left_dual(*this, dual(ba), bda, ba, eta_y, c(K::Eps, {ba}));
        }
        case K::Omega: {
            const Obj& a = args[0];
            Obj da = dag(a);
            Obj dda = dag(dual(a));
            Mor eta_y = seq({c(K::LamTop), dag_map(c(K::Eps, {a})), c(K::LamOpInv, {a, dual(a)}),
                             c(K::COp, {da, dda})});
            return transfer_left_dual(*this, dual(da), dda, da, eta_y, c(K::Eps, {da}));
        }
        default: throw CapabilityError(name() + " does not supply " + info.name);
    }
}

Mor transfer_left_dual(const Model& M, const Obj& X, const Obj& Y, const Obj& Z, const Mor& eta_Y,
                       const Mor& eps_X) {
    using K = ConstKind;
    return M.seq({M.c(K::ULOxInv, {X}), M.tensor_map(eta_Y, M.id(X)), M.c(K::DR, {Y, Z, X}),
                  M.par_map(M.id(Y), eps_X), M.c(K::UROp, {Y})});
}

TypeEnv ModelEnv::type_env() const {
    TypeEnv env;
    std::set<std::string> names;
    for (const auto& [n, _] : atoms) names.insert(n);
    env.atoms = names;
    for (const auto& [n, m] : named) env.named[n] = {m.dom, m.cod};
    return env;
}

Obj Evaluator::obj(const ObjPtr& t) {
    std::string key = obj_to_string(*t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Obj out;
    switch (t->op) {
        case ObjOp::Atom: {
            auto a = env_.atoms.find(t->name);
            if (a == env_.atoms.end()) throw TypeError("unknown atom '" + t->name + "'");
            out = a->second;
            break;
        }
        case ObjOp::Top: out = model_.top(); break;
        case ObjOp::Bot: out = model_.bot(); break;
        case ObjOp::Tensor: out = model_.tensor(obj(t->a), obj(t->b)); break;
        case ObjOp::Par: out = model_.par(obj(t->a), obj(t->b)); break;
        case ObjOp::Dag: out = model_.dag(obj(t->a)); break;
        case ObjOp::DualR: out = model_.dual(obj(t->a)); break;
        case ObjOp::DualL: out = model_.dual_left(obj(t->a)); break;
        case ObjOp::Conj: out = model_.conj(obj(t->a)); break;
    }
    cache_.emplace(key, out);
    return out;
}

Mor Evaluator::mor(const MorPtr& t, const std::map<std::string, Mor>& extra) {
    switch (t->op) {
        case MorOp::Id: return model_.id(obj(t->obj));
        case MorOp::Named: {
            auto e = extra.find(t->name);
            if (e != extra.end()) return e->second;
            auto n = env_.named.find(t->name);
            if (n == env_.named.end()) throw TypeError("unknown morphism name '" + t->name + "'");
            return n->second.value;
        }
        case MorOp::Seq: return model_.compose(mor(t->a, extra), mor(t->b, extra));
        case MorOp::Tensor: return model_.tensor_map(mor(t->a, extra), mor(t->b, extra));
        case MorOp::Par: return model_.par_map(mor(t->a, extra), mor(t->b, extra));
        case MorOp::Dag: return model_.dag_map(mor(t->a, extra));
        case MorOp::Conj: return model_.conj_map(mor(t->a, extra));
        case MorOp::DDag: return derived_ddagger(model_, mor(t->a, extra));
        case MorOp::Const: {
            const auto& info = const_info(t->kind);
            std::string miss = model_.caps().missing(info.needs);
            if (!miss.empty()) throw CapabilityError(std::string(info.name) + " needs capability " + miss);
            std::vector<Obj> args;
            args.reserve(t->args.size());
            for (const auto& a : t->args) args.push_back(obj(a));
            return model_.supply(t->kind, args);
        }
    }
    throw TypeError("malformed term");
}

Mor interp_mor(const MorPtr& t, const ModelEnv& env, const Model& m) {
    Caps caps = m.caps();
    typecheck_mor(*t, env.type_env(), &caps);
    Evaluator ev(m, env);
    return ev.mor(t);
}

std::pair<Obj, Obj> const_endpoints(const Model& M, ConstKind k, const std::vector<Obj>& args) {
    ModelEnv env;
    std::vector<ObjPtr> vars;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string n = "$" + std::to_string(i);
        env.atoms[n] = args[i];
        vars.push_back(o_atom(n));
    }
    TypeJudgment j = const_signature(k, vars);
    Evaluator ev(M, env);
    return {ev.obj(j.dom), ev.obj(j.cod)};
}

}  // namespace muc
