#include "muc/terms.hpp"

namespace muc {

namespace {

ObjPtr mk_obj(ObjOp op, std::string name, ObjPtr a, ObjPtr b) {
    return std::make_shared<const ObjTerm>(ObjTerm{op, std::move(name), std::move(a), std::move(b)});
}

MorPtr mk_mor(MorTerm t) { return std::make_shared<const MorTerm>(std::move(t)); }

int obj_prec(const ObjTerm& t) {
    switch (t.op) {
        case ObjOp::Tensor:
        case ObjOp::Par: return 0;
        case ObjOp::DualL: return 1;
        case ObjOp::DualR: return 2;
        default: return 3;
    }
}

std::string wrap_obj(const ObjTerm& t, bool paren) {
    std::string s = obj_to_string(t);
    return paren ? "(" + s + ")" : s;
}

int mor_prec(const MorTerm& t) {
    switch (t.op) {
        case MorOp::Seq: return 0;
        case MorOp::Tensor:
        case MorOp::Par: return 1;
        default: return 2;
    }
}

std::string wrap_mor(const MorTerm& t, bool paren) {
    std::string s = mor_to_string(t);
    return paren ? "(" + s + ")" : s;
}

}  // namespace

ObjPtr o_atom(const std::string& name) { return mk_obj(ObjOp::Atom, name, nullptr, nullptr); }
ObjPtr o_top() { return mk_obj(ObjOp::Top, "", nullptr, nullptr); }
ObjPtr o_bot() { return mk_obj(ObjOp::Bot, "", nullptr, nullptr); }
ObjPtr o_tensor(ObjPtr a, ObjPtr b) { return mk_obj(ObjOp::Tensor, "", std::move(a), std::move(b)); }
ObjPtr o_par(ObjPtr a, ObjPtr b) { return mk_obj(ObjOp::Par, "", std::move(a), std::move(b)); }
ObjPtr o_dag(ObjPtr a) { return mk_obj(ObjOp::Dag, "", std::move(a), nullptr); }
ObjPtr o_dual(ObjPtr a) { return mk_obj(ObjOp::DualR, "", std::move(a), nullptr); }
ObjPtr o_dual_left(ObjPtr a) { return mk_obj(ObjOp::DualL, "", std::move(a), nullptr); }
ObjPtr o_conj(ObjPtr a) { return mk_obj(ObjOp::Conj, "", std::move(a), nullptr); }

bool obj_equal(const ObjTerm& x, const ObjTerm& y) {
    if (&x == &y) return true;
    if (x.op != y.op) return false;
    switch (x.op) {
        case ObjOp::Atom: return x.name == y.name;
        case ObjOp::Top:
        case ObjOp::Bot: return true;
        case ObjOp::Tensor:
        case ObjOp::Par: return obj_equal(*x.a, *y.a) && obj_equal(*x.b, *y.b);
        default: return obj_equal(*x.a, *y.a);
    }
}

std::size_t obj_size(const ObjTerm& t) {
    switch (t.op) {
        case ObjOp::Atom:
        case ObjOp::Top:
        case ObjOp::Bot: return 1;
        case ObjOp::Tensor:
        case ObjOp::Par: return obj_size(*t.a) + obj_size(*t.b);
        default: return obj_size(*t.a);
    }
}

std::string obj_to_string(const ObjTerm& t) {
    switch (t.op) {
        case ObjOp::Atom: return t.name;
        case ObjOp::Top: return "Top";
        case ObjOp::Bot: return "Bot";
        case ObjOp::Tensor:
        case ObjOp::Par: {
            const char* sym = t.op == ObjOp::Tensor ? " (x) " : " (+) ";
            return wrap_obj(*t.a, false) + sym + wrap_obj(*t.b, obj_prec(*t.b) <= 0);
        }
        case ObjOp::Dag: return "dag(" + obj_to_string(*t.a) + ")";
        case ObjOp::Conj: return "bar(" + obj_to_string(*t.a) + ")";
        case ObjOp::DualL: return "*^" + wrap_obj(*t.a, obj_prec(*t.a) < 1);
        case ObjOp::DualR: return wrap_obj(*t.a, obj_prec(*t.a) < 2) + "^*";
    }
    return "";
}

ObjPtr obj_subst(const ObjPtr& t, const std::map<std::string, ObjPtr>& s) {
    switch (t->op) {
        case ObjOp::Atom: {
            auto it = s.find(t->name);
            return it == s.end() ? t : it->second;
        }
        case ObjOp::Top:
        case ObjOp::Bot: return t;
        case ObjOp::Tensor:
        case ObjOp::Par: return mk_obj(t->op, "", obj_subst(t->a, s), obj_subst(t->b, s));
        default: return mk_obj(t->op, "", obj_subst(t->a, s), nullptr);
    }
}

void obj_atoms(const ObjTerm& t, std::set<std::string>& out) {
    if (t.op == ObjOp::Atom) out.insert(t.name);
    if (t.a) obj_atoms(*t.a, out);
    if (t.b) obj_atoms(*t.b, out);
}

MorPtr m_id(ObjPtr a) {
    MorTerm t;
    t.op = MorOp::Id;
    t.obj = std::move(a);
    return mk_mor(std::move(t));
}

MorPtr m_named(const std::string& name) {
    MorTerm t;
    t.op = MorOp::Named;
    t.name = name;
    return mk_mor(std::move(t));
}

MorPtr m_seq(MorPtr f, MorPtr g) {
    MorTerm t;
    t.op = MorOp::Seq;
    t.a = std::move(f);
    t.b = std::move(g);
    return mk_mor(std::move(t));
}

MorPtr m_seq(std::initializer_list<MorPtr> fs) {
    MorPtr acc;
    for (const auto& f : fs) acc = acc ? m_seq(acc, f) : f;
    if (!acc) throw std::invalid_argument("m_seq of empty list");
    return acc;
}

MorPtr m_tensor(MorPtr f, MorPtr g) {
    MorTerm t;
    t.op = MorOp::Tensor;
    t.a = std::move(f);
    t.b = std::move(g);
    return mk_mor(std::move(t));
}

MorPtr m_par(MorPtr f, MorPtr g) {
    MorTerm t;
    t.op = MorOp::Par;
    t.a = std::move(f);
    t.b = std::move(g);
    return mk_mor(std::move(t));
}

MorPtr m_dag(MorPtr f) {
    MorTerm t;
    t.op = MorOp::Dag;
    t.a = std::move(f);
    return mk_mor(std::move(t));
}

MorPtr m_conj(MorPtr f) {
    MorTerm t;
    t.op = MorOp::Conj;
    t.a = std::move(f);
    return mk_mor(std::move(t));
}

MorPtr m_ddag(MorPtr f) {
    MorTerm t;
    t.op = MorOp::DDag;
    t.a = std::move(f);
    return mk_mor(std::move(t));
}

MorPtr m_const(ConstKind k, std::vector<ObjPtr> args) {
    const auto& info = const_info(k);
    if (static_cast<int>(args.size()) != info.arity) {
        throw TypeError(std::string(info.name) + " expects " + std::to_string(info.arity) +
                        " object arguments, got " + std::to_string(args.size()));
    }
    MorTerm t;
    t.op = MorOp::Const;
    t.kind = k;
    t.args = std::move(args);
    return mk_mor(std::move(t));
}

bool mor_term_equal(const MorTerm& x, const MorTerm& y) {
    if (x.op != y.op) return false;
    switch (x.op) {
        case MorOp::Id: return obj_equal(*x.obj, *y.obj);
        case MorOp::Named: return x.name == y.name;
        case MorOp::Const:
            if (x.kind != y.kind || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i) {
                if (!obj_equal(*x.args[i], *y.args[i])) return false;
            }
            return true;
        case MorOp::Seq:
        case MorOp::Tensor:
        case MorOp::Par: return mor_term_equal(*x.a, *y.a) && mor_term_equal(*x.b, *y.b);
        default: return mor_term_equal(*x.a, *y.a);
    }
}

std::string mor_to_string(const MorTerm& t) {
    switch (t.op) {
        case MorOp::Id: return "id[" + obj_to_string(*t.obj) + "]";
        case MorOp::Named: return t.name;
        case MorOp::Const: {
            std::string s = std::string(const_info(t.kind).name) + "[";
            for (std::size_t i = 0; i < t.args.size(); ++i) {
                if (i) s += ",";
                s += obj_to_string(*t.args[i]);
            }
            return s + "]";
        }
        case MorOp::Seq:
            return wrap_mor(*t.a, false) + " ; " + wrap_mor(*t.b, mor_prec(*t.b) <= 0);
        case MorOp::Tensor:
        case MorOp::Par: {
            const char* sym = t.op == MorOp::Tensor ? " (x) " : " (+) ";
            return wrap_mor(*t.a, mor_prec(*t.a) < 1) + sym + wrap_mor(*t.b, mor_prec(*t.b) <= 1);
        }
        case MorOp::Dag: return "dag(" + mor_to_string(*t.a) + ")";
        case MorOp::Conj: return "bar(" + mor_to_string(*t.a) + ")";
        case MorOp::DDag: return "ddag(" + mor_to_string(*t.a) + ")";
    }
    return "";
}

MorPtr mor_subst(const MorPtr& t, const std::map<std::string, ObjPtr>& objs,
                 const std::map<std::string, MorPtr>& mors) {
    switch (t->op) {
        case MorOp::Id: return m_id(obj_subst(t->obj, objs));
        case MorOp::Named: {
            auto it = mors.find(t->name);
            return it == mors.end() ? t : it->second;
        }
        case MorOp::Const: {
            std::vector<ObjPtr> args;
            args.reserve(t->args.size());
            for (const auto& a : t->args) args.push_back(obj_subst(a, objs));
            return m_const(t->kind, std::move(args));
        }
        case MorOp::Seq: return m_seq(mor_subst(t->a, objs, mors), mor_subst(t->b, objs, mors));
        case MorOp::Tensor: return m_tensor(mor_subst(t->a, objs, mors), mor_subst(t->b, objs, mors));
        case MorOp::Par: return m_par(mor_subst(t->a, objs, mors), mor_subst(t->b, objs, mors));
        case MorOp::Dag: return m_dag(mor_subst(t->a, objs, mors));
        case MorOp::Conj: return m_conj(mor_subst(t->a, objs, mors));
        case MorOp::DDag: return m_ddag(mor_subst(t->a, objs, mors));
    }
    return t;
}

}  // namespace muc
