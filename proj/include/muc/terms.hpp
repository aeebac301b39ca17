#ifndef MUC_TERMS_HPP
#define MUC_TERMS_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "muc/constants.hpp"
#include "muc/errors.hpp"

namespace muc {

enum class ObjOp { Atom, Top, Bot, Tensor, Par, Dag, DualL, DualR, Conj };

struct ObjTerm;
using ObjPtr = std::shared_ptr<const ObjTerm>;

struct ObjTerm {
    ObjOp op;
    std::string name;  // Atom only
    ObjPtr a;
    ObjPtr b;
};

ObjPtr o_atom(const std::string& name);
ObjPtr o_top();
ObjPtr o_bot();
ObjPtr o_tensor(ObjPtr a, ObjPtr b);
ObjPtr o_par(ObjPtr a, ObjPtr b);
ObjPtr o_dag(ObjPtr a);
ObjPtr o_dual(ObjPtr a);       // A^*
ObjPtr o_dual_left(ObjPtr a);  // *^A
ObjPtr o_conj(ObjPtr a);

bool obj_equal(const ObjTerm& x, const ObjTerm& y);
inline bool obj_equal(const ObjPtr& x, const ObjPtr& y) { return obj_equal(*x, *y); }
// number of leaves (atoms, Top, Bot)
std::size_t obj_size(const ObjTerm& t);
std::string obj_to_string(const ObjTerm& t);
inline std::string obj_to_string(const ObjPtr& t) { return obj_to_string(*t); }
// Simultaneous replacement of atoms by terms.
ObjPtr obj_subst(const ObjPtr& t, const std::map<std::string, ObjPtr>& s);
void obj_atoms(const ObjTerm& t, std::set<std::string>& out);

enum class MorOp { Id, Named, Seq, Tensor, Par, Dag, Conj, DDag, Const };

struct MorTerm;
using MorPtr = std::shared_ptr<const MorTerm>;

struct MorTerm {
    MorOp op = MorOp::Id;
    ObjPtr obj;                 // Id
    std::string name;           // Named
    ConstKind kind{};           // Const
    std::vector<ObjPtr> args;   // Const
    MorPtr a;
    MorPtr b;
};

MorPtr m_id(ObjPtr a);
MorPtr m_named(const std::string& name);
MorPtr m_seq(MorPtr f, MorPtr g);
MorPtr m_seq(std::initializer_list<MorPtr> fs);
MorPtr m_tensor(MorPtr f, MorPtr g);
MorPtr m_par(MorPtr f, MorPtr g);
MorPtr m_dag(MorPtr f);
MorPtr m_conj(MorPtr f);
MorPtr m_ddag(MorPtr f);
// Throws TypeError on arity mismatch.
MorPtr m_const(ConstKind k, std::vector<ObjPtr> args);

bool mor_term_equal(const MorTerm& x, const MorTerm& y);
std::string mor_to_string(const MorTerm& t);
inline std::string mor_to_string(const MorPtr& t) { return mor_to_string(*t); }
MorPtr mor_subst(const MorPtr& t, const std::map<std::string, ObjPtr>& objs,
                 const std::map<std::string, MorPtr>& mors);

ObjPtr parse_obj(const std::string& text);
MorPtr parse_mor(const std::string& text);

struct TypeJudgment {
    ObjPtr dom;
    ObjPtr cod;
};

struct TypeEnv {
    // When set, atoms outside it are rejected.
    std::optional<std::set<std::string>> atoms;
    std::map<std::string, TypeJudgment> named;
};

// Signature of a constant instantiated at the given arguments.
TypeJudgment const_signature(ConstKind k, const std::vector<ObjPtr>& args);

// caps == nullptr skips the capability check.
TypeJudgment typecheck_mor(const MorTerm& t, const TypeEnv& env, const Caps* caps = nullptr);
inline TypeJudgment typecheck_mor(const MorPtr& t, const TypeEnv& env, const Caps* caps = nullptr) {
    return typecheck_mor(*t, env, caps);
}

}  // namespace muc

#endif
