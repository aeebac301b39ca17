#ifndef MUC_UNITARY_HPP
#define MUC_UNITARY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "muc/derived.hpp"
#include "muc/model.hpp"

namespace muc {

struct PreuVerdict {
    bool pass = false;
    bool typed = true;
    bool invertible = false;
    bool equation = false;  // alpha ; dag(alpha^-1) = iota
    CoreReport core;
    std::string reason;      // first failing check
    nlohmann::json witness;  // both sides of the equation when it fails
};

// Exact check of alpha ; (alpha^-1)^dag = iota plus core_probe against probes.
// Throws TypeError when alpha is not typed U -> U^dag.
PreuVerdict preunitary_check(const Model& M, const Obj& u, const Mor& alpha, const std::vector<Obj>& probes);

struct PreUnitaryObject {
    std::string name;
    Obj carrier;
    Mor alpha;  // carrier -> dag(carrier) in the base
};

// alpha = phi (base with unitary structure) or the identity when A = A^dag.
PreUnitaryObject identity_generator(const Model& M, const std::string& name, const Obj& a);

struct UObj : ObjData {
    Obj carrier;
    Mor alpha;
    UObj(Obj c, Mor a) : carrier(std::move(c)), alpha(std::move(a)) {}
    std::string describe() const override { return "U(" + carrier->describe() + ")"; }
};

struct UMor : MorData {
    Mor base;
};

/*
 * Pre-unitary objects of a base model with phi = alpha. Units, tensor, par
 * and dagger carry the alphas
 *   Top: m^-1 ; lam_bot          Bot: m ; lam_top
 *   A (x) B: mx ; (a (+) b) ; lam_op
 *   A (+) B: mx^-1 ; (a (x) b) ; lam_ox
 *   A^dag: (a^-1)^dag            A^*: (a^*)^-1 ; omega
 * Morphisms and every other constant are the base's.
 */
class UnitaryModel : public Model {
public:
    explicit UnitaryModel(const Model& base) : base_(base) {}

    std::string name() const override { return "unitary(" + base_.name() + ")"; }
    Caps caps() const override;

    Obj top() const override;
    Obj bot() const override;
    Obj tensor(const Obj& a, const Obj& b) const override;
    Obj par(const Obj& a, const Obj& b) const override;
    Obj dag(const Obj& a) const override;
    Obj dual(const Obj& a) const override;
    Obj conj(const Obj& a) const override;
    bool obj_equal(const Obj& a, const Obj& b) const override;

    Mor id(const Obj& a) const override;
    Mor compose(const Mor& f, const Mor& g) const override;
    Mor tensor_map(const Mor& f, const Mor& g) const override;
    Mor par_map(const Mor& f, const Mor& g) const override;
    Mor dag_map(const Mor& f) const override;
    Mor conj_map(const Mor& f) const override;
    bool equal(const Mor& f, const Mor& g) const override;
    std::optional<Mor> inverse(const Mor& f) const override;
    Mor dual_map(const Mor& f) const override;

    Mor supply(ConstKind k, const std::vector<Obj>& args) const override;
    bool is_unitary(const Obj&) const override { return true; }

    Mor random_mor(const Obj& dom, const Obj& cod, Rng& rng) const override;
    // The base's unitary generator when alpha is the base phi, else the
    // identity.
    Mor random_unitary(const Obj& a, Rng& rng) const override;
    nlohmann::json dump(const Mor& f) const override { return base_.dump(base_of(f)); }

    Obj object(Obj carrier, Mor alpha) const;
    Mor wrap(Mor base, Obj dom, Obj cod) const;
    static const UObj& uobj(const Obj& a);
    static const Mor& base_of(const Mor& f);

    const Model& base() const { return base_; }

private:
    Obj cached(int op, const Obj& a, const Obj& b, const std::function<Obj()>& make) const;

    const Model& base_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, const ObjData*, const ObjData*>, std::pair<std::vector<Obj>, Obj>> cache_;
};

struct ConstructedObject {
    std::string term;
    Obj object;  // a UObj
    PreuVerdict verdict;
};

struct UnitaryConstruction {
    std::unique_ptr<UnitaryModel> model;
    std::map<std::string, Obj> atoms;  // generator name -> object
    std::vector<std::string> atom_order;
    std::vector<ConstructedObject> objects;

    bool all_pass() const;
};

class GeneratorRejected : public std::runtime_error {
public:
    GeneratorRejected(const std::string& msg, PreuVerdict v) : std::runtime_error(msg), verdict(std::move(v)) {}
    PreuVerdict verdict;
};

// Checks the generators, then closes them and the units under (x) and (+)
// up to max_size leaves, adding the dagger of each term, and re-checks
// every object. Objects equal in carrier and alpha are listed once.
UnitaryConstruction unitary_construction(const std::vector<PreUnitaryObject>& gens, const Model& M,
                                         int max_size = 4);

struct InclusionCheck {
    std::string what;
    bool pass = true;
    std::string detail;
};

struct MUCPackage {
    const UnitaryModel* unitary = nullptr;
    const Model* base = nullptr;
    std::vector<InclusionCheck> checks;
    std::vector<std::pair<std::string, CoreReport>> core_evidence;
    static constexpr const char* scope = "naturality checked on generators only";

    bool pass() const;
    nlohmann::json to_json() const;
};

// The forgetful inclusion with identity laxors and preservator: compares
// every applicable structural constant and the dagger with the base on
// objects from the probe terms, and core-probes them.
MUCPackage muc_inclusion(const UnitaryConstruction& uc, const Model& M, std::uint64_t seed = 42);

struct LinearFunctor {
    std::string name;
    const Model* source = nullptr;  // has unitary structure
    const Model* target = nullptr;
    std::function<Obj(const Obj&)> on_obj;
    std::function<Mor(const Mor&)> on_mor;
    // rho_A : F(A^dag) -> F(A)^dag
    std::function<Mor(const Obj&)> preservator;
};

struct LiftedObject {
    std::string term;
    Obj source;
    Obj image;  // in the Unitary(target) wrapper
    PreuVerdict verdict;
};

struct LiftResult {
    bool ok = true;
    std::vector<LiftedObject> objects;
    std::size_t triangle_checks = 0;
    std::size_t unitary_checks = 0;
    std::vector<std::string> failures;  // witnesses
};

// U |-> (F(U), F(phi_U) ; rho_U) in `lifted`, a Unitary wrapper of F's
// target. Checks each image with preunitary_check, the triangle
// inclusion . F-flat = F on the objects and seeded morphisms, and that
// seeded unitaries stay unitary.
LiftResult fflat_lift(const LinearFunctor& F, const UnitaryModel& lifted,
                      const std::vector<std::pair<std::string, Obj>>& objects, std::uint64_t seed = 42,
                      int samples = 5);

enum class DualStatus { UnitaryDual, NotUnitaryDual, NotADual };

struct DualVerdict {
    DualStatus status = DualStatus::NotADual;
    bool snake_a = false;  // on A
    bool snake_b = false;  // on B
    bool ud_a = false;
    bool ud_b = false;
    bool ddagger_square = false;  // c_op ; mx^-1 ; eps = ddag(m ; eta)
    std::string message;
};

std::string dual_status_name(DualStatus s);

// eta : Top -> B (+) A and eps : A (x) B -> Bot in a model with unitary
// structure. Snakes first; failing them gives NotADual.
DualVerdict unitary_dual_to_ddagger_check(const Model& UM, const Mor& eta, const Mor& eps, const Obj& a,
                                          const Obj& b);

}  // namespace muc

#endif
