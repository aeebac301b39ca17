#ifndef MUC_DERIVED_HPP
#define MUC_DERIVED_HPP

#include <string>
#include <vector>

#include "muc/model.hpp"

namespace muc {

// (1 (x) uL_op^-1) ; (1 (x) (m (+) 1)) ; dL ; (uR_ox (+) 1). Throws
// ModelDefect when the other side of the defining square disagrees.
Mor mixor_from_mix(const Model& M, const Obj& a, const Obj& b);
// (uR_op^-1 (x) 1) ; dR ; (1 (+) (m (x) 1)) ; (1 (+) uL_ox)
Mor mixor_other_path(const Model& M, const Obj& a, const Obj& b);

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdict_name(Verdict v);

struct CoreReport {
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> notes;
    // always stated: the verdict only covers the probes given
    static constexpr const char* scope = "probe-sound, not universally quantified";
};

// mx[A,X] and mx[X,A] invertible for every probe X.
CoreReport core_probe(const Model& M, const Obj& a, const std::vector<Obj>& probes);

// phi_B ; f^dag ; phi_A^-1 for f : A -> B between unitary objects.
Mor derived_ddagger(const Model& M, const Mor& f);
// phi_A = f ; phi_B ; f^dag. Throws NotInvertible for a non-invertible f.
bool unitary_map_check(const Model& M, const Mor& f);

Mor omega_map(const Model& M, const Obj& a);
Mor sigma_map(const Model& M, const Obj& a);
Mor dualizor_map(const Model& M, const Obj& a);

// Laxors of the dual functor, built from the chosen duals.
// B^* (x) A^* -> (A (+) B)^*
Mor dual_laxor_ox(const Model& M, const Obj& a, const Obj& b);
// B^* (+) A^* -> (A (x) B)^*
Mor dual_colaxor_op_inv(const Model& M, const Obj& a, const Obj& b);
// Top -> Bot^*
Mor dual_laxor_top(const Model& M);
// Bot -> Top^*
Mor dual_colaxor_bot_inv(const Model& M);

/*
 * Forwards everything to a base model. Subclasses replace a slice of the
 * structure; generically derived constants are recomputed through the
 * wrapper so they see the replacement.
 */
class DelegatingModel : public Model {
public:
    explicit DelegatingModel(const Model& base) : base_(base) {}

    std::string name() const override { return base_.name(); }
    Caps caps() const override { return base_.caps(); }
    Obj top() const override { return base_.top(); }
    Obj bot() const override { return base_.bot(); }
    Obj tensor(const Obj& a, const Obj& b) const override { return base_.tensor(a, b); }
    Obj par(const Obj& a, const Obj& b) const override { return base_.par(a, b); }
    Obj dag(const Obj& a) const override { return base_.dag(a); }
    Obj dual(const Obj& a) const override { return base_.dual(a); }
    Obj dual_left(const Obj& a) const override { return base_.dual_left(a); }
    Obj conj(const Obj& a) const override { return base_.conj(a); }
    bool obj_equal(const Obj& a, const Obj& b) const override { return base_.obj_equal(a, b); }
    Mor id(const Obj& a) const override { return base_.id(a); }
    Mor compose(const Mor& f, const Mor& g) const override { return base_.compose(f, g); }
    Mor tensor_map(const Mor& f, const Mor& g) const override { return base_.tensor_map(f, g); }
    Mor par_map(const Mor& f, const Mor& g) const override { return base_.par_map(f, g); }
    Mor dag_map(const Mor& f) const override { return base_.dag_map(f); }
    Mor conj_map(const Mor& f) const override { return base_.conj_map(f); }
    bool equal(const Mor& f, const Mor& g) const override { return base_.equal(f, g); }
    std::optional<Mor> inverse(const Mor& f) const override { return base_.inverse(f); }
    Mor dual_map(const Mor& f) const override { return base_.dual_map(f); }
    Mor supply(ConstKind k, const std::vector<Obj>& args) const override;
    bool is_unitary(const Obj& a) const override { return base_.is_unitary(a); }
    Mor random_mor(const Obj& d, const Obj& c, Rng& rng) const override { return base_.random_mor(d, c, rng); }
    Mor random_unitary(const Obj& a, Rng& rng) const override { return base_.random_unitary(a, rng); }
    nlohmann::json dump(const Mor& f) const override { return base_.dump(f); }

    const Model& base() const { return base_; }

protected:
    // Kinds the subclass supplies itself.
    virtual bool overrides(ConstKind) const { return false; }
    virtual Mor own_supply(ConstKind k, const std::vector<Obj>&) const {
        throw CapabilityError(std::string("no own supply for ") + const_info(k).name);
    }

    const Model& base_;
};

// A^dag := bar(A^*), f^dag := bar(f^*), with laxors and involutor built
// from the conjugation and the dual functor.
class DaggerFromConjugation : public DelegatingModel {
public:
    explicit DaggerFromConjugation(const Model& base);
    std::string name() const override { return base_.name() + "+dag-from-conj"; }
    Caps caps() const override;
    Obj dag(const Obj& a) const override;
    Mor dag_map(const Mor& f) const override;

protected:
    bool overrides(ConstKind k) const override;
    Mor own_supply(ConstKind k, const std::vector<Obj>& args) const override;
};

// bar(A) := (A^dag)^*, bar(f) := (f^dag)^*, with conjugating laxors and
// conjugator built from the dagger, omega and the dualizor.
class ConjugationFromDagger : public DelegatingModel {
public:
    explicit ConjugationFromDagger(const Model& base);
    std::string name() const override { return base_.name() + "+conj-from-dag"; }
    Caps caps() const override;
    Obj conj(const Obj& a) const override;
    Mor conj_map(const Mor& f) const override;

protected:
    bool overrides(ConstKind k) const override;
    Mor own_supply(ConstKind k, const std::vector<Obj>& args) const override;
};

bool is_generic_kind(ConstKind k);

}  // namespace muc

#endif
