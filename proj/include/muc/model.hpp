#ifndef MUC_MODEL_HPP
#define MUC_MODEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "muc/constants.hpp"
#include "muc/errors.hpp"
#include "muc/terms.hpp"

namespace muc {

struct ObjData {
    virtual ~ObjData() = default;
    virtual std::string describe() const = 0;
};
using Obj = std::shared_ptr<const ObjData>;

struct MorData {
    Obj dom;
    Obj cod;
    virtual ~MorData() = default;
};
using Mor = std::shared_ptr<const MorData>;

using Rng = std::mt19937_64;

/*
 * A concrete model. Composition is diagrammatic: compose(f, g) is "f ; g".
 *
 * supply() returns the structural constant of the given kind at concrete
 * objects. The base implementation derives the kinds that have generic
 * constructions (inverses, mixor, right duals, cyclor, sigma, omega,
 * dualizor); models override it for their primitive constants and fall
 * back to Model::supply for the rest.
 */
class Model {
public:
    virtual ~Model() = default;

    virtual std::string name() const = 0;
    virtual Caps caps() const = 0;

    virtual Obj top() const = 0;
    virtual Obj bot() const = 0;
    virtual Obj tensor(const Obj& a, const Obj& b) const = 0;
    virtual Obj par(const Obj& a, const Obj& b) const = 0;
    virtual Obj dag(const Obj& a) const;
    virtual Obj dual(const Obj& a) const;
    // In the symmetric models the left dual is the right dual.
    virtual Obj dual_left(const Obj& a) const { return dual(a); }
    virtual Obj conj(const Obj& a) const;
    virtual bool obj_equal(const Obj& a, const Obj& b) const = 0;

    virtual Mor id(const Obj& a) const = 0;
    virtual Mor compose(const Mor& f, const Mor& g) const = 0;
    virtual Mor tensor_map(const Mor& f, const Mor& g) const = 0;
    virtual Mor par_map(const Mor& f, const Mor& g) const = 0;
    virtual Mor dag_map(const Mor& f) const;
    virtual Mor conj_map(const Mor& f) const;
    virtual bool equal(const Mor& f, const Mor& g) const = 0;
    // nullopt when f is not invertible
    virtual std::optional<Mor> inverse(const Mor& f) const;
    // f : X -> Y gives f^* : Y^* -> X^*, built from the chosen duals
    virtual Mor dual_map(const Mor& f) const;

    virtual Mor supply(ConstKind k, const std::vector<Obj>& args) const;

    virtual bool is_unitary(const Obj&) const { return false; }

    virtual Mor random_mor(const Obj& dom, const Obj& cod, Rng& rng) const = 0;
    // A random unitary automorphism of a unitary object.
    virtual Mor random_unitary(const Obj& a, Rng& rng) const;
    virtual nlohmann::json dump(const Mor& f) const = 0;

    Mor c(ConstKind k, std::vector<Obj> args = {}) const { return supply(k, args); }
    Mor seq(std::initializer_list<Mor> fs) const;
    Mor invert(const Mor& f) const;  // throws NotInvertible

protected:
    Mor generic_supply(ConstKind k, const std::vector<Obj>& args) const;
    void require(const Caps& need, const std::string& what) const;
};

// X -> Y for two left duals X, Y of the same Z, given eta_Y : Top -> Y (+) Z
// and eps_X : Z (x) X -> Bot:
// uL_ox^-1 ; (eta_Y (x) 1) ; dR[Y,Z,X] ; (1 (+) eps_X) ; uR_op
Mor transfer_left_dual(const Model& M, const Obj& X, const Obj& Y, const Obj& Z, const Mor& eta_Y,
                       const Mor& eps_X);

struct NamedMor {
    ObjPtr dom;
    ObjPtr cod;
    Mor value;
};

struct ModelEnv {
    std::map<std::string, Obj> atoms;
    std::map<std::string, NamedMor> named;

    TypeEnv type_env() const;
};

/*
 * Compositional evaluation of terms. Objects are cached per printed term
 * for the lifetime of the evaluator.
 */
class Evaluator {
public:
    Evaluator(const Model& m, const ModelEnv& env) : model_(m), env_(env) {}

    Obj obj(const ObjPtr& t);
    // extra binds morphism variables on top of the env's named morphisms
    Mor mor(const MorPtr& t, const std::map<std::string, Mor>& extra = {});

    const Model& model() const { return model_; }

private:
    const Model& model_;
    const ModelEnv& env_;
    std::map<std::string, Obj> cache_;
};

Mor interp_mor(const MorPtr& t, const ModelEnv& env, const Model& m);

// Concrete dom and cod of a constant at the given objects.
std::pair<Obj, Obj> const_endpoints(const Model& M, ConstKind k, const std::vector<Obj>& args);

}  // namespace muc

#endif
