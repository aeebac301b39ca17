#ifndef MUC_LAWS_HPP
#define MUC_LAWS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "muc/model.hpp"

namespace muc {

struct MorVar {
    std::string name;
    std::string dom;  // object syntax over the law's object variables
    std::string cod;
    bool unitary = false;  // drawn with random_unitary (dom == cod)
};

struct LawSpec {
    std::string id;  // "FAMILY.tag", with "/package" for functor laws
    std::vector<std::string> obj_vars;
    std::vector<MorVar> mor_vars;
    MorPtr lhs;
    MorPtr rhs;
    Caps caps;  // union of everything lhs and rhs use
    std::string package;  // empty unless a functor law

    std::string base_id() const;
};

// Term-level functor data for the identity-on-objects packages. Strings
// are morphism syntax instantiated at object syntax arguments.
struct View {
    std::string name;  // "std", "parpar" or "tenten"
    bool tensor_is_ox;
    bool par_is_op;
};

struct FunctorPackage {
    std::string name;
    View src;
    View tgt;
    std::string (*m_ox)(const std::string& a, const std::string& b);
    std::string (*m_top)();
    std::string (*n_op)(const std::string& a, const std::string& b);
    std::string (*n_bot)();
    bool dagger_preserving;  // preservator is the identity
};

const std::vector<FunctorPackage>& functor_packages();

const std::vector<LawSpec>& catalog();
const LawSpec* find_law(const std::string& id);

// Exact id, base id (package suffix dropped), or a prefix ending in '*'.
bool law_matches(const LawSpec& law, const std::string& filter);

struct ProbeConfig {
    std::map<std::string, Obj> atoms;  // atom pool
    std::vector<std::string> atom_order;
    int max_size = 1;
    int samples = 25;  // minimum morphism draws per morphism variable
    std::uint64_t seed = 42;
    // Per-law cap on checked instances; 0 = no cap.
    std::size_t max_instances = 0;
    // When nonzero, laws with fewer object tuples than this draw extra pool
    // objects, in order, from the next size layers until they reach it.
    std::size_t min_tuples = 0;
};

struct Assignment {
    std::vector<std::pair<std::string, std::string>> objects;  // var -> printed term
    std::map<std::string, ObjPtr> object_terms;
    std::size_t index = 0;
};

// Object variables range over all terms from pool atoms, Top and Bot under
// (x) and (+) with at most max_size leaves. Deterministic.
std::vector<ObjPtr> enumerate_objects(const ProbeConfig& cfg);
std::vector<Assignment> enumerate_instances(const LawSpec& law, const ProbeConfig& cfg);

struct Failure {
    std::string kind;  // "mismatch" or "error"
    Assignment at;
    std::map<std::string, Mor> values;  // morphism variable draws
    nlohmann::json morphisms;
    nlohmann::json lhs;
    nlohmann::json rhs;
    std::string message;
};

struct LawReport {
    std::string law;
    std::string model;
    std::uint64_t seed = 0;
    std::size_t instances = 0;  // checked, excluding skipped
    std::size_t skipped = 0;
    std::map<std::string, std::size_t> skip_reasons;
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

bool law_applicable(const LawSpec& law, const Model& M);

LawReport check_law(const LawSpec& law, const ProbeConfig& cfg, const Model& M);
// Applicable laws matching the filter (empty filter = all), in catalog order.
std::vector<LawReport> run_suite(const ProbeConfig& cfg, const Model& M, const std::string& filter = "");
std::vector<LawReport> run_suite(const ProbeConfig& cfg, const Model& M, const std::vector<std::string>& filters);

// Re-evaluates one recorded failure; true when it still fails.
bool recheck_failure(const LawSpec& law, const Failure& f, const ProbeConfig& cfg, const Model& M);

nlohmann::json suite_to_json(const std::vector<LawReport>& reports);

}  // namespace muc

#endif
