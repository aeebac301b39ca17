#ifndef MUC_CLI_HPP
#define MUC_CLI_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "muc/model.hpp"

namespace muc {

// Exit statuses of the command-line tool.
enum Exit : int { kExitPass = 0, kExitLawFailure = 1, kExitConfig = 2, kExitType = 3 };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string model = "ffvec";
    std::string env;  // path; empty = the model's default pool
    std::uint64_t seed = 42;
    int max_size = 2;
    std::vector<std::string> laws;  // filters; empty = all
    bool json = false;
    int samples = 25;
    std::size_t max_instances = 200;  // per law; 0 = no cap
    std::string gens;                 // generator file for unitary-core
    std::string expr;
};

// "ffvec", "ffvec[<mutation>]", "chu", "finmat".
std::unique_ptr<Model> make_model(const std::string& name);
std::vector<std::string> model_names();

// Atoms and named morphisms from environment JSON. Matrix fields may be
// inline or a path relative to base_dir.
ModelEnv load_env(const Model& M, const nlohmann::json& j, const std::string& base_dir = ".");
ModelEnv default_env(const Model& M);
// Model payload for a morphism dom -> cod (the format dump() writes).
Mor parse_payload(const Model& M, const Obj& dom, const Obj& cod, const nlohmann::json& j,
                  const std::string& base_dir = ".");

int cmd_laws(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_unitary_core(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace muc

#endif
