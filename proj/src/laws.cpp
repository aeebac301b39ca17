#include "muc/laws.hpp"

namespace muc {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Rng instance_rng(std::uint64_t seed, const std::string& law, std::size_t index) {
    std::uint64_t h = fnv1a(law);
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                     static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(sq);
}

ModelEnv pool_env(const ProbeConfig& cfg) {
    ModelEnv env;
    env.atoms = cfg.atoms;
    return env;
}

struct Evaluated {
    Mor lhs;
    Mor rhs;
};

// Binds object variables to concrete objects and evaluates both sides.
// values holds morphism variable draws; missing ones are drawn from rng.
Evaluated evaluate(const LawSpec& law, const Assignment& at, const ProbeConfig& cfg, const Model& M,
                   std::map<std::string, Mor>& values, Rng* rng) {
    ModelEnv penv = pool_env(cfg);
    Evaluator pe(M, penv);
    ModelEnv lenv;
    for (const auto& v : law.obj_vars) lenv.atoms[v] = pe.obj(at.object_terms.at(v));
    Evaluator le(M, lenv);
    for (const auto& mv : law.mor_vars) {
        if (values.count(mv.name)) continue;
        Obj d = le.obj(parse_obj(mv.dom));
        Obj c = le.obj(parse_obj(mv.cod));
        values[mv.name] = mv.unitary ? M.random_unitary(d, *rng) : M.random_mor(d, c, *rng);
    }
    return {le.mor(law.lhs, values), le.mor(law.rhs, values)};
}

nlohmann::json objects_json(const Assignment& a) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [v, s] : a.objects) j[v] = s;
    return j;
}

}  // namespace

std::vector<ObjPtr> enumerate_objects(const ProbeConfig& cfg) {
    std::vector<std::vector<ObjPtr>> by_size(cfg.max_size + 1);
    for (const auto& a : cfg.atom_order) by_size[1].push_back(o_atom(a));
    by_size[1].push_back(o_top());
    by_size[1].push_back(o_bot());
    for (int n = 2; n <= cfg.max_size; ++n) {
        for (int l = 1; l < n; ++l) {
            for (const auto& x : by_size[l]) {
                for (const auto& y : by_size[n - l]) {
                    by_size[n].push_back(o_tensor(x, y));
                    by_size[n].push_back(o_par(x, y));
                }
            }
        }
    }
    std::vector<ObjPtr> out;
    for (int n = 1; n <= cfg.max_size; ++n)
        for (auto& o : by_size[n]) out.push_back(std::move(o));
    return out;
}

std::vector<Assignment> enumerate_instances(const LawSpec& law, const ProbeConfig& cfg) {
    std::size_t nv = law.obj_vars.size();
    auto count_tuples = [nv](std::size_t n) {
        std::size_t t = 1;
        for (std::size_t i = 0; i < nv; ++i) t *= n;
        return t;
    };
    std::vector<ObjPtr> pool = enumerate_objects(cfg);
    if (cfg.min_tuples && nv > 0 && count_tuples(pool.size()) < cfg.min_tuples) {
        ProbeConfig big = cfg;
        big.max_size = cfg.max_size + 2;
        auto more = enumerate_objects(big);
        for (std::size_t i = pool.size(); i < more.size() && count_tuples(pool.size()) < cfg.min_tuples; ++i)
            pool.push_back(more[i]);
    }
    std::size_t tuples = count_tuples(pool.size());
    std::size_t count = tuples;
    if (!law.mor_vars.empty()) count = std::max<std::size_t>(tuples, static_cast<std::size_t>(cfg.samples));
    if (cfg.max_instances && count > cfg.max_instances) count = cfg.max_instances;
    std::vector<Assignment> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t code = i % tuples;
        Assignment a;
        a.index = i;
        for (std::size_t v = 0; v < nv; ++v) {
            const ObjPtr& t = pool[code % pool.size()];
            code /= pool.size();
            a.objects.emplace_back(law.obj_vars[v], obj_to_string(*t));
            a.object_terms[law.obj_vars[v]] = t;
        }
        out.push_back(std::move(a));
    }
    return out;
}

bool law_applicable(const LawSpec& law, const Model& M) { return M.caps().covers(law.caps); }

LawReport check_law(const LawSpec& law, const ProbeConfig& cfg, const Model& M) {
    LawReport r;
    r.law = law.id;
    r.model = M.name();
    r.seed = cfg.seed;
    for (const auto& at : enumerate_instances(law, cfg)) {
        Rng rng = instance_rng(cfg.seed, law.id, at.index);
        std::map<std::string, Mor> values;
        Failure f;
        f.at = at;
        try {
            Evaluated e = evaluate(law, at, cfg, M, values, &rng);
            ++r.instances;
            if (M.equal(e.lhs, e.rhs)) continue;
            f.kind = "mismatch";
            f.lhs = M.dump(e.lhs);
            f.rhs = M.dump(e.rhs);
        } catch (const FragmentError& e) {
            ++r.skipped;
            ++r.skip_reasons[e.code()];
            continue;
        } catch (const std::exception& e) {
            ++r.instances;
            f.kind = "error";
            f.message = e.what();
        }
        f.values = values;
        f.morphisms = nlohmann::json::object();
        for (const auto& [n, m] : values) f.morphisms[n] = M.dump(m);
        r.failures.push_back(std::move(f));
    }
    return r;
}

bool recheck_failure(const LawSpec& law, const Failure& f, const ProbeConfig& cfg, const Model& M) {
    std::map<std::string, Mor> values = f.values;
    try {
        Evaluated e = evaluate(law, f.at, cfg, M, values, nullptr);
        return !M.equal(e.lhs, e.rhs);
    } catch (const FragmentError&) {
        return false;
    } catch (const std::exception&) {
        return f.kind == "error";
    }
}

std::vector<LawReport> run_suite(const ProbeConfig& cfg, const Model& M, const std::vector<std::string>& filters) {
    std::vector<LawReport> out;
    for (const auto& law : catalog()) {
        bool hit = filters.empty();
        for (const auto& f : filters) hit = hit || law_matches(law, f);
        if (!hit || !law_applicable(law, M)) continue;
        out.push_back(check_law(law, cfg, M));
    }
    return out;
}

std::vector<LawReport> run_suite(const ProbeConfig& cfg, const Model& M, const std::string& filter) {
    if (filter.empty()) return run_suite(cfg, M, std::vector<std::string>{});
    return run_suite(cfg, M, std::vector<std::string>{filter});
}

nlohmann::json LawReport::to_json() const {
    nlohmann::json j;
    j["law"] = law;
    j["model"] = model;
    j["seed"] = seed;
    j["instances"] = instances;
    j["skipped"] = skipped;
    if (!skip_reasons.empty()) j["skip_reasons"] = skip_reasons;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json x;
        x["kind"] = f.kind;
        x["index"] = f.at.index;
        x["objects"] = objects_json(f.at);
        x["morphisms"] = f.morphisms;
        if (f.kind == "mismatch") {
            x["lhs"] = f.lhs;
            x["rhs"] = f.rhs;
        } else {
            x["message"] = f.message;
        }
        fs.push_back(std::move(x));
    }
    j["failures"] = std::move(fs);
    return j;
}

nlohmann::json suite_to_json(const std::vector<LawReport>& reports) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : reports) a.push_back(r.to_json());
    return a;
}

}  // namespace muc
