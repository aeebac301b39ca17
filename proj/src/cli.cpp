#include "muc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "muc/chu.hpp"
#include "muc/ffvec.hpp"
#include "muc/finmat.hpp"
#include "muc/laws.hpp"
#include "muc/unitary.hpp"

namespace muc {

namespace {

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string dir_of(const std::string& path) {
    std::string d = std::filesystem::path(path).parent_path().string();
    return d.empty() ? "." : d;
}

DenseMatrix matrix_field(const nlohmann::json& v, const std::string& base_dir) {
    if (v.is_string()) return mat_from_json(read_json_file(base_dir + "/" + v.get<std::string>()));
    return mat_from_json(v);
}

GR scalar_field(const nlohmann::json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto comma = s.find(',');
        if (comma == std::string::npos) return GR(parse_rational(s), Rational(0));
        return GR(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
    }
    return gr_from_json(v);
}

FinTag parse_tag(const std::string& s) {
    for (FinTag t : {FinTag::None, FinTag::Fin, FinTag::All, FinTag::FinRows, FinTag::FinCols, FinTag::RowFin,
                     FinTag::ColFin}) {
        if (tag_name(t) == s) return t;
    }
    throw ConfigError("unknown finiteness tag '" + s + "'");
}

Obj parse_atom(const Model& M, const std::string& name, const nlohmann::json& j, const std::string& base_dir) {
    if (dynamic_cast<const FfvecModel*>(&M)) {
        if (j.contains("labels")) return FfvecModel::space(j.at("labels").get<std::vector<std::string>>());
        return FfvecModel::space(j.at("dim").get<std::size_t>(), name);
    }
    if (dynamic_cast<const ChuModel*>(&M)) {
        DenseMatrix psi = matrix_field(j.contains("psi") ? j.at("psi") : j.at("psi0"), base_dir);
        if ((j.contains("dimA") && j.at("dimA").get<std::size_t>() != psi.rows()) ||
            (j.contains("dimB") && j.at("dimB").get<std::size_t>() != psi.cols())) {
            throw ConfigError("atom " + name + ": psi shape does not match dimA/dimB");
        }
        return ChuModel::object(std::move(psi));
    }
    if (dynamic_cast<const FinmatModel*>(&M)) {
        if (j.contains("dim")) return FinmatModel::finite(j.at("dim").get<std::size_t>(), name);
        std::string web = j.at("web").get<std::string>();
        Web w = web == "finite" ? Web::Finite : web == "natprod" ? Web::NatProd : web == "natsq" ? Web::NatSq
                                                                                                   : throw ConfigError("unknown web '" + web + "'");
        std::vector<std::string> labels = j.value("labels", std::vector<std::string>{"*"});
        return FinmatModel::space(w, std::move(labels), parse_tag(j.value("tag", std::string("None"))));
    }
    throw ConfigError("model " + M.name() + " has no environment format");
}

std::map<std::pair<WebIdx, WebIdx>, GR> finmat_sparse(const nlohmann::json& j) {
    std::map<std::pair<WebIdx, WebIdx>, GR> s;
    auto idx = [](const nlohmann::json& a) {
        WebIdx w;
        w.l = a.at(0).get<std::size_t>();
        if (a.size() > 1) w.n = a.at(1).get<std::uint64_t>();
        if (a.size() > 2) w.m = a.at(2).get<std::uint64_t>();
        return w;
    };
    for (const auto& e : j) s[{idx(e.at("row")), idx(e.at("col"))}] = gr_from_json(e.at("v"));
    return s;
}

}  // namespace

Mor parse_payload(const Model& M, const Obj& dom, const Obj& cod, const nlohmann::json& j, const std::string& base_dir) {
    if (auto F = dynamic_cast<const FfvecModel*>(&M)) {
        return F->make(dom, cod, matrix_field(j.contains("matrix") ? j.at("matrix") : j, base_dir));
    }
    if (auto C = dynamic_cast<const ChuModel*>(&M)) {
        return C->make(dom, cod, matrix_field(j.at("f"), base_dir), matrix_field(j.at("g"), base_dir));
    }
    if (auto N = dynamic_cast<const FinmatModel*>(&M)) {
        const FinSpace& d = FinmatModel::space_of(dom);
        const FinSpace& c = FinmatModel::space_of(cod);
        const nlohmann::json entries = j.value("sparse", nlohmann::json::array());
        auto sparse = finmat_sparse(entries);
        std::optional<DenseMatrix> tail;
        if (j.contains("diagTail")) {
            const auto& t = j.at("diagTail");
            if (t.is_object()) {
                tail = matrix_field(t, base_dir);
            } else {
                if (d.fin() != c.fin()) throw ConfigError("a scalar diagTail needs equal finite factors");
                tail = DenseMatrix::identity(d.fin()).scaled(scalar_field(t));
            }
        }
        if (j.contains("diagPrefix")) {
            if (d.fin() != c.fin() || !d.nat()) throw ConfigError("diagPrefix needs an N web with equal finite factors");
            const auto& p = j.at("diagPrefix");
            for (std::size_t k = 0; k < p.size(); ++k) {
                GR v = scalar_field(p[k]);
                for (std::size_t l = 0; l < d.fin(); ++l) {
                    WebIdx w = d.web == Web::NatSq ? WebIdx{0, k, k} : WebIdx{l, k, 0};
                    sparse[{w, w}] = v;
                }
            }
        }
        return N->make(dom, cod, std::move(sparse), std::move(tail));
    }
    if (auto U = dynamic_cast<const UnitaryModel*>(&M)) {
        return U->wrap(parse_payload(U->base(), UnitaryModel::uobj(dom).carrier, UnitaryModel::uobj(cod).carrier, j, base_dir),
                       dom, cod);
    }
    throw ConfigError("model " + M.name() + " has no payload format");
}

std::vector<std::string> model_names() {
    std::vector<std::string> v{"ffvec", "chu", "finmat"};
    for (auto m : all_mutations()) v.push_back("ffvec[" + mutation_name(m) + "]");
    return v;
}

std::unique_ptr<Model> make_model(const std::string& name) {
    if (name == "ffvec") return std::make_unique<FfvecModel>();
    if (name == "chu") return std::make_unique<ChuModel>();
    if (name == "finmat") return std::make_unique<FinmatModel>();
    for (auto m : all_mutations()) {
        if (name == "ffvec[" + mutation_name(m) + "]") return std::make_unique<FfvecModel>(m);
    }
    throw ConfigError("unknown model '" + name + "'");
}

ModelEnv load_env(const Model& M, const nlohmann::json& j, const std::string& base_dir) {
    ModelEnv env;
    if (!j.is_object()) throw ConfigError("environment must be a JSON object");
    const nlohmann::json atoms = j.value("atoms", nlohmann::json::object());
    const nlohmann::json mors = j.value("morphisms", nlohmann::json::object());
    for (const auto& [name, spec] : atoms.items()) {
        env.atoms[name] = parse_atom(M, name, spec, base_dir);
    }
    Evaluator ev(M, env);
    auto obj = [&](const nlohmann::json& t) {
        ObjPtr p = parse_obj(t.get<std::string>());
        std::set<std::string> used;
        obj_atoms(*p, used);
        for (const auto& a : used) {
            if (!env.atoms.count(a)) throw TypeError("unknown atom '" + a + "'");
        }
        return p;
    };
    for (const auto& [name, spec] : mors.items()) {
        ObjPtr d = obj(spec.at("dom"));
        ObjPtr c = obj(spec.at("cod"));
        env.named[name] = {d, c, parse_payload(M, ev.obj(d), ev.obj(c), spec, base_dir)};
    }
    return env;
}

ModelEnv default_env(const Model& M) {
    ModelEnv env;
    if (dynamic_cast<const FfvecModel*>(&M)) {
        env.atoms["A"] = FfvecModel::space(2, "a");
    } else if (dynamic_cast<const ChuModel*>(&M)) {
        // one-dimensional with a non-unit pairing: objects stay 1 x 1 at
        // the default size, where the generic cyclor transfers are cheap
        env.atoms["X"] = ChuModel::object(DenseMatrix::from_rows({{GR(2)}}));
    } else if (dynamic_cast<const FinmatModel*>(&M)) {
        env.atoms["F"] = FinmatModel::finite(2, "f");
        env.atoms["N"] = FinmatModel::nat(FinTag::Fin);
    } else {
        throw ConfigError("no default environment for " + M.name());
    }
    return env;
}

namespace {

struct Setup {
    std::unique_ptr<Model> model;
    ModelEnv env;
    std::vector<std::string> order;
};

Setup setup(const CliConfig& cfg) {
    Setup s;
    s.model = make_model(cfg.model);
    if (cfg.max_size < 1) throw ConfigError("--max-size must be at least 1");
    if (cfg.env.empty()) {
        s.env = default_env(*s.model);
    } else {
        try {
            s.env = load_env(*s.model, read_json_file(cfg.env), dir_of(cfg.env));
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(cfg.env + ": " + e.what());
        }
    }
    for (const auto& [n, _] : s.env.atoms) s.order.push_back(n);
    return s;
}

// Maps exceptions to the exit contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "type error: " << e.what() << "\n";
        return kExitType;
    } catch (const TypeError& e) {
        err << "type error: " << e.what() << "\n";
        return kExitType;
    } catch (const CapabilityError& e) {
        err << "type error: " << e.what() << "\n";
        return kExitType;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace

int cmd_laws(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Setup s = setup(cfg);
        for (const auto& f : cfg.laws) {
            bool any = false;
            for (const auto& law : catalog()) any = any || law_matches(law, f);
            if (!any) throw ConfigError("no law matches '" + f + "'");
        }
        ProbeConfig pc;
        pc.atoms = s.env.atoms;
        pc.atom_order = s.order;
        pc.max_size = cfg.max_size;
        pc.samples = cfg.samples;
        pc.seed = cfg.seed;
        pc.max_instances = cfg.max_instances;
        auto reports = run_suite(pc, *s.model, cfg.laws);

        nlohmann::json failures = nlohmann::json::array();
        for (const auto& r : reports) {
            const nlohmann::json rj = r.to_json();
            for (const auto& f : rj["failures"]) {
                nlohmann::json x = f;
                x["law"] = r.law;
                failures.push_back(std::move(x));
            }
        }
        bool pass = failures.empty();
        if (cfg.json) {
            nlohmann::json j;
            j["model"] = s.model->name();
            j["seed"] = cfg.seed;
            j["max_size"] = cfg.max_size;
            j["laws"] = suite_to_json(reports);
            j["failures"] = failures;
            j["pass"] = pass;
            out << j.dump(2) << "\n";
        } else {
            std::size_t failed = 0;
            for (const auto& r : reports) {
                failed += !r.pass();
                out << (r.pass() ? "PASS " : "FAIL ") << r.law << "  instances=" << r.instances
                    << " skipped=" << r.skipped << "\n";
                const nlohmann::json rj = r.to_json();
                for (const auto& f : rj["failures"]) out << "  witness " << f.dump() << "\n";
            }
            out << reports.size() << " laws, " << failed << " failed (model " << s.model->name() << ", seed "
                << cfg.seed << ")\n";
        }
        return pass ? kExitPass : kExitLawFailure;
    });
}

int cmd_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Setup s = setup(cfg);
        if (cfg.expr.empty()) throw ConfigError("no expression given");
        MorPtr t = parse_mor(cfg.expr);
        Caps caps = s.model->caps();
        TypeJudgment tj = typecheck_mor(*t, s.env.type_env(), &caps);
        Evaluator ev(*s.model, s.env);
        Mor m = ev.mor(t);
        if (cfg.json) {
            nlohmann::json j{{"expr", mor_to_string(*t)},
                             {"dom", obj_to_string(*tj.dom)},
                             {"cod", obj_to_string(*tj.cod)},
                             {"value", s.model->dump(m)}};
            out << j.dump(2) << "\n";
        } else {
            out << mor_to_string(*t) << " : " << obj_to_string(*tj.dom) << " -> " << obj_to_string(*tj.cod) << "\n";
            out << s.model->dump(m).dump() << "\n";
        }
        return kExitPass;
    });
}

int cmd_unitary_core(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Setup s = setup(cfg);
        const Model& M = *s.model;
        std::vector<PreUnitaryObject> gens;
        if (!cfg.gens.empty()) {
            nlohmann::json list = read_json_file(cfg.gens);
            if (!list.is_array()) throw ConfigError(cfg.gens + ": expected a list of generators");
            Evaluator ev(M, s.env);
            Caps caps = M.caps();
            for (std::size_t i = 0; i < list.size(); ++i) {
                const auto& g = list[i];
                std::string name = g.value("name", "G" + std::to_string(i));
                if (g.contains("form")) {
                    auto C = dynamic_cast<const ChuModel*>(&M);
                    if (!C) throw ConfigError("generator " + name + ": forms need the chu model");
                    auto p = chu_preunitary_from_form(*C, matrix_field(g.at("form"), dir_of(cfg.gens)));
                    gens.push_back({name, p.object, p.alpha});
                    continue;
                }
                ObjPtr ot = parse_obj(g.at("object").get<std::string>());
                Obj u = ev.obj(ot);
                Mor alpha;
                const auto& a = g.at("alpha");
                if (a.is_string()) {
                    MorPtr t = parse_mor(a.get<std::string>());
                    typecheck_mor(*t, s.env.type_env(), &caps);
                    alpha = ev.mor(t);
                } else {
                    alpha = parse_payload(M, u, M.dag(u), a, dir_of(cfg.gens));
                }
                gens.push_back({name, u, alpha});
            }
        }

        UnitaryConstruction uc;
        try {
            uc = unitary_construction(gens, M, cfg.max_size);
        } catch (const GeneratorRejected& e) {
            nlohmann::json j{{"model", M.name()}, {"pass", false}, {"rejected", e.what()},
                             {"reason", e.verdict.reason}, {"witness", e.verdict.witness}};
            if (cfg.json) {
                out << j.dump(2) << "\n";
            } else {
                out << "rejected: " << e.what() << "\n  witness " << e.verdict.witness.dump() << "\n";
            }
            return kExitLawFailure;
        }

        bool pass = uc.all_pass();
        if (cfg.json) {
            nlohmann::json objs = nlohmann::json::array();
            for (const auto& o : uc.objects) {
                const UObj& x = UnitaryModel::uobj(o.object);
                nlohmann::json e{{"term", o.term},
                                 {"carrier", x.carrier->describe()},
                                 {"alpha", M.dump(x.alpha)},
                                 {"preu", o.verdict.pass ? "pass" : "fail"},
                                 {"core", verdict_name(o.verdict.core.verdict)}};
                if (!o.verdict.pass) {
                    e["reason"] = o.verdict.reason;
                    e["witness"] = o.verdict.witness;
                }
                objs.push_back(std::move(e));
            }
            nlohmann::json j{{"model", M.name()},
                             {"generators", uc.atom_order},
                             {"max_size", cfg.max_size},
                             {"objects", objs},
                             {"pass", pass},
                             {"core_scope", CoreReport::scope}};
            out << j.dump(2) << "\n";
        } else {
            out << "unitary core of " << M.name() << ": " << gens.size() << " generators, " << uc.objects.size()
                << " objects up to size " << cfg.max_size << "\n";
            for (const auto& o : uc.objects) {
                const UObj& x = UnitaryModel::uobj(o.object);
                out << (o.verdict.pass ? "pass " : "FAIL ") << o.term << "  " << x.carrier->describe()
                    << "  alpha " << M.dump(x.alpha).dump() << "\n";
                if (!o.verdict.pass) out << "  " << o.verdict.reason << " " << o.verdict.witness.dump() << "\n";
            }
        }
        return pass ? kExitPass : kExitLawFailure;
    });
}

}  // namespace muc
