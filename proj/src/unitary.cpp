#include "muc/unitary.hpp"

#include <set>

namespace muc {

using K = ConstKind;

PreuVerdict preunitary_check(const Model& M, const Obj& u, const Mor& alpha, const std::vector<Obj>& probes) {
    PreuVerdict v;
    Obj du = M.dag(u);
    if (!M.obj_equal(alpha->dom, u) || !M.obj_equal(alpha->cod, du)) {
        throw TypeError("alpha must be " + u->describe() + " -> " + du->describe() + ", got " +
                        alpha->dom->describe() + " -> " + alpha->cod->describe());
    }
    v.core = core_probe(M, u, probes);
    std::optional<Mor> inv = M.inverse(alpha);
    v.invertible = inv.has_value();
    if (!v.invertible) {
        v.reason = "alpha is not invertible";
        v.witness = {{"alpha", M.dump(alpha)}};
        return v;
    }
    Mor lhs = M.compose(alpha, M.dag_map(*inv));
    Mor rhs = M.c(K::Iota, {u});
    v.equation = M.equal(lhs, rhs);
    if (!v.equation) {
        v.reason = "alpha ; dag(alpha^-1) differs from iota";
        v.witness = {{"alpha", M.dump(alpha)}, {"lhs", M.dump(lhs)}, {"rhs", M.dump(rhs)}};
    } else if (v.core.verdict != Verdict::Pass) {
        v.reason = "core probe " + verdict_name(v.core.verdict);
        v.witness = {{"notes", v.core.notes}};
    }
    v.pass = v.equation && v.core.verdict == Verdict::Pass;
    return v;
}

PreUnitaryObject identity_generator(const Model& M, const std::string& name, const Obj& a) {
    if (M.caps().unitary) return {name, a, M.c(K::Phi, {a})};
    if (!M.obj_equal(a, M.dag(a))) {
        throw TypeError("identity alpha needs " + a->describe() + " = its dagger");
    }
    return {name, a, M.id(a)};
}

// ---------------------------------------------------------------------------

Caps UnitaryModel::caps() const {
    Caps c = base_.caps();
    c.unitary = true;
    c.conjugation = false;
    return c;
}

const UObj& UnitaryModel::uobj(const Obj& a) {
    auto p = dynamic_cast<const UObj*>(a.get());
    if (!p) throw TypeError("not a pre-unitary object: " + a->describe());
    return *p;
}

const Mor& UnitaryModel::base_of(const Mor& f) {
    auto p = dynamic_cast<const UMor*>(f.get());
    if (!p) throw TypeError("not a morphism of a unitary model");
    return p->base;
}

Obj UnitaryModel::object(Obj carrier, Mor alpha) const { return std::make_shared<UObj>(std::move(carrier), std::move(alpha)); }

Mor UnitaryModel::wrap(Mor base, Obj dom, Obj cod) const {
    auto m = std::make_shared<UMor>();
    m->base = std::move(base);
    m->dom = std::move(dom);
    m->cod = std::move(cod);
    return m;
}

Obj UnitaryModel::cached(int op, const Obj& a, const Obj& b, const std::function<Obj()>& make) const {
    auto key = std::make_tuple(op, a.get(), b.get());
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second.second;
    }
    Obj r = make();
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, std::make_pair(std::vector<Obj>{a, b}, r));
    return r;
}

Obj UnitaryModel::top() const {
    return cached(0, nullptr, nullptr, [&] {
        return object(base_.top(), base_.seq({base_.c(K::MInv), base_.c(K::LamBot)}));
    });
}

Obj UnitaryModel::bot() const {
    return cached(1, nullptr, nullptr, [&] {
        return object(base_.bot(), base_.seq({base_.c(K::M), base_.c(K::LamTop)}));
    });
}

Obj UnitaryModel::tensor(const Obj& a, const Obj& b) const {
    return cached(2, a, b, [&] {
        const UObj& x = uobj(a);
        const UObj& y = uobj(b);
        return object(base_.tensor(x.carrier, y.carrier),
                      base_.seq({base_.c(K::Mx, {x.carrier, y.carrier}), base_.par_map(x.alpha, y.alpha),
                                 base_.c(K::LamOp, {x.carrier, y.carrier})}));
    });
}

Obj UnitaryModel::par(const Obj& a, const Obj& b) const {
    return cached(3, a, b, [&] {
        const UObj& x = uobj(a);
        const UObj& y = uobj(b);
        return object(base_.par(x.carrier, y.carrier),
                      base_.seq({base_.c(K::MxInv, {x.carrier, y.carrier}), base_.tensor_map(x.alpha, y.alpha),
                                 base_.c(K::LamOx, {x.carrier, y.carrier})}));
    });
}

Obj UnitaryModel::dag(const Obj& a) const {
    return cached(4, a, nullptr, [&] {
        const UObj& x = uobj(a);
        return object(base_.dag(x.carrier), base_.dag_map(base_.invert(x.alpha)));
    });
}

Obj UnitaryModel::dual(const Obj& a) const {
    return cached(5, a, nullptr, [&] {
        const UObj& x = uobj(a);
        return object(base_.dual(x.carrier),
                      base_.compose(base_.invert(base_.dual_map(x.alpha)), base_.c(K::Omega, {x.carrier})));
    });
}

Obj UnitaryModel::conj(const Obj&) const { throw CapabilityError(name() + " has no conjugation"); }

bool UnitaryModel::obj_equal(const Obj& a, const Obj& b) const {
    if (a == b) return true;
    const UObj& x = uobj(a);
    const UObj& y = uobj(b);
    return base_.obj_equal(x.carrier, y.carrier) && base_.equal(x.alpha, y.alpha);
}

Mor UnitaryModel::id(const Obj& a) const { return wrap(base_.id(uobj(a).carrier), a, a); }

Mor UnitaryModel::compose(const Mor& f, const Mor& g) const {
    return wrap(base_.compose(base_of(f), base_of(g)), f->dom, g->cod);
}

Mor UnitaryModel::tensor_map(const Mor& f, const Mor& g) const {
    return wrap(base_.tensor_map(base_of(f), base_of(g)), tensor(f->dom, g->dom), tensor(f->cod, g->cod));
}

Mor UnitaryModel::par_map(const Mor& f, const Mor& g) const {
    return wrap(base_.par_map(base_of(f), base_of(g)), par(f->dom, g->dom), par(f->cod, g->cod));
}

Mor UnitaryModel::dag_map(const Mor& f) const { return wrap(base_.dag_map(base_of(f)), dag(f->cod), dag(f->dom)); }

Mor UnitaryModel::conj_map(const Mor&) const { throw CapabilityError(name() + " has no conjugation"); }

bool UnitaryModel::equal(const Mor& f, const Mor& g) const { return base_.equal(base_of(f), base_of(g)); }

std::optional<Mor> UnitaryModel::inverse(const Mor& f) const {
    auto inv = base_.inverse(base_of(f));
    if (!inv) return std::nullopt;
    return wrap(*inv, f->cod, f->dom);
}

Mor UnitaryModel::dual_map(const Mor& f) const {
    return wrap(base_.dual_map(base_of(f)), dual(f->cod), dual(f->dom));
}

Mor UnitaryModel::supply(ConstKind k, const std::vector<Obj>& args) const {
    const ConstInfo& info = const_info(k);
    require(info.needs, info.name);
    if (k == K::Phi) return wrap(uobj(args.at(0)).alpha, args[0], dag(args[0]));
    if (k == K::PhiInv) return wrap(base_.invert(uobj(args.at(0)).alpha), dag(args[0]), args[0]);
    std::vector<Obj> carriers;
    for (const auto& a : args) carriers.push_back(uobj(a).carrier);
    Mor b = base_.supply(k, carriers);
    auto [d, c] = const_endpoints(*this, k, args);
    return wrap(b, d, c);
}

Mor UnitaryModel::random_mor(const Obj& dom, const Obj& cod, Rng& rng) const {
    return wrap(base_.random_mor(uobj(dom).carrier, uobj(cod).carrier, rng), dom, cod);
}

Mor UnitaryModel::random_unitary(const Obj& a, Rng& rng) const {
    const UObj& x = uobj(a);
    if (base_.caps().unitary && base_.equal(x.alpha, base_.c(K::Phi, {x.carrier}))) {
        return wrap(base_.random_unitary(x.carrier, rng), a, a);
    }
    return id(a);
}

// ---------------------------------------------------------------------------

bool UnitaryConstruction::all_pass() const {
    for (const auto& o : objects) {
        if (!o.verdict.pass) return false;
    }
    return true;
}

UnitaryConstruction unitary_construction(const std::vector<PreUnitaryObject>& gens, const Model& M, int max_size) {
    std::vector<Obj> probes{M.top()};
    for (const auto& g : gens) probes.push_back(g.carrier);
    for (const auto& g : gens) {
        PreuVerdict v = preunitary_check(M, g.carrier, g.alpha, probes);
        if (!v.pass) throw GeneratorRejected("generator " + g.name + " fails: " + v.reason, v);
    }

    UnitaryConstruction uc;
    uc.model = std::make_unique<UnitaryModel>(M);
    const UnitaryModel& U = *uc.model;

    std::vector<std::vector<std::pair<std::string, Obj>>> levels(static_cast<std::size_t>(max_size) + 1);
    for (const auto& g : gens) {
        Obj o = U.object(g.carrier, g.alpha);
        uc.atoms[g.name] = o;
        uc.atom_order.push_back(g.name);
        levels[1].emplace_back(g.name, o);
    }
    levels[1].emplace_back("Top", U.top());
    levels[1].emplace_back("Bot", U.bot());
    for (int n = 2; n <= max_size; ++n) {
        for (int i = 1; i < n; ++i) {
            for (const auto& [tx, x] : levels[static_cast<std::size_t>(i)]) {
                for (const auto& [ty, y] : levels[static_cast<std::size_t>(n - i)]) {
                    levels[static_cast<std::size_t>(n)].emplace_back("(" + tx + " (x) " + ty + ")", U.tensor(x, y));
                    levels[static_cast<std::size_t>(n)].emplace_back("(" + tx + " (+) " + ty + ")", U.par(x, y));
                }
            }
        }
    }

    std::set<std::string> seen;
    auto add = [&](const std::string& term, const Obj& o) {
        const UObj& x = U.uobj(o);
        std::string key = x.carrier->describe() + "|" + M.dump(x.alpha).dump();
        if (!seen.insert(key).second) return;
        ConstructedObject co{term, o, {}};
        co.verdict = preunitary_check(M, x.carrier, x.alpha, probes);
        uc.objects.push_back(std::move(co));
    };
    for (const auto& level : levels) {
        for (const auto& [t, o] : level) {
            add(t, o);
            add("dag(" + t + ")", U.dag(o));
        }
    }
    return uc;
}

// ---------------------------------------------------------------------------

bool MUCPackage::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    for (const auto& [t, r] : core_evidence) {
        if (r.verdict != Verdict::Pass) return false;
    }
    return true;
}

nlohmann::json MUCPackage::to_json() const {
    nlohmann::json j;
    j["pass"] = pass();
    j["scope"] = scope;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back({{"what", c.what}, {"pass", c.pass}, {"detail", c.detail}});
    j["core"] = nlohmann::json::array();
    for (const auto& [t, r] : core_evidence) {
        j["core"].push_back({{"object", t}, {"verdict", verdict_name(r.verdict)}, {"notes", r.notes}, {"scope", CoreReport::scope}});
    }
    return j;
}

MUCPackage muc_inclusion(const UnitaryConstruction& uc, const Model& M, std::uint64_t seed) {
    const UnitaryModel& U = *uc.model;
    MUCPackage pkg;
    pkg.unitary = &U;
    pkg.base = &M;

    std::vector<std::pair<std::string, Obj>> leaves;
    for (const auto& n : uc.atom_order) leaves.emplace_back(n, uc.atoms.at(n));
    leaves.emplace_back("Top", U.top());
    leaves.emplace_back("Bot", U.bot());
    std::vector<std::pair<std::string, Obj>> probes = leaves;
    for (const auto& [n, o] : leaves) probes.emplace_back("dag(" + n + ")", U.dag(o));
    auto carrier = [&](const Obj& o) { return U.uobj(o).carrier; };

    auto check = [&](const std::string& what, const std::function<std::string()>& body) {
        InclusionCheck c{what, true, ""};
        try {
            c.detail = body();
            c.pass = c.detail.rfind("ok", 0) == 0;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        pkg.checks.push_back(std::move(c));
    };

    check("laxors", [&] {
        std::size_t n = 0;
        if (!M.obj_equal(carrier(U.top()), M.top()) || !M.obj_equal(carrier(U.bot()), M.bot())) return std::string("units differ");
        for (const auto& [tx, x] : probes) {
            for (const auto& [ty, y] : probes) {
                if (!M.obj_equal(carrier(U.tensor(x, y)), M.tensor(carrier(x), carrier(y)))) return tx + " (x) " + ty + " differs";
                if (!M.obj_equal(carrier(U.par(x, y)), M.par(carrier(x), carrier(y)))) return tx + " (+) " + ty + " differs";
                ++n;
            }
        }
        return "ok: " + std::to_string(n) + " pairs, identity laxors";
    });

    check("preservator", [&] {
        Rng rng(seed);
        std::size_t n = 0;
        for (const auto& [tx, x] : probes) {
            if (!M.obj_equal(carrier(U.dag(x)), M.dag(carrier(x)))) return "dag(" + tx + ") differs";
            for (const auto& [ty, y] : probes) {
                Mor f = U.random_mor(x, y, rng);
                if (!M.equal(UnitaryModel::base_of(U.dag_map(f)), M.dag_map(UnitaryModel::base_of(f)))) {
                    return "dag of a map " + tx + " -> " + ty + " differs";
                }
                ++n;
            }
        }
        return "ok: identity preservator on " + std::to_string(n) + " maps";
    });

    Caps uc_caps = U.caps();
    for (const auto& info : const_table()) {
        if (info.kind == K::Phi || info.kind == K::PhiInv) continue;
        if (!uc_caps.covers(info.needs)) continue;
        check(std::string("const ") + info.name, [&] {
            // three-argument constants range over the leaves only
            const auto& pool = info.arity == 3 ? leaves : probes;
            std::vector<std::size_t> idx(static_cast<std::size_t>(info.arity), 0);
            std::size_t checked = 0, skipped = 0;
            while (true) {
                std::vector<Obj> args, bases;
                std::string at;
                for (std::size_t i : idx) {
                    args.push_back(pool[i].second);
                    bases.push_back(carrier(pool[i].second));
                    at += (at.empty() ? "" : ",") + pool[i].first;
                }
                try {
                    Mor u = U.c(info.kind, args);
                    Mor b = M.c(info.kind, bases);
                    if (!M.obj_equal(carrier(u->dom), b->dom) || !M.obj_equal(carrier(u->cod), b->cod) ||
                        !M.equal(UnitaryModel::base_of(u), b)) {
                        return std::string("differs at [") + at + "]";
                    }
                    ++checked;
                } catch (const FragmentError&) {
                    ++skipped;
                }
                std::size_t p = 0;
                while (p < idx.size() && ++idx[p] == pool.size()) idx[p++] = 0;
                if (p == idx.size()) break;
            }
            return "ok: " + std::to_string(checked) + " checked, " + std::to_string(skipped) + " skipped";
        });
    }

    std::vector<Obj> core_probes;
    for (const auto& [t, o] : leaves) core_probes.push_back(carrier(o));
    for (const auto& [t, o] : probes) pkg.core_evidence.emplace_back(t, core_probe(M, carrier(o), core_probes));
    return pkg;
}

// ---------------------------------------------------------------------------

LiftResult fflat_lift(const LinearFunctor& F, const UnitaryModel& lifted,
                      const std::vector<std::pair<std::string, Obj>>& objects, std::uint64_t seed, int samples) {
    const Model& S = *F.source;
    const Model& T = *F.target;
    LiftResult r;
    std::vector<Obj> probes{T.top()};
    for (const auto& [t, u] : objects) probes.push_back(F.on_obj(u));

    std::vector<Obj> images;
    for (const auto& [t, u] : objects) {
        Obj fu = F.on_obj(u);
        Mor alpha = T.compose(F.on_mor(S.c(K::Phi, {u})), F.preservator(u));
        LiftedObject lo{t, u, lifted.object(fu, alpha), {}};
        lo.verdict = preunitary_check(T, fu, alpha, probes);
        if (!lo.verdict.pass) {
            r.ok = false;
            r.failures.push_back(t + ": " + lo.verdict.reason + " " + lo.verdict.witness.dump());
        }
        images.push_back(lo.image);
        r.objects.push_back(std::move(lo));
    }

    Rng rng(seed);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const Obj& u = objects[i].second;
        if (!T.obj_equal(UnitaryModel::uobj(images[i]).carrier, F.on_obj(u))) {
            r.ok = false;
            r.failures.push_back(objects[i].first + ": inclusion of the lift differs from F");
        }
        for (std::size_t j = 0; j < objects.size(); ++j) {
            const Obj& v = objects[j].second;
            for (int s = 0; s < samples; ++s) {
                Mor f = S.random_mor(u, v, rng);
                Mor g = S.random_mor(v, u, rng);
                Mor lf = lifted.wrap(F.on_mor(f), images[i], images[j]);
                Mor lg = lifted.wrap(F.on_mor(g), images[j], images[i]);
                ++r.triangle_checks;
                if (!T.equal(UnitaryModel::base_of(lifted.compose(lf, lg)), F.on_mor(S.compose(f, g)))) {
                    r.ok = false;
                    r.failures.push_back("F-flat(f ; g) differs from F(f ; g) at " + objects[i].first + " -> " +
                                         objects[j].first);
                }
            }
        }
        for (int s = 0; s < samples; ++s) {
            Mor w;
            try {
                w = S.random_unitary(u, rng);
            } catch (const FragmentError&) {
                break;
            }
            if (!unitary_map_check(S, w)) continue;
            ++r.unitary_checks;
            if (!unitary_map_check(lifted, lifted.wrap(F.on_mor(w), images[i], images[i]))) {
                r.ok = false;
                r.failures.push_back(objects[i].first + ": a unitary is not sent to a unitary");
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

std::string dual_status_name(DualStatus s) {
    switch (s) {
        case DualStatus::UnitaryDual: return "unitary dual";
        case DualStatus::NotUnitaryDual: return "dual but not unitary dual";
        case DualStatus::NotADual: return "not a dual";
    }
    return "?";
}

DualVerdict unitary_dual_to_ddagger_check(const Model& UM, const Mor& eta, const Mor& eps, const Obj& a,
                                          const Obj& b) {
    const Model& M = UM;
    DualVerdict v;
    v.snake_a = M.equal(M.seq({M.c(K::UROxInv, {a}), M.tensor_map(M.id(a), eta), M.c(K::DL, {a, b, a}),
                               M.par_map(eps, M.id(a)), M.c(K::ULOp, {a})}),
                        M.id(a));
    v.snake_b = M.equal(M.seq({M.c(K::ULOxInv, {b}), M.tensor_map(eta, M.id(b)), M.c(K::DR, {b, a, b}),
                               M.par_map(M.id(b), eps), M.c(K::UROp, {b})}),
                        M.id(b));
    if (!v.snake_a || !v.snake_b) {
        v.status = DualStatus::NotADual;
        v.message = std::string("snake fails on ") + (v.snake_a ? "B" : "A");
        return v;
    }
    Mor phi_a = M.c(K::Phi, {a});
    Mor phi_b = M.c(K::Phi, {b});
    v.ud_a = M.equal(M.seq({eta, M.par_map(phi_b, phi_a), M.c(K::COp, {M.dag(b), M.dag(a)})}),
                     M.seq({M.c(K::LamTop), M.dag_map(eps), M.c(K::LamOpInv, {a, b})}));
    v.ud_b = M.equal(M.seq({M.tensor_map(phi_b, phi_a), M.c(K::LamOx, {b, a}), M.dag_map(eta)}),
                     M.seq({M.c(K::COx, {b, a}), eps, M.c(K::LamBot)}));
    v.ddagger_square = M.equal(M.seq({M.c(K::COp, {b, a}), M.c(K::MxInv, {a, b}), eps}),
                               derived_ddagger(M, M.compose(M.c(K::M), eta)));
    v.status = v.ud_a && v.ud_b ? DualStatus::UnitaryDual : DualStatus::NotUnitaryDual;
    if (!v.ud_a) v.message += "UD.a fails; ";
    if (!v.ud_b) v.message += "UD.b fails; ";
    if (!v.ddagger_square) v.message += "ddagger square fails";
    return v;
}

}  // namespace muc
