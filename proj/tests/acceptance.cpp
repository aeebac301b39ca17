// Acceptance run: one PASS/FAIL line per criterion. Equality is exact
// everywhere; the only pinned tolerance is the 60 s budget of criterion 1.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "muc/chu.hpp"
#include "muc/cli.hpp"
#include "muc/derived.hpp"
#include "muc/ffvec.hpp"
#include "muc/finmat.hpp"
#include "muc/laws.hpp"
#include "muc/unitary.hpp"
#include "oracles.hpp"

using namespace muc;
using namespace muc::oracle;
using K = ConstKind;

namespace {

constexpr double kFfvecBudgetSeconds = 60.0;

struct Outcome {
    bool pass;
    std::string detail;
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ProbeConfig ffvec_cfg() {
    ProbeConfig cfg;
    cfg.atoms["A"] = FfvecModel::space(2, "a");
    cfg.atoms["B"] = FfvecModel::space(3, "b");
    cfg.atom_order = {"A", "B"};
    cfg.max_size = 1;
    cfg.samples = 25;
    cfg.seed = 42;
    return cfg;
}

struct Tally {
    std::size_t laws = 0, instances = 0, failed = 0, under = 0;
    std::string first_failure;
};

Tally tally(const std::vector<LawReport>& reports, std::size_t min_instances = 0) {
    Tally t;
    for (const auto& r : reports) {
        ++t.laws;
        t.instances += r.instances;
        if (!r.pass()) {
            if (t.first_failure.empty()) t.first_failure = r.law;
            ++t.failed;
        }
        const LawSpec* law = find_law(r.law);
        bool closed = law->obj_vars.empty() && law->mor_vars.empty();
        if (!closed && r.instances < min_instances) ++t.under;
    }
    return t;
}

std::string summary(const Tally& t) {
    std::ostringstream s;
    s << t.laws << " laws, " << t.instances << " instances, " << t.failed << " failed";
    if (!t.first_failure.empty()) s << " (first " << t.first_failure << ")";
    return s.str();
}

Outcome c1_ffvec_suite() {
    FfvecModel M;
    auto t0 = std::chrono::steady_clock::now();
    Tally t = tally(run_suite(ffvec_cfg(), M));
    double secs = since(t0);
    std::set<std::string> required = {"MON", "MIX", "DUAL", "CYC", "DLDC", "DLF", "CONJ", "U", "SQRT", "PREU", "U2D", "UD"};
    std::set<std::string> seen;
    for (const auto& law : catalog())
        if (law_applicable(law, M)) seen.insert(law.id.substr(0, law.id.find('.')));
    std::string missing;
    for (const auto& f : required)
        if (!seen.count(f)) missing += " " + f;
    std::ostringstream s;
    s << summary(t) << ", " << secs << " s (limit " << kFfvecBudgetSeconds << " s)";
    if (!missing.empty()) s << ", families not applicable:" << missing;
    return {t.failed == 0 && secs <= kFfvecBudgetSeconds && missing.empty() && t.laws > 0, s.str()};
}

Outcome c2_unitary_iff_matrix() {
    Rng rng(100);
    FfvecModel M;
    int agree = 0, unitary = 0, phase = 0;
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 3;
        DenseMatrix m;
        if (i < 20) {
            m = random_phase_permutation(n, rng);
        } else {
            do {
                m = DenseMatrix(n, n);
                std::uniform_int_distribution<int> d(-2, 2);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = q(d(rng), d(rng));
            } while (!mat_inverse(m));
        }
        auto sp = FfvecModel::space(n);
        bool lhs = unitary_map_check(M, M.make(sp, sp, m));
        bool rhs = ffvec_unitary_iff_matrix(m);
        agree += lhs == rhs;
        unitary += lhs;
        if (i < 20) phase += lhs;
    }
    std::ostringstream s;
    s << agree << "/100 agree, " << unitary << " unitary, " << phase << "/20 phase permutations unitary";
    return {agree == 100 && phase == 20, s.str()};
}

Outcome c3_mutations() {
    std::ostringstream s;
    bool ok = true;
    for (auto mut : all_mutations()) {
        FfvecModel M(mut);
        auto cfg = ffvec_cfg();
        auto reports = run_suite(cfg, M);
        const LawReport* first = nullptr;
        std::size_t failing = 0;
        for (const auto& r : reports)
            if (!r.pass()) {
                ++failing;
                if (!first) first = &r;
            }
        bool witnessed = first && recheck_failure(*find_law(first->law), first->failures.front(), cfg, M);
        ok = ok && witnessed;
        s << "\n    " << mutation_name(mut) << ": " << failing << " laws fail";
        if (first) {
            std::string w = first->to_json()["failures"][0].dump();
            if (w.size() > 160) w = w.substr(0, 160) + "...";
            s << ", witness " << first->law << " " << w << (witnessed ? "" : " (does not recheck)");
        }
    }
    return {ok && all_mutations().size() == 5, std::to_string(all_mutations().size()) + " mutations" + s.str()};
}

ProbeConfig chu_cfg() {
    ProbeConfig cfg;
    cfg.atoms["X"] = ChuModel::object(DenseMatrix::from_rows({{q(1), q(0)}, {q(0), q(0)}}));
    cfg.atoms["Y"] = ChuModel::object(DenseMatrix::from_rows({{q(1), q(0, 1)}}));
    cfg.atom_order = {"X", "Y"};
    cfg.max_size = 1;
    cfg.samples = 25;
    cfg.seed = 42;
    cfg.min_tuples = 12;
    return cfg;
}

Outcome c4_chu() {
    ChuModel M;
    Tally t = tally(run_suite(chu_cfg(), M), 10);

    Rng rng(7);
    int nullity_ok = 0;
    for (int i = 0; i < 50; ++i) {
        Obj a = random_object(rng);
        Obj b = random_object(rng);
        std::size_t want = brute_nullity(ChuModel::obj_of(a), ChuModel::obj_of(b));
        nullity_ok += M.pullback(a, b).dim() == want && ChuModel::obj_of(M.tensor(a, b)).nb == want;
    }

    Tally snakes = tally(run_suite(chu_cfg(), M, "DUAL.*"));

    auto preu = [&](const DenseMatrix& e) {
        auto p = chu_preunitary_from_form(M, e);
        return M.equal(M.compose(p.alpha, M.dag_map(M.invert(p.alpha))), M.c(K::Iota, {p.object}));
    };
    std::vector<DenseMatrix> good = {DenseMatrix::identity(1), DenseMatrix::identity(2),
                                     DenseMatrix::from_rows({{q(2), q(0)}, {q(0), q(1)}}),
                                     DenseMatrix::from_rows({{q(0), q(1)}, {q(1), q(0)}})};
    int forms_ok = 0;
    for (const auto& e : good) forms_ok += preu(e);
    bool bad_fails = !preu(DenseMatrix::from_rows({{q(1), q(0, 1)}, {q(0), q(1)}}));

    std::ostringstream s;
    s << "suite " << summary(t) << ", " << t.under << " laws under 10 instances; nullity " << nullity_ok
      << "/50; snakes " << snakes.laws << " laws " << snakes.failed << " failed; PREU forms " << forms_ok
      << "/4, non-Hermitian form " << (bad_fails ? "rejected" : "accepted");
    return {t.failed == 0 && t.under == 0 && nullity_ok == 50 && snakes.laws > 0 && snakes.failed == 0 &&
                forms_ok == 4 && bad_fails,
            s.str()};
}

ProbeConfig finmat_cfg() {
    ProbeConfig cfg;
    cfg.atoms["F"] = FinmatModel::finite(2, "f");
    cfg.atoms["N"] = FinmatModel::nat(FinTag::Fin);
    cfg.atom_order = {"F", "N"};
    cfg.max_size = 1;
    cfg.samples = 25;
    cfg.seed = 42;
    cfg.min_tuples = 12;
    return cfg;
}

Outcome c5_finmat() {
    FinmatModel M;
    Rng rng(2024);
    int agree = 0, valid = 0;
    for (int i = 0; i < 200; ++i) {
        auto f = random_fin_matrix(rng);
        bool want = oracle_valid(*f);
        agree += fin_validate_map(*f).valid == want;
        valid += want;
    }

    auto w = fin_core_witness(M);
    bool core = w.forward_valid && !w.mx_invertible && !w.reverse.valid && w.reverse.witness == "{(n,n)}" &&
                w.finite_mx_invertible;

    Rng r2(99);
    std::vector<Obj> objs = {FinmatModel::finite(2), FinmatModel::nat(FinTag::Fin),
                             FinmatModel::space(Web::NatProd, {"u", "v"}, FinTag::Fin), FinmatModel::nat(FinTag::All)};
    std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
    int assoc = 0;
    for (int i = 0; i < 50; ++i) {
        Obj a = objs[pick(r2)], b = objs[pick(r2)], c = objs[pick(r2)], d = objs[pick(r2)];
        Mor f = M.random_mor(a, b, r2);
        Mor g = M.random_mor(b, c, r2);
        Mor h = M.random_mor(c, d, r2);
        assoc += M.equal(M.compose(M.compose(f, g), h), M.compose(f, M.compose(g, h)));
    }

    auto reports = run_suite(finmat_cfg(), M);
    Tally t = tally(reports);
    std::size_t skipped = 0;
    for (const auto& r : reports) skipped += r.skipped;

    std::ostringstream s;
    s << "oracle " << agree << "/200 (" << valid << " valid); core witness " << (core ? "ok" : "wrong")
      << " reverse=" << w.reverse.witness << "; associativity " << assoc << "/50; fragment suite " << summary(t)
      << ", " << skipped << " skipped";
    return {agree == 200 && core && assoc == 50 && t.failed == 0 && t.laws > 0, s.str()};
}

Outcome c6_round_trips() {
    FfvecModel M;
    DaggerFromConjugation D(M);
    ConjugationFromDagger C(M);
    DaggerFromConjugation DC(C);
    ConjugationFromDagger CD(D);
    Rng rng(20);
    int dag_ok = 0, conj_ok = 0;
    for (int i = 0; i < 20; ++i) {
        auto a = FfvecModel::space(1 + i % 3), b = FfvecModel::space(1 + (i / 3) % 3);
        auto f = M.random_mor(a, b, rng);
        dag_ok += M.equal(DC.dag_map(f), M.dag_map(f)) && M.equal(D.dag_map(f), M.dag_map(f));
        conj_ok += M.equal(CD.conj_map(f), M.conj_map(f)) && M.equal(C.conj_map(f), M.conj_map(f));
    }
    ProbeConfig cfg = ffvec_cfg();
    cfg.atoms["B"] = FfvecModel::space(2, "b");
    Tally td = tally(run_suite(cfg, D, std::vector<std::string>{"DLDC.1*", "DLDC.2*", "DLDC.3*", "DLDC.4*", "DLDC.5*",
                                                                "DLDC.6"}));
    Tally tc = tally(run_suite(cfg, C, std::vector<std::string>{"CONJ.CF1*", "CONJ.CF2*", "CONJ.CF9"}));
    std::ostringstream s;
    s << "dagger round trip " << dag_ok << "/20, conjugation round trip " << conj_ok << "/20; derived dagger "
      << summary(td) << "; derived conjugation " << summary(tc);
    return {dag_ok == 20 && conj_ok == 20 && td.laws == 13 && td.failed == 0 && tc.laws == 5 && tc.failed == 0,
            s.str()};
}

Outcome c7_unitary() {
    std::ostringstream s;
    bool ok = true;
    auto run = [&](const std::string& name, const Model& base, const std::vector<PreUnitaryObject>& gens) {
        UnitaryConstruction uc = unitary_construction(gens, base, 4);
        std::size_t passing = 0;
        for (const auto& o : uc.objects) passing += o.verdict.pass;
        ProbeConfig cfg;
        cfg.atoms = uc.atoms;
        cfg.atom_order = uc.atom_order;
        cfg.max_size = 1;
        cfg.samples = 25;
        cfg.seed = 42;
        Tally t = tally(run_suite(cfg, *uc.model, "COH-UNITARY.*"));
        bool good = passing == uc.objects.size() && !uc.objects.empty() && t.laws == 14 && t.failed == 0;
        ok = ok && good;
        s << "\n    " << name << ": " << passing << "/" << uc.objects.size() << " objects pre-unitary, COH-UNITARY "
          << summary(t);
    };
    FfvecModel F;
    run("ffvec", F,
        {identity_generator(F, "A", FfvecModel::space(1, "a")), identity_generator(F, "B", FfvecModel::space(2, "b"))});
    FinmatModel N;
    run("finmat", N,
        {identity_generator(N, "P", FinmatModel::finite(1, "p")), identity_generator(N, "Q", FinmatModel::finite(2, "q"))});
    ChuModel C;
    auto one = chu_preunitary_from_form(C, DenseMatrix::identity(1));
    auto d = chu_preunitary_from_form(C, DenseMatrix::from_rows({{q(2), q(0)}, {q(0), q(1)}}));
    run("chu", C, {{"H", one.object, one.alpha}, {"D", d.object, d.alpha}});
    return {ok, "size <= 4" + s.str()};
}

Outcome c8_determinism() {
    CliConfig cfg;
    cfg.json = true;
    cfg.max_size = 1;
    cfg.max_instances = 0;
    std::ostringstream o1, o2, e1, e2;
    int a = cmd_laws(cfg, o1, e1);
    int b = cmd_laws(cfg, o2, e2);
    bool same = o1.str() == o2.str();
    std::ostringstream s;
    s << "two cmd_laws runs (" << cfg.model << ", max size " << cfg.max_size << ", seed " << cfg.seed << "): " << o1.str().size() << " bytes, "
      << (same ? "identical" : "different") << ", exit " << a << "/" << b;
    return {same && a == kExitPass && b == kExitPass && !o1.str().empty(), s.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 ffvec full suite", c1_ffvec_suite},
        {"2 ffvec unitary iff matrix", c2_unitary_iff_matrix},
        {"3 mutation sensitivity", c3_mutations},
        {"4 chu", c4_chu},
        {"5 finmat", c5_finmat},
        {"6 dagger/conjugation round trips", c6_round_trips},
        {"7 unitary construction", c7_unitary},
        {"8 determinism", c8_determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << name << "] " << v.detail << " [" << since(t0) << " s]"
                  << std::endl;
    }
    std::cout << (failed ? "FAIL " : "PASS ") << criteria.size() - failed << "/" << criteria.size() << " criteria"
              << std::endl;
    return failed ? 1 : 0;
}
