#include <gtest/gtest.h>

#include <chrono>

#include "muc/chu.hpp"
#include "muc/ffvec.hpp"
#include "muc/finmat.hpp"
#include "muc/laws.hpp"
#include "muc/unitary.hpp"

using namespace muc;
using K = ConstKind;

namespace {

GR q(long re, long im = 0) { return GR(Rational(re), Rational(im)); }
GR half() { return GR(Rational(1, 2), Rational(0)); }

std::vector<PreUnitaryObject> ffvec_gens(const FfvecModel& M) {
    return {identity_generator(M, "A", FfvecModel::space(1, "a")),
            identity_generator(M, "B", FfvecModel::space(2, "b"))};
}

std::vector<PreUnitaryObject> chu_gens(const ChuModel& M) {
    std::vector<PreUnitaryObject> g;
    auto one = chu_preunitary_from_form(M, DenseMatrix::identity(1));
    auto d = chu_preunitary_from_form(M, DenseMatrix::from_rows({{q(2), q(0)}, {q(0), q(1)}}));
    g.push_back({"H", one.object, one.alpha});
    g.push_back({"D", d.object, d.alpha});
    return g;
}

ProbeConfig pool(const UnitaryConstruction& uc, int max_size, std::size_t min_tuples = 0) {
    ProbeConfig cfg;
    cfg.atoms = uc.atoms;
    cfg.atom_order = uc.atom_order;
    cfg.max_size = max_size;
    cfg.samples = 25;
    cfg.seed = 42;
    cfg.min_tuples = min_tuples;
    return cfg;
}

void expect_suite(const std::vector<LawReport>& reports, std::size_t expected_laws) {
    EXPECT_EQ(reports.size(), expected_laws);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass()) << r.law << ": " << r.to_json().dump();
        EXPECT_GT(r.instances, 0u) << r.law;
    }
}

const std::vector<std::string> kUnitaryLaws = {"U.*", "SQRT.*", "PREU", "UD.*", "U2D.*", "COH-UNITARY.*"};

}  // namespace

TEST(Unitary, PreunitaryCheckExamples) {
    FfvecModel F;
    Obj a = FfvecModel::space(2);
    std::vector<Obj> probes{a};
    EXPECT_TRUE(preunitary_check(F, a, F.c(K::Phi, {a}), probes).pass);

    // 2 id : its inverse is id/2, whose dagger is conj(1/2) id = id/2, so
    // alpha ; dag(alpha^-1) = id = iota. A real scale is invisible.
    DenseMatrix two = DenseMatrix::identity(2).scaled(q(2));
    DenseMatrix inv = DenseMatrix::identity(2).scaled(half());
    EXPECT_EQ(mat_mul(mat_conj_transpose(inv), two), DenseMatrix::identity(2));
    EXPECT_TRUE(preunitary_check(F, a, F.make(a, F.dag(a), two), probes).pass);

    // i id : (i)(conj(-i)) = -1
    PreuVerdict v = preunitary_check(F, a, F.make(a, F.dag(a), DenseMatrix::identity(2).scaled(q(0, 1))), probes);
    EXPECT_FALSE(v.pass);
    EXPECT_TRUE(v.invertible);
    EXPECT_FALSE(v.equation);
    EXPECT_TRUE(v.witness.contains("lhs"));

    EXPECT_THROW(preunitary_check(F, a, F.id(FfvecModel::space(3)), probes), TypeError);

    ChuModel C;
    auto h = chu_preunitary_from_form(C, DenseMatrix::identity(2));
    EXPECT_TRUE(preunitary_check(C, h.object, h.alpha, {h.object}).pass);
}

TEST(Unitary, EmptyGeneratorsGiveUnitObjects) {
    FfvecModel F;
    UnitaryConstruction uc = unitary_construction({}, F, 4);
    EXPECT_TRUE(uc.all_pass());
    EXPECT_FALSE(uc.objects.empty());
    for (const auto& o : uc.objects) EXPECT_EQ(FfvecModel::dim_of(UnitaryModel::uobj(o.object).carrier), 1u) << o.term;
}

TEST(Unitary, TopTensorTopFromFormulas) {
    FfvecModel F;
    UnitaryModel U(F);
    const UObj& tt = UnitaryModel::uobj(U.tensor(U.top(), U.top()));
    // mx ; ((m^-1 ; lam_bot) (+) (m^-1 ; lam_bot)) ; lam_op, built by hand
    Mor t = F.seq({F.c(K::MInv), F.c(K::LamBot)});
    Mor expect = F.seq({F.c(K::Mx, {F.top(), F.top()}), F.par_map(t, t), F.c(K::LamOp, {F.top(), F.top()})});
    EXPECT_TRUE(F.equal(tt.alpha, expect));
    EXPECT_TRUE(preunitary_check(F, tt.carrier, tt.alpha, {F.top()}).pass);
}

TEST(Unitary, ConstructionFfvec) {
    FfvecModel F;
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 4);
    EXPECT_TRUE(uc.all_pass());
    EXPECT_GT(uc.objects.size(), 100u);
    const UnitaryModel& U = *uc.model;
    // U.3 and U.4 literally on every constructed object
    for (const auto& o : uc.objects) {
        const Obj& x = o.object;
        ASSERT_TRUE(U.equal(U.c(K::Phi, {U.dag(x)}), U.dag_map(U.c(K::PhiInv, {x})))) << o.term;
        ASSERT_TRUE(U.equal(U.compose(U.c(K::Phi, {x}), U.c(K::Phi, {U.dag(x)})), U.c(K::Iota, {x}))) << o.term;
    }
}

TEST(Unitary, ConstructionFinmat) {
    FinmatModel F;
    std::vector<PreUnitaryObject> gens{identity_generator(F, "P", FinmatModel::finite(1, "p")),
                                       identity_generator(F, "Q", FinmatModel::finite(2, "q"))};
    UnitaryConstruction uc = unitary_construction(gens, F, 4);
    EXPECT_TRUE(uc.all_pass());
    for (const auto& o : uc.objects) EXPECT_FALSE(FinmatModel::space_of(UnitaryModel::uobj(o.object).carrier).nat());
}

TEST(Unitary, ConstructionChu) {
    ChuModel C;
    auto t0 = std::chrono::steady_clock::now();
    UnitaryConstruction uc = unitary_construction(chu_gens(C), C, 4);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << uc.objects.size() << " objects in " << s << " s\n";
    EXPECT_TRUE(uc.all_pass());
    // the form object's alpha is not the identity pair
    const auto& d = ChuModel::map_of(UnitaryModel::uobj(uc.atoms.at("D")).alpha);
    EXPECT_NE(d.f, DenseMatrix::identity(2));
}

TEST(Unitary, GeneratorRejected) {
    ChuModel C;
    auto bad = chu_preunitary_from_form(C, DenseMatrix::from_rows({{q(1), q(0, 1)}, {q(0), q(1)}}));
    try {
        unitary_construction({{"N", bad.object, bad.alpha}}, C, 2);
        FAIL() << "expected a rejection";
    } catch (const GeneratorRejected& e) {
        EXPECT_FALSE(e.verdict.equation);
        EXPECT_TRUE(e.verdict.witness.contains("lhs"));
    }
}

TEST(Unitary, LawSuiteOnUnitaryFfvec) {
    FfvecModel F;
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 2);
    auto all = run_suite(pool(uc, 1), *uc.model);
    expect_suite(all, all.size());
    EXPECT_GT(all.size(), 170u);

    // the unitary families again on the size-2 layer, capped per law
    ProbeConfig cfg = pool(uc, 2);
    cfg.max_instances = 2000;
    auto reports = run_suite(cfg, *uc.model, kUnitaryLaws);
    expect_suite(reports, reports.size());
    std::size_t coh = 0;
    for (const auto& r : reports) coh += r.law.rfind("COH-UNITARY.", 0) == 0;
    EXPECT_EQ(coh, 14u);
}

TEST(Unitary, CohUnitaryOnFinmatAndChu) {
    FinmatModel F;
    UnitaryConstruction uf = unitary_construction(
        {identity_generator(F, "P", FinmatModel::finite(1, "p")), identity_generator(F, "Q", FinmatModel::finite(2, "q"))},
        F, 2);
    expect_suite(run_suite(pool(uf, 1), *uf.model, "COH-UNITARY.*"), 14);

    ChuModel C;
    UnitaryConstruction uc = unitary_construction(chu_gens(C), C, 2);
    expect_suite(run_suite(pool(uc, 1), *uc.model, "COH-UNITARY.*"), 14);
}

TEST(Unitary, SqrtOnUnitaryChu) {
    ChuModel C;
    UnitaryConstruction uc = unitary_construction(chu_gens(C), C, 2);
    auto reports = run_suite(pool(uc, 2), *uc.model, "SQRT.*");
    expect_suite(reports, 2);
}

TEST(Unitary, UnitaryIsosClose) {
    FfvecModel F;
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 2);
    const UnitaryModel& U = *uc.model;
    Rng rng(42);
    Obj b = uc.atoms.at("B");
    Obj bb = U.tensor(b, b);
    for (int i = 0; i < 20; ++i) {
        Mor u = U.random_unitary(b, rng);
        Mor v = U.random_unitary(b, rng);
        ASSERT_TRUE(unitary_map_check(U, u));
        EXPECT_TRUE(unitary_map_check(U, U.compose(u, v)));
        EXPECT_TRUE(unitary_map_check(U, U.dag_map(u)));
        EXPECT_TRUE(unitary_map_check(U, U.tensor_map(u, v)));
        EXPECT_TRUE(unitary_map_check(U, U.par_map(u, v)));
        EXPECT_TRUE(unitary_map_check(U, U.compose(U.random_unitary(bb, rng), U.tensor_map(u, v))));
    }
    DenseMatrix two = DenseMatrix::identity(2).scaled(q(2));
    EXPECT_FALSE(unitary_map_check(U, U.wrap(F.make(FfvecModel::space(2, "b"), FfvecModel::space(2, "b"), two), b, b)));
}

TEST(Unitary, MucInclusion) {
    FfvecModel F;
    UnitaryConstruction uf = unitary_construction(ffvec_gens(F), F, 2);
    MUCPackage pf = muc_inclusion(uf, F);
    EXPECT_TRUE(pf.pass()) << pf.to_json().dump(1);
    EXPECT_GT(pf.checks.size(), 20u);

    FinmatModel N;
    UnitaryConstruction un = unitary_construction({identity_generator(N, "P", FinmatModel::finite(2, "p"))}, N, 2);
    MUCPackage pn = muc_inclusion(un, N);
    EXPECT_TRUE(pn.pass()) << pn.to_json().dump(1);

    ChuModel C;
    UnitaryConstruction uc = unitary_construction(chu_gens(C), C, 2);
    MUCPackage pc = muc_inclusion(uc, C);
    EXPECT_TRUE(pc.pass()) << pc.to_json().dump(1);
    for (const auto& [t, r] : pc.core_evidence) EXPECT_EQ(r.verdict, Verdict::Pass) << t;
    EXPECT_EQ(pc.to_json()["scope"], "naturality checked on generators only");
}

namespace {

LinearFunctor forget(const UnitaryModel& U, const Model& M) {
    LinearFunctor F;
    F.name = "inclusion";
    F.source = &U;
    F.target = &M;
    F.on_obj = [&U](const Obj& a) { return UnitaryModel::uobj(a).carrier; };
    F.on_mor = [](const Mor& f) { return UnitaryModel::base_of(f); };
    F.preservator = [&U, &M](const Obj& a) { return M.id(UnitaryModel::uobj(U.dag(a)).carrier); };
    return F;
}

std::vector<std::pair<std::string, Obj>> sample_objects(const UnitaryConstruction& uc) {
    std::vector<std::pair<std::string, Obj>> v;
    for (const auto& n : uc.atom_order) v.emplace_back(n, uc.atoms.at(n));
    const UnitaryModel& U = *uc.model;
    v.emplace_back("A (x) B", U.tensor(uc.atoms.at("A"), uc.atoms.at("B")));
    v.emplace_back("dag(B)", U.dag(uc.atoms.at("B")));
    return v;
}

}  // namespace

TEST(Unitary, FflatOfInclusionIsIdentity) {
    FfvecModel F;
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 2);
    UnitaryModel lifted(F);
    auto objs = sample_objects(uc);
    LiftResult r = fflat_lift(forget(*uc.model, F), lifted, objs);
    EXPECT_TRUE(r.ok);
    EXPECT_GT(r.unitary_checks, 0u);
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const UObj& src = UnitaryModel::uobj(objs[i].second);
        const UObj& img = UnitaryModel::uobj(r.objects[i].image);
        EXPECT_TRUE(F.obj_equal(src.carrier, img.carrier));
        EXPECT_TRUE(F.equal(src.alpha, img.alpha));
    }
}

namespace {

// Matrices over Q[i] as finite-web finiteness matrices.
LinearFunctor mat_to_finmat(const UnitaryModel& U, const FinmatModel& N, GR rho_scale) {
    LinearFunctor F;
    F.name = "mat";
    F.source = &U;
    F.target = &N;
    auto obj = [](const Obj& a) { return FinmatModel::finite(FfvecModel::dim_of(UnitaryModel::uobj(a).carrier), "m"); };
    F.on_obj = obj;
    F.on_mor = [&N, obj](const Mor& f) {
        const DenseMatrix& m = FfvecModel::matrix_of(UnitaryModel::base_of(f));
        std::map<std::pair<WebIdx, WebIdx>, GR> sparse;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero()) sparse[{WebIdx{r, 0, 0}, WebIdx{c, 0, 0}}] = m.at(r, c);
        return N.make(obj(f->dom), obj(f->cod), std::move(sparse), std::nullopt);
    };
    F.preservator = [&N, &U, obj, rho_scale](const Obj& a) {
        Obj d = obj(U.dag(a));
        std::size_t n = FinmatModel::space_of(d).fin();
        std::map<std::pair<WebIdx, WebIdx>, GR> sparse;
        for (std::size_t i = 0; i < n; ++i) sparse[{WebIdx{i, 0, 0}, WebIdx{i, 0, 0}}] = rho_scale;
        return N.make(d, N.dag(obj(a)), std::move(sparse), std::nullopt);
    };
    return F;
}

}  // namespace

TEST(Unitary, FflatMatIntoFinmat) {
    FfvecModel F;
    FinmatModel N;
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 2);
    UnitaryModel lifted(N);
    LiftResult r = fflat_lift(mat_to_finmat(*uc.model, N, q(1)), lifted, sample_objects(uc));
    EXPECT_TRUE(r.ok);
    for (const auto& lo : r.objects) {
        const UObj& img = UnitaryModel::uobj(lo.image);
        EXPECT_FALSE(FinmatModel::space_of(img.carrier).nat());
        EXPECT_TRUE(N.equal(img.alpha, N.id(img.carrier))) << lo.term;
        EXPECT_TRUE(lo.verdict.pass);
    }
}

TEST(Unitary, FflatBrokenPreservator) {
    FfvecModel F;
    FinmatModel N;
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 2);
    UnitaryModel lifted(N);
    // rho scaled by 2 still gives pre-unitary images (the scale cancels
    // against conj(1/2)); a non-real phase does not
    LiftResult two = fflat_lift(mat_to_finmat(*uc.model, N, q(2)), lifted, sample_objects(uc));
    EXPECT_TRUE(two.ok);
    LiftResult phase = fflat_lift(mat_to_finmat(*uc.model, N, q(0, 1)), lifted, sample_objects(uc));
    EXPECT_FALSE(phase.ok);
    ASSERT_FALSE(phase.failures.empty());
    EXPECT_NE(phase.failures[0].find("iota"), std::string::npos);
    for (const auto& lo : phase.objects) EXPECT_FALSE(lo.verdict.equation) << lo.term;
}

TEST(Unitary, UnitaryDualToDdagger) {
    FfvecModel F;
    for (std::size_t n : {1u, 2u}) {
        Obj a = FfvecModel::space(n);
        Obj b = F.dual(a);
        DualVerdict v = unitary_dual_to_ddagger_check(F, F.c(K::Eta, {a}), F.c(K::Eps, {a}), a, b);
        EXPECT_EQ(v.status, DualStatus::UnitaryDual) << n << " " << v.message;
        EXPECT_TRUE(v.ddagger_square) << n;
    }

    Obj a = FfvecModel::space(2);
    Obj b = F.dual(a);
    Mor eta = F.c(K::Eta, {a});
    Mor eps = F.c(K::Eps, {a});
    Mor eta2 = F.make(eta->dom, eta->cod, FfvecModel::matrix_of(eta).scaled(q(2)));
    Mor eps2 = F.make(eps->dom, eps->cod, FfvecModel::matrix_of(eps).scaled(half()));
    DualVerdict s = unitary_dual_to_ddagger_check(F, eta2, eps2, a, b);
    EXPECT_TRUE(s.snake_a && s.snake_b);
    EXPECT_EQ(s.status, DualStatus::NotUnitaryDual);
    EXPECT_FALSE(s.ud_b);  // 2 against conj(1/2)
    EXPECT_FALSE(s.ud_a);

    DualVerdict nd = unitary_dual_to_ddagger_check(F, eta2, eps, a, b);
    EXPECT_EQ(nd.status, DualStatus::NotADual);

    // the same check inside Unitary(ffvec)
    UnitaryConstruction uc = unitary_construction(ffvec_gens(F), F, 1);
    const UnitaryModel& U = *uc.model;
    Obj ub = uc.atoms.at("B");
    DualVerdict uv = unitary_dual_to_ddagger_check(U, U.c(K::Eta, {ub}), U.c(K::Eps, {ub}), ub, U.dual(ub));
    EXPECT_EQ(uv.status, DualStatus::UnitaryDual) << uv.message;
    EXPECT_TRUE(uv.ddagger_square);
}
