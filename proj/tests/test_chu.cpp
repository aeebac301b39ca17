#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "muc/chu.hpp"
#include "muc/laws.hpp"
#include "oracles.hpp"

using namespace muc;
using namespace muc::oracle;

namespace {

// one degenerate and one rectangular atom, plus a nondegenerate one
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

}  // namespace

TEST(Chu, MapCheck) {
    Obj x = ChuModel::object(DenseMatrix::from_rows({{q(1), q(2)}}));
    const auto& X = ChuModel::obj_of(x);
    EXPECT_TRUE(chu_check_map(DenseMatrix::identity(1), DenseMatrix::identity(2), X, X));
    EXPECT_FALSE(chu_check_map(DenseMatrix::identity(1).scaled(q(2)), DenseMatrix::identity(2), X, X));
    EXPECT_FALSE(chu_check_map(DenseMatrix::identity(2), DenseMatrix::identity(2), X, X));
}

TEST(Chu, TensorNullityMatchesBruteForce) {
    ChuModel M;
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Obj a = random_object(rng);
        Obj b = random_object(rng);
        const auto& X = ChuModel::obj_of(a);
        const auto& Y = ChuModel::obj_of(b);
        std::size_t want = brute_nullity(X, Y);
        EXPECT_EQ(M.pullback(a, b).dim(), want) << a->describe() << " " << b->describe();
        const auto& T = ChuModel::obj_of(M.tensor(a, b));
        EXPECT_EQ(T.na, X.na * Y.na);
        EXPECT_EQ(T.nb, want);
    }
}

TEST(Chu, DualAndInvolutionIdempotent) {
    ChuModel M;
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        Obj a = random_object(rng);
        EXPECT_TRUE(M.obj_equal(M.dual(M.dual(a)), a));
        EXPECT_TRUE(M.obj_equal(M.conj(M.conj(a)), a));
        Mor f = M.random_mor(a, a, rng);
        EXPECT_TRUE(M.equal(M.dual_map(M.dual_map(f)), f));
        EXPECT_TRUE(M.equal(M.conj_map(M.conj_map(f)), f));
        EXPECT_TRUE(M.equal(M.c(ConstKind::ConjEps, {a}), M.id(a)));
    }
}

TEST(Chu, NativeDualMapMatchesTransfer) {
    ChuModel M;
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        Obj a = random_object(rng);
        Obj b = random_object(rng);
        Mor f = M.random_mor(a, b, rng);
        EXPECT_TRUE(M.equal(M.dual_map(f), M.Model::dual_map(f)));
    }
}

TEST(Chu, DegenerateObjectIsNotCore) {
    ChuModel M;
    auto cfg = chu_cfg();
    Obj x = cfg.atoms["X"];
    EXPECT_FALSE(M.inverse(M.c(ConstKind::Mx, {x, x})).has_value());
    Obj e = ChuModel::object(DenseMatrix::identity(2));
    EXPECT_TRUE(M.inverse(M.c(ConstKind::Mx, {e, e})).has_value());
}

TEST(Chu, LawSuitePasses) {
    ChuModel M;
    std::vector<LawReport> reports;
    std::vector<std::pair<double, std::string>> slow;
    for (const auto& law : catalog()) {
        if (!law_applicable(law, M)) continue;
        auto t0 = std::chrono::steady_clock::now();
        reports.push_back(check_law(law, chu_cfg(), M));
        slow.emplace_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), law.id);
    }
    std::sort(slow.rbegin(), slow.rend());
    for (std::size_t i = 0; i < 8 && i < slow.size(); ++i) std::cout << slow[i].second << " " << slow[i].first << " s\n";
    EXPECT_GE(reports.size(), 60u);
    std::size_t n = 0;
    for (const auto& r : reports) {
        n += r.instances;
        EXPECT_TRUE(r.pass()) << r.to_json().dump().substr(0, 1500);
        const auto* law = find_law(r.law);
        // a law without variables has exactly one instance
        if (law->obj_vars.empty() && law->mor_vars.empty()) EXPECT_EQ(r.instances, 1u) << r.law;
        else EXPECT_GE(r.instances, 10u) << r.law;
    }
    std::cout << reports.size() << " laws, " << n << " instances\n";
}

TEST(Chu, SnakesHold) {
    ChuModel M;
    auto reports = run_suite(chu_cfg(), M, "DUAL.*");
    ASSERT_EQ(reports.size(), 6u);
    for (const auto& r : reports) EXPECT_TRUE(r.pass()) << r.law;
}

TEST(Chu, PreunitaryFromForms) {
    ChuModel M;
    const auto* preu = find_law("PREU");
    ASSERT_NE(preu, nullptr);
    std::vector<DenseMatrix> good = {
        DenseMatrix::identity(1), DenseMatrix::identity(2),
        DenseMatrix::from_rows({{q(2), q(0)}, {q(0), q(1)}}),
        DenseMatrix::from_rows({{q(0), q(1)}, {q(1), q(0)}})};
    for (const auto& e : good) {
        EXPECT_EQ(chu_form_problem(e), "");
        auto p = chu_preunitary_from_form(M, e);
        Mor lhs = M.compose(p.alpha, M.dag_map(M.invert(p.alpha)));
        EXPECT_TRUE(M.equal(lhs, M.c(ConstKind::Iota, {p.object})));
        if (e != DenseMatrix::identity(e.rows())) EXPECT_FALSE(M.equal(p.alpha, M.id(p.object)));
    }
    DenseMatrix bad = DenseMatrix::from_rows({{q(1), q(0, 1)}, {q(0), q(1)}});
    EXPECT_EQ(chu_form_problem(bad), "form is not Hermitian");
    auto p = chu_preunitary_from_form(M, bad);
    Mor lhs = M.compose(p.alpha, M.dag_map(M.invert(p.alpha)));
    EXPECT_FALSE(M.equal(lhs, M.c(ConstKind::Iota, {p.object})));
    EXPECT_THROW(chu_preunitary_from_form(M, DenseMatrix(2, 2)), std::invalid_argument);
}
