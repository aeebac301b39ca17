#include <gtest/gtest.h>

#include <set>

#include "muc/finmat.hpp"
#include "muc/laws.hpp"
#include "oracles.hpp"

using namespace muc;
using namespace muc::oracle;

namespace {

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

}  // namespace

TEST(Finmat, SpacesAndTags) {
    FinmatModel M;
    Obj nf = FinmatModel::nat(FinTag::Fin);
    EXPECT_EQ(FinmatModel::space_of(M.dual(nf)).tag, FinTag::All);
    Obj f2 = FinmatModel::finite(2);
    EXPECT_TRUE(M.obj_equal(M.dual(f2), f2));
    EXPECT_EQ(FinmatModel::space_of(M.tensor(f2, FinmatModel::finite(3))).fin(), 6u);
    const auto& t = FinmatModel::space_of(M.tensor(f2, nf));
    EXPECT_EQ(t.web, Web::NatProd);
    EXPECT_EQ(t.tag, FinTag::Fin);
    EXPECT_EQ(t.fin(), 2u);
    EXPECT_THROW(M.tensor(nf, nf), FragmentError);
    Obj na = M.dual(nf);
    EXPECT_EQ(FinmatModel::space_of(M.tensor(nf, na)).tag, FinTag::FinRows);
    EXPECT_EQ(FinmatModel::space_of(M.par(nf, na)).tag, FinTag::ColFin);
    EXPECT_EQ(FinmatModel::space_of(M.dual(M.tensor(nf, na))).tag, FinTag::RowFin);
}

TEST(Finmat, ValidateExamples) {
    Obj nf = FinmatModel::nat(FinTag::Fin);
    Obj na = FinmatModel::nat(FinTag::All);
    auto bad = FinmatModel::raw(na, nf, {}, DenseMatrix::identity(1));
    auto v = fin_validate_map(*bad);
    EXPECT_FALSE(v.valid);
    EXPECT_EQ(v.direction, "forward");
    EXPECT_TRUE(fin_validate_map(*FinmatModel::raw(nf, na, {}, DenseMatrix::identity(1))).valid);
    Sparse s;
    s[{{0, 7, 0}, {0, 3, 0}}] = q(5);
    EXPECT_TRUE(fin_validate_map(*FinmatModel::raw(na, nf, s, std::nullopt)).valid);
    // dagger of a diagonal flips the typing
    FinmatModel M;
    Mor d = M.make(nf, na, {}, DenseMatrix::identity(1));
    Mor dd = M.dag_map(d);
    EXPECT_EQ(FinmatModel::space_of(dd->dom).tag, FinTag::Fin);
    EXPECT_EQ(FinmatModel::space_of(dd->cod).tag, FinTag::All);
}

TEST(Finmat, ValidateAgreesWithTruncationOracle) {
    Rng rng(2024);
    int valid = 0;
    int invalid = 0;
    for (int i = 0; i < 200; ++i) {
        auto f = random_fin_matrix(rng);
        const Obj& d = f->dom;
        const Obj& c = f->cod;
        bool want = oracle_valid(*f);
        EXPECT_EQ(fin_validate_map(*f).valid, want) << d->describe() << " -> " << c->describe();
        (want ? valid : invalid)++;
    }
    EXPECT_GT(valid, 20);
    EXPECT_GT(invalid, 10);
}

TEST(Finmat, Composition) {
    FinmatModel M;
    Obj nf = FinmatModel::nat(FinTag::Fin);
    Mor a = M.make(nf, nf, {}, DenseMatrix::identity(1).scaled(q(2)));
    Mor b = M.make(nf, nf, {}, DenseMatrix::identity(1).scaled(q(3)));
    EXPECT_TRUE(M.equal(M.compose(a, b), M.make(nf, nf, {}, DenseMatrix::identity(1).scaled(q(6)))));
    // sparse ; sparse is the matrix product
    Obj f2 = FinmatModel::finite(2);
    Obj f3 = FinmatModel::finite(3);
    Rng rng(3);
    Mor x = M.random_mor(f2, f3, rng);
    Mor y = M.random_mor(f3, f2, rng);
    DenseMatrix X(3, 2), Y(2, 3);
    for (const auto& [k, v] : FinmatModel::matrix_of(x).sparse) X.at(k.first.l, k.second.l) = v;
    for (const auto& [k, v] : FinmatModel::matrix_of(y).sparse) Y.at(k.first.l, k.second.l) = v;
    DenseMatrix P = mat_mul(Y, X);
    Mor xym = M.compose(x, y);
    const auto& xy = FinmatModel::matrix_of(xym);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(xy.entry({r, 0, 0}, {c, 0, 0}).to_string(), P.at(r, c).to_string());
}

TEST(Finmat, CompositionAssociative) {
    FinmatModel M;
    Rng rng(99);
    std::vector<Obj> objs = {FinmatModel::finite(2), FinmatModel::nat(FinTag::Fin),
                             FinmatModel::space(Web::NatProd, {"u", "v"}, FinTag::Fin),
                             FinmatModel::nat(FinTag::All)};
    std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
    for (int i = 0; i < 50; ++i) {
        Obj a = objs[pick(rng)], b = objs[pick(rng)], c = objs[pick(rng)], d = objs[pick(rng)];
        Mor f = M.random_mor(a, b, rng);
        Mor g = M.random_mor(b, c, rng);
        Mor h = M.random_mor(c, d, rng);
        EXPECT_TRUE(M.equal(M.compose(M.compose(f, g), h), M.compose(f, M.compose(g, h))));
    }
}

TEST(Finmat, InverseOfPerturbedDiagonal) {
    FinmatModel M;
    Obj n2 = FinmatModel::space(Web::NatProd, {"u", "v"}, FinTag::Fin);
    Sparse s;
    s[{{0, 1, 0}, {1, 1, 0}}] = q(3);
    s[{{1, 0, 0}, {1, 0, 0}}] = q(1);
    Mor f = M.make(n2, n2, s, DenseMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}}));
    auto inv = M.inverse(f);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(M.equal(M.compose(f, *inv), M.id(n2)));
    EXPECT_TRUE(M.equal(M.compose(*inv, f), M.id(n2)));
}

TEST(Finmat, CoreWitness) {
    FinmatModel M;
    auto w = fin_core_witness(M);
    EXPECT_TRUE(w.forward_valid);
    EXPECT_FALSE(w.mx_invertible);
    EXPECT_FALSE(w.reverse.valid);
    EXPECT_EQ(w.reverse.witness, "{(n,n)}");
    EXPECT_TRUE(w.finite_mx_invertible);
    EXPECT_EQ(w.forward["diagTail"], mat_to_json(DenseMatrix::identity(1)));
}

TEST(Finmat, LawSuitePassesInsideFragment) {
    FinmatModel M;
    auto reports = run_suite(finmat_cfg(), M);
    EXPECT_GE(reports.size(), 60u);
    std::size_t n = 0, skipped = 0;
    for (const auto& r : reports) {
        n += r.instances;
        skipped += r.skipped;
        EXPECT_TRUE(r.pass()) << r.to_json().dump().substr(0, 1500);
        for (const auto& [code, _] : r.skip_reasons) EXPECT_TRUE(code == "outside-fragment" || code == "outside-core") << code;
    }
    EXPECT_GT(skipped, 0u);
    std::cout << reports.size() << " laws, " << n << " checked, " << skipped << " skipped\n";
}
