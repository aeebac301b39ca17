#include <gtest/gtest.h>

#include <random>

#include "muc/scalar.hpp"

using namespace muc;

namespace {

GR gr(long re, long im = 0) { return GR(Rational(re), Rational(im)); }

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-3, 3);
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = gr(d(rng), d(rng));
    return m;
}

}  // namespace

TEST(GaussianRational, ProductOfConjugatePair) {
    EXPECT_EQ(gr(1, 1) * gr(1, -1), gr(2));
}

TEST(GaussianRational, Inverse) {
    auto half = gr_inv(gr(2));
    ASSERT_TRUE(half.has_value());
    EXPECT_EQ(*half, GR(Rational(1, 2), Rational(0)));
    EXPECT_FALSE(gr_inv(gr(0)).has_value());
    // (1+i)^-1 = (1-i)/2
    auto z = gr_inv(gr(1, 1));
    ASSERT_TRUE(z.has_value());
    EXPECT_EQ(*z, GR(Rational(1, 2), Rational(-1, 2)));
}

TEST(GaussianRational, Conjugation) {
    EXPECT_EQ(gr_conj(gr(3, 4)), gr(3, -4));
    GR half(Rational(1, 2), Rational(0));
    EXPECT_EQ(gr_conj(half), half);
    GR z(Rational(-2, 3), Rational(1, 5));
    EXPECT_EQ(gr_conj(gr_conj(z)), z);
    EXPECT_EQ(gr_norm2(gr(3, 4)), Rational(25));
}

TEST(GaussianRational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    GR z(Rational(3, 5), Rational(-4, 5));
    EXPECT_EQ(gr_from_json(gr_to_json(z)), z);
}

TEST(DenseMatrix, MultiplicationExamples) {
    auto m = DenseMatrix::from_rows({{gr(1), gr(2)}, {gr(3), gr(0, 1)}});
    EXPECT_EQ(mat_mul(DenseMatrix::identity(2), m), m);
    auto swap = DenseMatrix::from_rows({{gr(0), gr(1)}, {gr(1), gr(0)}});
    EXPECT_EQ(mat_mul(swap, swap), DenseMatrix::identity(2));
    auto a = DenseMatrix::from_rows({{gr(1), gr(0, 1)}, {gr(0), gr(1)}});
    auto b = DenseMatrix::from_rows({{gr(1), gr(0, -1)}, {gr(0), gr(1)}});
    EXPECT_EQ(mat_mul(a, b), DenseMatrix::identity(2));
    EXPECT_THROW(mat_mul(DenseMatrix(2, 3), DenseMatrix(2, 3)), DimensionError);
}

TEST(DenseMatrix, Kronecker) {
    auto swap = DenseMatrix::from_rows({{gr(0), gr(1)}, {gr(1), gr(0)}});
    EXPECT_EQ(mat_kron(DenseMatrix::identity(1), swap), swap);
    auto two = DenseMatrix::from_rows({{gr(2)}});
    auto expect = DenseMatrix::from_rows({{gr(0), gr(2)}, {gr(2), gr(0)}});
    EXPECT_EQ(mat_kron(two, swap), expect);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        auto x = random_matrix(rng, 2, 1), y = random_matrix(rng, 1, 3), z = random_matrix(rng, 2, 2);
        EXPECT_EQ(mat_kron(mat_kron(x, y), z), mat_kron(x, mat_kron(y, z)));
    }
    // lexicographic order: (e_i (x) e_j) sits at index i*3+j
    DenseMatrix e1(2, 1), e2(3, 1);
    e1.at(1, 0) = gr(1);
    e2.at(2, 0) = gr(1);
    auto k = mat_kron(e1, e2);
    for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(k.at(r, 0), gr(r == 5 ? 1 : 0));
}

TEST(DenseMatrix, Transposes) {
    auto i1 = DenseMatrix::from_rows({{gr(0, 1)}});
    EXPECT_EQ(mat_conj_transpose(i1), DenseMatrix::from_rows({{gr(0, -1)}}));
    EXPECT_EQ(mat_conj_transpose(DenseMatrix::identity(3)), DenseMatrix::identity(3));
    auto m = DenseMatrix::from_rows({{gr(1, 1), gr(2)}, {gr(0), gr(0, 3)}});
    auto expect = DenseMatrix::from_rows({{gr(1, -1), gr(0)}, {gr(2), gr(0, -3)}});
    EXPECT_EQ(mat_conj_transpose(m), expect);
    EXPECT_EQ(mat_conj_transpose(m), mat_transpose(mat_entrywise_conj(m)));
}

TEST(DenseMatrix, Inverse) {
    EXPECT_EQ(*mat_inverse(DenseMatrix::identity(2)), DenseMatrix::identity(2));
    auto swap = DenseMatrix::from_rows({{gr(0), gr(1)}, {gr(1), gr(0)}});
    EXPECT_EQ(*mat_inverse(swap), swap);
    auto ones = DenseMatrix::from_rows({{gr(1), gr(1)}, {gr(1), gr(1)}});
    EXPECT_FALSE(mat_inverse(ones).has_value());
    EXPECT_THROW(mat_inverse(DenseMatrix(2, 3)), DimensionError);
}

TEST(DenseMatrix, Nullspace) {
    EXPECT_TRUE(mat_nullspace(DenseMatrix::identity(2)).empty());
    auto n1 = mat_nullspace(DenseMatrix::from_rows({{gr(1), gr(0)}, {gr(0), gr(0)}}));
    ASSERT_EQ(n1.size(), 1u);
    EXPECT_EQ(n1[0], DenseMatrix::column({gr(0), gr(1)}));
    auto n2 = mat_nullspace(DenseMatrix::from_rows({{gr(1), gr(1)}, {gr(1), gr(1)}}));
    ASSERT_EQ(n2.size(), 1u);
    EXPECT_EQ(n2[0], DenseMatrix::column({gr(-1), gr(1)}));
}

TEST(DenseMatrix, SolveAndJson) {
    auto a = DenseMatrix::from_rows({{gr(1), gr(2)}, {gr(3), gr(4)}});
    auto b = DenseMatrix::column({gr(5), gr(6)});
    auto x = mat_solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(mat_mul(a, *x), b);
    auto sing = DenseMatrix::from_rows({{gr(1), gr(1)}, {gr(1), gr(1)}});
    EXPECT_FALSE(mat_solve(sing, DenseMatrix::column({gr(1), gr(0)})).has_value());
    EXPECT_EQ(mat_from_json(mat_to_json(a)), a);
}

TEST(DenseMatrixProperties, SeededInvariants) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int t = 0; t < 60; ++t) {
        std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
        auto a = random_matrix(rng, p, q), b = random_matrix(rng, q, r), c = random_matrix(rng, r, s);
        EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
        EXPECT_EQ(mat_conj_transpose(mat_mul(a, b)), mat_mul(mat_conj_transpose(b), mat_conj_transpose(a)));
        // low-rank input so nullspaces are nontrivial
        auto low = mat_mul(random_matrix(rng, p, 1), random_matrix(rng, 1, q));
        for (const auto& m : {a, low}) {
            auto ns = mat_nullspace(m);
            for (const auto& v : ns) EXPECT_TRUE(mat_mul(m, v).is_zero());
            EXPECT_EQ(mat_rank(m) + ns.size(), m.cols());
        }
        if (p == q) {
            auto inv = mat_inverse(a);
            if (inv) {
                EXPECT_EQ(mat_mul(a, *inv), DenseMatrix::identity(p));
                EXPECT_EQ(mat_mul(*inv, a), DenseMatrix::identity(p));
            } else {
                EXPECT_LT(mat_rank(a), p);
            }
        }
    }
}
