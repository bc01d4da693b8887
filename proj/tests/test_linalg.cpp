#include <hodge/error.hpp>
#include <hodge/linalg.hpp>
#include <hodge/polynomial.hpp>
#include <hodge/rational.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hodge;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(to_string(parse_rational("4/2")), "2");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "2/-"}) {
        EXPECT_THROW(parse_rational(bad), Error) << bad;
    }
}

SparseVector sv(std::initializer_list<std::pair<std::size_t, int>> xs) {
    SparseVector v;
    for (auto [c, x] : xs) v.emplace_back(c, Rational(x));
    return v;
}

TEST(EchelonBasis, RankAndMembership) {
    EchelonBasis b(3);
    EXPECT_TRUE(b.insert(sv({{0, 2}, {1, 4}})));
    EXPECT_TRUE(b.insert(sv({{1, 1}, {2, 1}})));
    EXPECT_FALSE(b.insert(sv({{0, 1}, {1, 3}, {2, 1}})));  // sum of the first (halved) and second
    EXPECT_EQ(b.rank(), 2u);
    EXPECT_TRUE(b.contains(sv({{0, 3}, {1, 6}})));
    EXPECT_FALSE(b.contains(sv({{2, 1}})));
    EXPECT_EQ(b.non_pivots(), std::vector<std::size_t>{2});
}

TEST(EchelonBasis, NormalFormIsSupportedOffPivots) {
    EchelonBasis b(3);
    b.insert(sv({{0, 1}, {2, -1}}));
    const SparseVector r = b.reduce(sv({{0, 5}}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].first, 2u);
    EXPECT_EQ(r[0].second, Rational(5));
}

TEST(EchelonBasis, ZeroVectorDoesNotGrowRank) {
    EchelonBasis b(2);
    EXPECT_FALSE(b.insert(SparseVector{}));
    EXPECT_EQ(b.rank(), 0u);
}

TEST(Bareiss, KnownRanks) {
    RationalMatrix m(3, 3);
    EXPECT_EQ(bareiss_rank(m), 0u);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rational(i * 3 + j + 1);
    EXPECT_EQ(bareiss_rank(m), 2u);  // 1..9 grid has rank 2
    m(2, 2) = Rational(1, 3);
    EXPECT_EQ(bareiss_rank(m), 3u);
}

// Two independent rank computations must agree on random sparse matrices.
TEST(Bareiss, AgreesWithEchelonOnRandomMatrices) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::bernoulli_distribution sparse(0.5);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = size(rng);
        const int cols = size(rng);
        RationalMatrix m(rows, cols);
        EchelonBasis b(cols);
        for (int i = 0; i < rows; ++i) {
            SparseVector row;
            for (int j = 0; j < cols; ++j) {
                if (sparse(rng)) continue;
                Rational x(entry(rng), 1 + std::abs(entry(rng)));
                if (x == 0) continue;
                m(i, j) = x;
                row.emplace_back(j, x);
            }
            b.insert(row);
        }
        ASSERT_EQ(bareiss_rank(m), b.rank()) << "trial " << trial;
    }
}

TEST(RationalMatrix, Product) {
    RationalMatrix a(2, 2);
    a(0, 1) = 1;
    a(1, 0) = 1;
    const RationalMatrix sq = a * a;
    EXPECT_EQ(sq(0, 0), 1);
    EXPECT_EQ(sq(0, 1), 0);
    EXPECT_FALSE(sq.is_zero());
}

TEST(Polynomial, MonomialEnumerationOrderAndCount) {
    const auto ms = enumerate_monomials(3, 2);
    ASSERT_EQ(ms.size(), 6u);
    EXPECT_EQ(ms.front(), (Exponent{2, 0, 0}));
    EXPECT_EQ(ms.back(), (Exponent{0, 0, 2}));
    for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_GT(ms[i - 1], ms[i]);
}

TEST(Polynomial, DerivativeAndProduct) {
    Polynomial f(2);
    f.add_term({3, 0}, 1);
    f.add_term({1, 2}, Rational(-1, 2));
    EXPECT_EQ(f.homogeneous_degree(), 3);
    const Polynomial fx = f.derivative(0);
    EXPECT_EQ(fx.terms().at({2, 0}), 3);
    EXPECT_EQ(fx.terms().at({0, 2}), Rational(-1, 2));
    const Polynomial g = fx * fx;
    EXPECT_EQ(g.terms().at({2, 2}), -3);
    f.add_term({1, 0}, 1);
    EXPECT_EQ(f.homogeneous_degree(), -1);
}

TEST(Polynomial, CancellingTermsAreDropped) {
    Polynomial f(1);
    f.add_term({2}, 1);
    f.add_term({2}, -1);
    EXPECT_TRUE(f.is_zero());
}
