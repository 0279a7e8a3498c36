#include "skein/matrix.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace skein;

TEST(Matrix, ProductAndTranspose) {
    IntMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
    IntMatrix b(3, 2, {1, 0, 0, 1, 1, 1});
    EXPECT_EQ(a * b, IntMatrix(2, 2, {4, 5, 10, 11}));
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    EXPECT_EQ(a - a, IntMatrix(2, 3));
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Matrix, BlocksAndStacking) {
    IntMatrix a(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    EXPECT_EQ(a.block(1, 1, 2, 2), IntMatrix(2, 2, {5, 6, 8, 9}));
    EXPECT_EQ(a.submatrix({2, 0}, {1}), IntMatrix(2, 1, {8, 2}));
    IntMatrix s = a.block(0, 0, 1, 3).vstack(a.block(2, 0, 1, 3));
    EXPECT_EQ(s, IntMatrix(2, 3, {1, 2, 3, 7, 8, 9}));
}

TEST(Matrix, Antisymmetry) {
    EXPECT_TRUE(IntMatrix(2, 2, {0, 3, -3, 0}).is_antisymmetric());
    EXPECT_FALSE(IntMatrix(2, 2, {1, 3, -3, 0}).is_antisymmetric());
}

TEST(Matrix, DeterminantKnownValues) {
    EXPECT_EQ(determinant(IntMatrix::identity(4)), 1);
    EXPECT_EQ(determinant(IntMatrix(2, 2, {3, 8, 4, 6})), -14);
    EXPECT_EQ(determinant(IntMatrix(3, 3, {6, 1, 1, 4, -2, 5, 2, 8, 7})), -306);
    EXPECT_EQ(determinant(IntMatrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})), 0);
}

// Cofactor expansion as an independent route.
static Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        const Int sub = cofactor_det(m.submatrix(rows, cols));
        total += (j % 2 ? -1 : 1) * m(0, j) * sub;
    }
    return total;
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 1 + rng() % 6;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 11) - 5;
        EXPECT_EQ(determinant(m), cofactor_det(m));
    }
}

TEST(Matrix, RationalInverse) {
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 100) {
        const std::size_t n = 1 + rng() % 6;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 9) - 4;
        if (determinant(m) == 0) {
            EXPECT_THROW(rational_inverse(m), std::domain_error);
            continue;
        }
        const auto inv = rational_inverse(m);
        EXPECT_NE(inv.denom, 0);
        EXPECT_EQ(m * inv.numer, IntMatrix::scalar(n, inv.denom));
        ++tested;
    }
}

TEST(Matrix, ModularHelpers) {
    EXPECT_EQ(mod_floor(std::int64_t(-7), 5), 3);
    EXPECT_EQ(mod_floor(Int(-10), 5), 0);
    EXPECT_EQ(gcd(Int(12), Int(-18)), 6);
    EXPECT_EQ(lcm(Int(4), Int(6)), 12);
    EXPECT_EQ(ipow(Int(3), 5), 243);
}

TEST(Matrix, DivexactRequiresDivisibility) {
    IntMatrix a(1, 3, {4, -8, 12});
    EXPECT_TRUE(a.all_divisible_by(4));
    EXPECT_EQ(a.divexact(4), IntMatrix(1, 3, {1, -2, 3}));
    EXPECT_FALSE(a.all_divisible_by(8));
}
