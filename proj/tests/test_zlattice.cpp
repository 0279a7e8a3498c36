#include "skein/zlattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace skein;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

IntMatrix random_skew(std::mt19937_64& rng, std::size_t n, int bound) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace

TEST(Smith, KnownForm) {
    const auto d = smith_invariants(IntMatrix(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16}));
    EXPECT_EQ(d, (IntVec{2, 6, 12}));
    EXPECT_EQ(smith_invariants(IntMatrix(2, 3)), (IntVec{0, 0}));
}

TEST(Smith, TransformsFuzz) {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 400; ++it) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        IntMatrix m = random_matrix(rng, r, c, 9);
        if (it % 3 == 0 && r > 1) m.set_row(r - 1, m.row(0));  // singular
        const auto f = snf(m);
        ASSERT_EQ(f.u * m * f.v, f.d) << m;
        EXPECT_EQ(abs(determinant(f.u)), 1);
        EXPECT_EQ(abs(determinant(f.v)), 1);
        const auto inv = smith_invariants(m);
        for (std::size_t i = 0; i < inv.size(); ++i) {
            EXPECT_EQ(f.d(i, i), inv[i]);
            EXPECT_GE(inv[i], 0);
            if (i + 1 < inv.size() && inv[i] != 0) EXPECT_TRUE(inv[i + 1] % inv[i] == 0);
            if (i + 1 < inv.size() && inv[i] == 0) EXPECT_EQ(inv[i + 1], 0);
        }
    }
}

TEST(Smith, SingularSkewInput) {
    // Unreduced elimination blows up on this one; both routes must finish and agree.
    IntMatrix m(9, 9, {0, 7, 7, -8, 2, 5, -4, -4, -7, -7, 0, 1, -9, -2, 5, -3, 5, 6,
                       -7, -1, 0, 9, -4, -3, -6, -3, -9, 8, 9, -9, 0, -3, 6, -7, 9, 7,
                       -2, 2, 4, 3, 0, -4, 4, -3, -3, -5, -5, 3, -6, 4, 0, 4, 0, -5,
                       4, 3, 6, 7, -4, -4, 0, -8, -4, 4, -5, 3, -9, 3, 0, 8, 0, 9,
                       7, -6, 9, -7, 3, 5, 4, -9, 0});
    ASSERT_EQ(determinant(m), 0);
    const auto f = snf(m);
    EXPECT_EQ(f.u * m * f.v, f.d);
    const auto inv = smith_invariants(m);
    EXPECT_EQ(inv.back(), 0);
    for (std::size_t i = 0; i < inv.size(); ++i) EXPECT_EQ(f.d(i, i), inv[i]);
}

TEST(Hermite, CanonicalForm) {
    const IntMatrix h = hnf(IntMatrix(3, 3, {2, 4, 6, 1, 1, 1, 3, 5, 7}));
    EXPECT_EQ(h, IntMatrix(2, 3, {1, 1, 1, 0, 2, 4}));
}

TEST(Hermite, InvariantUnderUnimodularRowOps) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, r, c, 6);
        IntMatrix u = IntMatrix::identity(r);
        for (int k = 0; k < 6 && r > 1; ++k) {
            const std::size_t i = rng() % r, j = (i + 1 + rng() % (r - 1)) % r;
            u.add_row_multiple(i, j, static_cast<long>(rng() % 5) - 2);
        }
        EXPECT_EQ(hnf(m), hnf(u * m));
        EXPECT_EQ(Lattice::from_generators(m), Lattice::from_generators(u * m));
    }
}

TEST(Lattice, MembershipAndIndex) {
    const Lattice l = Lattice::from_generators(IntMatrix(2, 2, {2, 0, 1, 3}));
    EXPECT_EQ(l.index().value(), 6);
    EXPECT_TRUE(l.contains(IntVec{3, 3}));
    EXPECT_FALSE(l.contains(IntVec{1, 0}));
    EXPECT_TRUE(l.contains(Lattice::scaled(2, 6)));
    EXPECT_FALSE(Lattice::from_generators(IntMatrix(1, 2, {1, 1})).index().has_value());
    EXPECT_EQ(quotient_order(Lattice::full(2), l), 6);
    EXPECT_EQ(quotient_order(l, Lattice::scaled(2, 6)), 6);
    EXPECT_THROW(quotient_order(Lattice::scaled(2, 6), l), std::domain_error);
}

TEST(Lattice, SumAndImage) {
    const Lattice a = Lattice::from_generators(IntMatrix(1, 2, {2, 0}));
    const Lattice b = Lattice::from_generators(IntMatrix(1, 2, {0, 3}));
    EXPECT_EQ((a + b).index().value(), 6);
    const Lattice img = Lattice::full(2).image(IntMatrix(2, 2, {1, 1, 1, -1}));
    EXPECT_EQ(img.index().value(), 2);
}

TEST(Lattice, ModularGeneratorsMatchExact) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const long n = 2 + static_cast<long>(rng() % 11);
        const IntMatrix g = random_matrix(rng, r, c, 20);
        EXPECT_EQ(Lattice::from_generators_mod(g, n), Lattice::from_generators(g.vstack(IntMatrix::scalar(c, n))));
    }
}

TEST(KernelMod, CountMatchesEnumeration) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 150; ++it) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const long n = 2 + static_cast<long>(rng() % 7);
        const IntMatrix m = random_matrix(rng, r, c, 9);
        const Lattice k = kernel_mod(m, n);
        ASSERT_TRUE(k.index().has_value());
        // |ker| * |Z^r / K| = n^r
        const Int count = static_cast<long>(oracle::kernel_count(m, n));
        EXPECT_EQ(count * k.index().value(), ipow(Int(n), r));
        for (const auto& x : oracle::kernel_members(m, n)) {
            IntVec v(x.begin(), x.end());
            EXPECT_TRUE(k.contains(v));
        }
    }
}

TEST(SkewNormalForm, Fuzz) {
    std::mt19937_64 rng(20240611);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = 1 + rng() % 8;
        const IntMatrix p = random_skew(rng, n, 9);
        for (const auto rule : {PivotRule::MinAbs, PivotRule::FirstNonzero}) {
            const auto s = skew_normal_form(p, rule);
            EXPECT_EQ(abs(determinant(s.x)), 1);
            EXPECT_EQ(s.x.transpose() * p * s.x, skew_block_form(s.h, n));
            EXPECT_EQ(2 * s.h.size() + s.zeros, n);
            for (std::size_t i = 0; i + 1 < s.h.size(); ++i) EXPECT_TRUE(s.h[i + 1] % s.h[i] == 0);
            // Smith invariants of a skew matrix come in equal pairs.
            const auto inv = smith_invariants(p);
            for (std::size_t i = 0; i < s.h.size(); ++i) {
                EXPECT_EQ(inv[2 * i], s.h[i]);
                EXPECT_EQ(inv[2 * i + 1], s.h[i]);
            }
        }
        EXPECT_EQ(skew_normal_form(p, PivotRule::MinAbs).h, skew_normal_form(p, PivotRule::FirstNonzero).h);
    }
}

TEST(Pairings, WeightAndVarpi) {
    EXPECT_EQ(weight_pairing(1, 1, 3), mpq_class(2, 3));
    EXPECT_EQ(weight_pairing(1, 2, 3), mpq_class(-1, 3));
    EXPECT_EQ(varpi_pairing(1, 2, 4), mpq_class(1, 2));
    EXPECT_EQ(varpi_pairing(2, 2, 4), mpq_class(1));
}
