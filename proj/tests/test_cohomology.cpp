#include "skein/cohomology.hpp"
#include "skein/report.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace skein;

namespace {

// |H_1| over Z_k as |ker d_1| / |im d_2| on chains, by enumeration.
Int h1_by_enumeration(const CWComplex& c, long k) {
    const auto ker = oracle::kernel_count(c.d0.transpose(), k);
    const auto im = oracle::image_count(c.d1.transpose(), k);
    return Int(static_cast<long>(ker / im));
}

}  // namespace

TEST(Cohomology, TriangleCounts) {
    const CWComplex c = cw_complex(polygon(3));
    EXPECT_EQ(c.n0, 3);
    EXPECT_EQ(c.n1, 3);
    EXPECT_EQ(c.n2, 1);
    EXPECT_TRUE((c.d0 * c.d1).is_zero());
    EXPECT_EQ(cocycles(c, 2).order(), 4);
    EXPECT_EQ(h1_order(c, 2), 1);
}

TEST(Cohomology, CountsAgainstEnumeration) {
    for (const auto& spec : zoo_surfaces()) {
        const Triangulation t = builtin(spec);
        const CWComplex c = cw_complex(t);
        const Surface& s = t.surface();
        EXPECT_EQ(c.n0 - c.n1 + c.n2, s.chi()) << spec;
        EXPECT_TRUE((c.d0 * c.d1).is_zero()) << spec;
        for (long k = 2; k <= 3; ++k) {
            if (oracle::space_size(k, c.n1) > 2e6) continue;
            SCOPED_TRACE(spec + " k=" + std::to_string(k));
            const Int z = static_cast<long>(oracle::kernel_count(c.d1, k));
            EXPECT_EQ(cocycles(c, k).order(), z);
            EXPECT_EQ(z, ipow(Int(k), s.r()));
            EXPECT_EQ(kernel_order_mod(c.d1, k), z);
            EXPECT_EQ(h1_order(c, k), h1_by_enumeration(c, k));
        }
    }
}

TEST(Cohomology, GenusOneH1) {
    const CWComplex c = cw_complex(builtin("genus:1,1"));
    EXPECT_EQ(h1_order(c, 2), h1_by_enumeration(c, 2));
    EXPECT_EQ(h1_order(c, 2), 4);
}

TEST(Cohomology, VanishingOnBoundary) {
    for (const auto& spec : {"polygon:3", "polygon:4", "annulus:1,2", "annulus:2,2", "genus:1,1"}) {
        const CWComplex c = cw_complex(builtin(spec));
        std::vector<int> bnd;
        for (int e = 0; e < c.n1; ++e)
            if (c.boundary_edge[e]) bnd.push_back(e);
        // Cocycle condition plus one column per boundary edge.
        IntMatrix m(c.n1, c.n2 + bnd.size());
        m.set_block(0, 0, c.d1);
        for (std::size_t j = 0; j < bnd.size(); ++j) m(bnd[j], c.n2 + j) = 1;
        for (long n = 2; n <= 4; ++n) {
            if (oracle::space_size(n, c.n1) > 2e6) continue;
            SCOPED_TRACE(std::string(spec) + " n=" + std::to_string(n));
            const auto sub = cocycle_subgroup(c, n, 1, n);
            EXPECT_EQ(sub.order(), static_cast<long>(oracle::kernel_count(m, n)));
            for (const auto& g : sub.generators())
                for (int e : bnd) EXPECT_EQ(g[e] % n, 0);
        }
    }
}

TEST(Cohomology, JMapBasics) {
    for (const auto& spec : {"polygon:3", "annulus:2,2"}) {
        SCOPED_TRACE(spec);
        const CenterContext ctx(builtin(spec), 2);
        const JMap j(ctx.ext(), ctx.mats());
        const std::size_t dim = ctx.mats().h.rows();
        const IntVec zero(dim);
        ASSERT_TRUE(j.balanced(zero));
        for (const auto& x : j(zero)) EXPECT_EQ(x, 0);
        bool saw_unbalanced = false;
        for (std::size_t v = 0; v < dim; ++v) {
            IntVec e(dim);
            e[v] = 2;
            for (const auto& x : j(e)) EXPECT_EQ(x % 2, 0);
            e[v] = 1;
            if (!j.balanced(e)) {
                saw_unbalanced = true;
                EXPECT_THROW(j(e), std::invalid_argument);
            }
        }
        EXPECT_TRUE(saw_unbalanced);
    }
}

TEST(Cohomology, ExactnessOnSmallCases) {
    for (const auto& spec : {"polygon:3", "polygon:4", "annulus:1,1", "annulus:2,2"})
        for (const long mpp : {4L, 8L, 12L}) {
            SCOPED_TRACE(std::string(spec) + " m''=" + std::to_string(mpp));
            const CenterContext ctx(builtin(spec), 2);
            const auto rep = j_exactness(ctx, root_params(2, mpp));
            EXPECT_TRUE(rep.checks.all_pass()) << ::testing::PrintToString(rep.checks.failures());
            EXPECT_TRUE(rep.image_equal);
            EXPECT_TRUE(rep.kernel_contains);
            EXPECT_EQ(rep.source_quotient, rep.target_order);
        }
}

TEST(Cohomology, CountIdentities) {
    for (const auto& spec : zoo_surfaces()) {
        SCOPED_TRACE(spec);
        const auto t = builtin(spec);
        EXPECT_TRUE(cohomology_checks(t, {2, 3, 4, 5, 6}).all_pass());
        for (int n = 2; n <= 4; ++n)
            for (long mpp = 2; mpp <= 16; ++mpp) {
                const auto rp = root_params(n, mpp);
                if (!rp.m_p_even() || n % rp.d != 0) continue;
                EXPECT_TRUE(zc_count_check(t, rp).all_pass()) << n << " " << mpp;
            }
    }
}
