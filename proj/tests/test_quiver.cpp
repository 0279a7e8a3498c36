#include "skein/amatrix.hpp"
#include "skein/quiver.hpp"
#include "skein/report.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace skein;

TEST(Quiver, FaceCoordinates) {
    for (int n = 2; n <= 6; ++n) {
        const auto cs = face_coords(n);
        EXPECT_EQ(static_cast<int>(cs.size()), (n + 1) * (n + 2) / 2 - 3);
        for (const auto& c : cs) EXPECT_EQ(c[0] + c[1] + c[2], n);
        for (int s = 0; s < 3; ++s)
            for (int t = 1; t < n; ++t) EXPECT_EQ(slot_of(coord_on_slot(n, s, t)), std::make_pair(s, t));
    }
}

TEST(Quiver, SmallVertexCounts) {
    for (const auto& spec : zoo_surfaces())
        for (int n = 2; n <= 4; ++n) {
            SCOPED_TRACE(spec + " n=" + std::to_string(n));
            const Triangulation t = builtin(spec);
            const VertexIndex vi(t, n);
            EXPECT_EQ(static_cast<int>(vi.size()), t.num_edges() * (n - 1) + t.num_faces() * (n - 1) * (n - 2) / 2);
            std::set<std::string> labels;
            for (const auto& v : vi.all()) labels.insert(v.label);
            EXPECT_EQ(labels.size(), vi.size());
        }
}

TEST(Quiver, AntisymmetricWithBoundedWeights) {
    for (const auto& spec : zoo_surfaces())
        for (int n = 2; n <= 4; ++n) {
            SCOPED_TRACE(spec + " n=" + std::to_string(n));
            const Triangulation t = builtin(spec);
            const VertexIndex vi(t, n);
            const IntMatrix q = q_matrix(t, vi);
            EXPECT_TRUE(q.is_antisymmetric());
            for (std::size_t i = 0; i < q.rows(); ++i)
                for (std::size_t j = 0; j < q.cols(); ++j) EXPECT_LE(abs(q(i, j)), 4);
        }
}

TEST(Quiver, SingleTriangleArrowCount) {
    // Arrows are the subdivision edges away from the corners; those along a side weigh 1.
    for (int n = 2; n <= 6; ++n) {
        const Triangulation t = polygon(3);
        const VertexIndex vi(t, n);
        const IntMatrix q = q_matrix(t, vi);
        Int boundary = 0, interior = 0;
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j) {
                if (q(i, j) <= 0) continue;
                (q(i, j) == 1 ? boundary : interior) += 1;
            }
        EXPECT_EQ(boundary, 3 * (n - 2));
        EXPECT_EQ(boundary + interior, 3 * n * (n + 1) / 2 - 6);
    }
}

TEST(Quiver, TriangleKMatchesClosedForm) {
    for (int n = 2; n <= 6; ++n) {
        SCOPED_TRACE(n);
        const Triangulation t = polygon(3);
        const VertexIndex vi(t, n);
        const IntMatrix q = q_matrix(t, vi);
        const IntMatrix h = h_matrix(t, vi, q);
        EXPECT_EQ(k_from_h(h, n), kbar_triangle(n));
    }
}
