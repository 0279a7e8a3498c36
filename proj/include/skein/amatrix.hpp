#pragma once

#include "skein/check.hpp"
#include "skein/matrix.hpp"
#include "skein/quiver.hpp"
#include "skein/surface.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace skein {

// (n-1)x(n-1) building blocks.
struct StructuralMatrices {
    int n = 0;
    IntMatrix e, f, g, gprime, iprime;
};
StructuralMatrices structural(int n);

// Grid of h x h blocks of size bs; fn returns the block at (a, b) or nullopt for zero.
IntMatrix block_grid(std::size_t h, std::size_t bs,
                     const std::function<std::optional<IntMatrix>(std::size_t, std::size_t)>& fn);
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);
IntMatrix diag_blocks(std::size_t h, const IntMatrix& x);
// x on the block subdiagonal (a = b+1), plus the corner block (0, h-1) when corner is set.
IntMatrix cyclic_blocks(std::size_t h, const IntMatrix& x, bool corner = true);
// One block row (resp. column) with x in the last (resp. first) slot.
IntMatrix last_block_row(std::size_t h, const IntMatrix& x);
IntMatrix first_block_col(std::size_t h, const IntMatrix& x);

// Component blocks in the W/U order.
IntMatrix expected_b_block(int r, int n);  // (K*Q*)[U,W]
IntMatrix expected_l_block(int r, int n);  // K*[U,W] - K*[W,W]
// Component blocks of the reduced matrices in the (W_i, U_i, V_i) order.
IntMatrix expected_reduced_p(int r, int n);
IntMatrix expected_reduced_s(int r, int n);

// Closed-form single-triangle matrix, indexed like VertexIndex(polygon(3), n).
IntMatrix kbar_triangle(int n);
Int kbar_entry(int n, const Coord& v, const Coord& w);

// K = n H^{-1}; throws std::domain_error if H is singular or n H^{-1} is not integral.
IntMatrix k_from_h(const IntMatrix& h, int n);

struct AMatrices {
    int n = 0;
    VertexSets vs;
    std::vector<int> inner_bar, bnd_bar;  // interior / boundary vertices of lambda
    IntMatrix qbar, hbar, kbar, pbar;
    IntMatrix qbar_star, hbar_star, kbar_star;
    IntMatrix q, h, k, p, kq;  // rows/cols in V' = inner+U and V = inner+W
    std::size_t n_inner = 0, n_w = 0;
    CheckReport checks;

    // (D/n - C_1 A) read from the upper-right block of KQ.
    IntMatrix t1() const;
};

AMatrices p_matrices(const ExtendedTriangulation& x, int n);
CheckReport verify_block_identities(const AMatrices& a, const ExtendedTriangulation& x, std::uint64_t seed = 1);
// Mod-2 kernel of T1 acting on Z_2^W.
CheckReport k2_parity_check(const AMatrices& a, const ExtendedTriangulation& x);

struct ReducedMatrices {
    int n = 0;
    ReducedVertexSets rv;
    IntMatrix q, h, k, p, kq;
    CheckReport checks;
};

ReducedMatrices reduced_matrices(const Triangulation& t, int n);
// Boundary block shapes of K Q and K on the ear triangulation.
CheckReport reduced_blocks(const ReducedMatrices& r);
CheckReport reduced_parity_check(const ReducedMatrices& r);

}  // namespace skein
