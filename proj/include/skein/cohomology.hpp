#pragma once

#include "skein/amatrix.hpp"
#include "skein/center.hpp"
#include "skein/check.hpp"
#include "skein/surface.hpp"
#include "skein/zlattice.hpp"

#include <vector>

namespace skein {

// Cell structure of the compactified surface: punctures, edges, faces.
// Cochains are row vectors; delta_i acts by right multiplication.
struct CWComplex {
    int n0 = 0, n1 = 0, n2 = 0;
    IntMatrix d0;  // n0 x n1
    IntMatrix d1;  // n1 x n2
    std::vector<bool> boundary_edge;
    std::vector<EdgeEnds> ends;  // endpoints along the cell orientation
    // Cell orientation agrees with the intrinsic orientation of the edge.
    std::vector<bool> intrinsic;
};

CWComplex cw_complex(const Triangulation& t);

// |{x in Z_k^rows : xM = 0 mod k}| from the Smith invariants of M.
Int kernel_order_mod(const IntMatrix& m, long k);
// |H_1(Sigma-bar, Z_k)| from the chain complex (transposed coboundaries).
Int h1_order(const CWComplex& c, long k);

// Subgroup of Z_N^dim, stored as its preimage lattice in Z^dim.
struct ModSubgroup {
    Lattice lattice;
    long modulus = 0;
    Int order() const;
    // Hermite basis reduced mod N, zero rows dropped.
    std::vector<IntVec> generators() const;
    bool contains(const IntVec& v) const { return lattice.contains(v); }
};

ModSubgroup cocycles(const CWComplex& c, long modulus);
// Z^1(Z_N)_l intersected with C^1_{d,boundary}; l = 1 or d = 1 drop the respective condition.
ModSubgroup cocycle_subgroup(const CWComplex& c, long modulus, long l, long d);
// Cochains whose boundary values are multiples of d.
ModSubgroup boundary_multiples(const CWComplex& c, long modulus, long d);

// s^k on the cells of the base triangulation, for k in Z^V (V = inner + W of the extended
// triangulation).
class JMap {
public:
    JMap(const ExtendedTriangulation& x, const AMatrices& a);

    const CWComplex& complex() const { return cw_; }
    // Small vertices of edge e in V, ordered along the cell orientation.
    const std::vector<int>& edge_vertices(int e) const { return edge_v_[e]; }
    bool balanced(const IntVec& k) const;
    // Throws std::invalid_argument when k is unbalanced or an edge vector is not
    // proportional to (1, ..., n-1) mod n.
    IntVec operator()(const IntVec& k) const;

private:
    int n_;
    CWComplex cw_;
    IntMatrix h_;
    std::vector<std::vector<int>> edge_v_;
};

struct ExactnessReport {
    Int source_quotient;  // |(Lambda cap m* Z^V) / N Z^V|
    Int target_order;     // |Z^1(Z_n)_{d*}|
    Int image_order;
    bool image_equal = false;  // im J = Z^1(Z_n)_{d*}
    bool kernel_contains = false;  // J(N e_v) = 0
    Int image_prime_order;
    bool image_prime_equal = false;  // im J' matches its predicted subgroup
    CheckReport checks;
};

// Needs m' even.
ExactnessReport j_exactness(const CenterContext& ctx, const RootParams& rp);

// Count identities on one triangulation; ks are the moduli for |Z^1(Z_k)|.
CheckReport cohomology_checks(const Triangulation& t, const std::vector<long>& ks);
// |Z^1(Z_n)_{d*} cap C^1_{d,boundary}| = (n'/2)^r 2^{2g+b-1}, requires d | n.
CheckReport zc_count_check(const Triangulation& t, const RootParams& rp);

}  // namespace skein
