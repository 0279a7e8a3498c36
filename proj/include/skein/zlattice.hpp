#pragma once

#include "skein/matrix.hpp"

#include <optional>
#include <vector>

namespace skein {

// U*M*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMatrix u, d, v;
};
SmithForm snf(const IntMatrix& m);
// Diagonal of the Smith form (length min(rows, cols)), no transforms.
IntVec smith_invariants(const IntMatrix& m);

// Row-style Hermite normal form of the row span: nonzero rows only, positive pivots,
// entries above each pivot reduced into [0, pivot).
IntMatrix hnf(const IntMatrix& gens);

// Finitely generated subgroup of Z^dim, stored by its canonical Hermite basis.
class Lattice {
public:
    explicit Lattice(std::size_t dim = 0);
    static Lattice from_generators(const IntMatrix& gens);
    static Lattice from_generators(const std::vector<IntVec>& gens, std::size_t dim);
    // Lattice generated by gens together with N*Z^dim; runs in machine integers.
    static Lattice from_generators_mod(const IntMatrix& gens, const Int& modulus);
    static Lattice full(std::size_t dim);
    static Lattice scaled(std::size_t dim, const Int& s);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.rows(); }
    bool full_rank() const { return rank() == dim_; }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntVec& v) const;
    bool contains(const Lattice& other) const;
    // Coordinates of v in the Hermite basis; nullopt when v is not a member.
    std::optional<IntVec> coordinates(const IntVec& v) const;

    // |Z^dim / L|, nullopt when infinite.
    std::optional<Int> index() const;

    Lattice operator+(const Lattice& other) const;
    // {x*M : x in L}
    Lattice image(const IntMatrix& m) const;

    friend bool operator==(const Lattice& a, const Lattice& b);
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

private:
    std::size_t dim_;
    IntMatrix basis_;
};

// {k in Z^rows : k*M = 0 mod N}
Lattice kernel_mod(const IntMatrix& m, const Int& modulus);
std::optional<Int> index(const Lattice& l);
// |big / small|; throws std::domain_error on non-containment or infinite quotient.
Int quotient_order(const Lattice& big, const Lattice& small);

enum class PivotRule { MinAbs, FirstNonzero };

// X^T P X = diag([[0,h_1],[-h_1,0]], ..., 0, ...), h_1 | h_2 | ..., |det X| = 1.
struct SkewDecomposition {
    IntMatrix x;
    IntVec h;
    std::size_t zeros = 0;
};
SkewDecomposition skew_normal_form(const IntMatrix& p, PivotRule rule = PivotRule::MinAbs);
IntMatrix skew_block_form(const IntVec& h, std::size_t dim);

// <w_i, w_j> = delta_ij - 1/n and <varpi_i, varpi_j> = min(i,j) - ij/n.
mpq_class weight_pairing(int i, int j, int n);
mpq_class varpi_pairing(int i, int j, int n);

}  // namespace skein
