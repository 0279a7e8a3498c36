#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace skein {

using Int = mpz_class;
using IntVec = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& data);

    static IntMatrix identity(std::size_t n);
    static IntMatrix scalar(std::size_t n, const Int& s);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    IntVec row(std::size_t i) const;
    void set_row(std::size_t i, const IntVec& v);
    void append_row(const IntVec& v);
    std::vector<IntVec> row_list() const;

    IntMatrix transpose() const;
    IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    IntMatrix vstack(const IntMatrix& below) const;

    bool is_zero() const;
    bool is_antisymmetric() const;
    bool all_divisible_by(const Int& d) const;
    IntMatrix divexact(const Int& d) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& s, const IntMatrix& a);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Row operations used by the normal-form kernels.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row dst += q*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);  // col dst += q*col src
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

IntVec vec_mul(const IntVec& v, const IntMatrix& m);  // row vector times matrix
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant by fraction-free elimination.
Int determinant(const IntMatrix& m);

// Fraction-free Gauss-Jordan: returns (adj-like numerator X, denominator d) with m*X = d*I.
// Throws std::domain_error when m is singular.
struct RationalInverse {
    IntMatrix numer;
    Int denom;
};
RationalInverse rational_inverse(const IntMatrix& m);

// Small modular helpers shared by the mod-N kernels.
std::int64_t mod_floor(const Int& x, std::int64_t n);
std::int64_t mod_floor(std::int64_t x, std::int64_t n);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int ipow(const Int& b, unsigned long e);

}  // namespace skein
