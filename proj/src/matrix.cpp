#include "skein/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace skein {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& data)
    : r_(rows), c_(cols), a_(rows * cols) {
    if (data.size() != rows * cols) throw std::invalid_argument("IntMatrix: data size mismatch");
    for (std::size_t i = 0; i < data.size(); ++i) a_[i] = data[i];
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const Int& s) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

void IntMatrix::set_row(std::size_t i, const IntVec& v) {
    if (v.size() != c_) throw std::invalid_argument("set_row: length mismatch");
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::append_row(const IntVec& v) {
    if (r_ == 0 && c_ == 0) c_ = v.size();
    if (v.size() != c_) throw std::invalid_argument("append_row: length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++r_;
}

std::vector<IntVec> IntMatrix::row_list() const {
    std::vector<IntVec> out;
    out.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= r_ || cols[j] >= c_) throw std::out_of_range("submatrix index");
            s(i, j) = (*this)(rows[i], cols[j]);
        }
    return s;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) throw std::out_of_range("block");
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    if (r0 + b.rows() > r_ || c0 + b.cols() > c_) throw std::out_of_range("set_block");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    if (r_ == 0) return below;
    if (below.rows() == 0) return *this;
    if (below.cols() != c_) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix m(r_ + below.rows(), c_);
    m.set_block(0, 0, *this);
    m.set_block(r_, 0, below);
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_antisymmetric() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i; j < c_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool IntMatrix::all_divisible_by(const Int& d) const {
    for (const auto& x : a_)
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

IntMatrix IntMatrix::divexact(const Int& d) const {
    IntMatrix m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) mpz_divexact(m.a_[i].get_mpz_t(), a_[i].get_mpz_t(), d.get_mpz_t());
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix p(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Int& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const Int& y = b(k, j);
                if (y != 0) mpz_addmul(p(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            }
        }
    return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix s(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] + b.a_[i];
    return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix s(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] - b.a_[i];
    return s;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
    IntMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a) { return Int(-1) * a; }

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < c_; ++k) {
        const Int& s = (*this)(src, k);
        if (s != 0) mpz_addmul((*this)(dst, k).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < r_; ++k) {
        const Int& s = (*this)(k, src);
        if (s != 0) mpz_addmul((*this)(k, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < c_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < r_; ++k) (*this)(k, j) = -(*this)(k, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

IntVec vec_mul(const IntVec& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vec_mul: shape mismatch");
    IntVec out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) mpz_addmul(out[j].get_mpz_t(), v[i].get_mpz_t(), m(i, j).get_mpz_t());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RationalInverse rational_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rational_inverse: non-square");
    const std::size_t n = m.rows();
    IntMatrix a(n, 2 * n);
    a.set_block(0, 0, m);
    for (std::size_t i = 0; i < n; ++i) a(i, n + i) = 1;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("rational_inverse: singular matrix");
        a.swap_rows(k, p);
        const Int piv = a(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Int f = a(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                Int t = piv * a(i, j) - f * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = piv;
    }
    // Every diagonal entry now equals the final pivot.
    RationalInverse r{a.block(0, n, n, n), prev};
    for (std::size_t i = 0; i < n; ++i)
        if (a(i, i) != prev) throw std::logic_error("rational_inverse: diagonal not uniform");
    if (r.denom < 0) {
        r.denom = -r.denom;
        r.numer = -r.numer;
    }
    return r;
}

std::int64_t mod_floor(const Int& x, std::int64_t n) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return r.get_si();
}

std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace skein
