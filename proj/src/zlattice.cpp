#include "skein/zlattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace skein {

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool divides(const Int& d, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

Int reduce(const Int& x, const Int& d) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return r;
}

// Smith elimination of a square matrix over Z/D. D must be a multiple of |det|, so the true
// invariants are gcd(d_i, D) with a zero pivot standing for D.
IntVec smith_mod(IntMatrix a, const Int& d) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = reduce(a(i, j), d);
    auto row_add = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) a(dst, j) = reduce(a(dst, j) + q * a(src, j), d);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) a(i, dst) = reduce(a(i, dst) + q * a(i, src), d);
    };
    IntVec diag(n, d);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t bi = n, bj = n;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (bi == n || a(i, j) < a(bi, bj))) bi = i, bj = j;
        if (bi == n) break;
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        // Every pass either finishes or leaves a smaller nonzero remainder as the pivot.
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                row_add(i, t, -fdiv(a(i, t), a(t, t)));
                if (a(i, t) != 0) {
                    a.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                col_add(j, t, -fdiv(a(t, j), a(t, t)));
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(a(t, t), a(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            row_add(t, bad, 1);
        }
        diag[t] = gcd(a(t, t), d);
    }
    return diag;
}

// Echelon form with pivot rows first; rows are kept whole so callers can read tails.
IntMatrix echelon(IntMatrix a, std::size_t pivot_cols, IntMatrix* u = nullptr) {
    const std::size_t r = a.rows();
    auto swap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (u) u->swap_rows(i, j);
    };
    auto add = [&](std::size_t dst, std::size_t src, const Int& q) {
        a.add_row_multiple(dst, src, q);
        if (u) u->add_row_multiple(dst, src, q);
    };
    std::size_t pr = 0;
    for (std::size_t c = 0; c < pivot_cols && pr < r; ++c) {
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = pr; i < r; ++i)
                if (a(i, c) != 0 && (best == r || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == r) break;
            swap(pr, best);
            bool done = true;
            for (std::size_t i = pr + 1; i < r; ++i) {
                if (a(i, c) == 0) continue;
                add(i, pr, -fdiv(a(i, c), a(pr, c)));
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(pr, c) == 0) continue;
        if (a(pr, c) < 0) {
            a.negate_row(pr);
            if (u) u->negate_row(pr);
        }
        for (std::size_t i = 0; i < pr; ++i) add(i, pr, -fdiv(a(i, c), a(pr, c)));
        ++pr;
    }
    return a;
}

std::size_t leading(const IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) return j;
    return m.cols();
}

using i128 = __int128;

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t tmp = a - q * b;
        a = b;
        b = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (a < 0) a = -a, s0 = -s0, t0 = -t0;
    s = s0;
    t = t0;
    return a;
}

// Canonical Hermite basis of span(gens) + N*Z^dim, all arithmetic modulo N.
IntMatrix hnf_mod_impl(std::vector<std::vector<std::int64_t>> gens, std::size_t dim, std::int64_t n) {
    std::vector<std::vector<std::int64_t>> b(dim, std::vector<std::int64_t>(dim, 0));
    for (std::size_t j = 0; j < dim; ++j) b[j][j] = n;
    auto insert = [&](std::vector<std::int64_t> v, std::size_t from) {
        for (std::size_t j = from; j < dim; ++j) {
            if (v[j] == 0) continue;
            std::int64_t s, t;
            const std::int64_t a = b[j][j], c = v[j];
            const std::int64_t g = egcd(a, c, s, t);
            const std::int64_t ag = a / g, cg = c / g;
            for (std::size_t k = j + 1; k < dim; ++k) {
                const i128 nb = static_cast<i128>(s) * b[j][k] + static_cast<i128>(t) * v[k];
                const i128 nv = static_cast<i128>(ag) * v[k] - static_cast<i128>(cg) * b[j][k];
                b[j][k] = static_cast<std::int64_t>(((nb % n) + n) % n);
                v[k] = static_cast<std::int64_t>(((nv % n) + n) % n);
            }
            b[j][j] = g;
            v[j] = 0;
        }
    };
    for (auto& g : gens) {
        for (auto& x : g) x = mod_floor(x, n);
        insert(std::move(g), 0);
    }
    // Close under (N/g_j)*row_j so that N*Z^dim lies in the span of the rows.
    for (std::size_t j = 0; j < dim; ++j) {
        const std::int64_t f = n / b[j][j];
        if (f == 1) continue;
        std::vector<std::int64_t> w(dim, 0);
        for (std::size_t k = j + 1; k < dim; ++k) w[k] = static_cast<std::int64_t>((static_cast<i128>(f) * b[j][k]) % n);
        insert(std::move(w), j + 1);
    }
    for (std::size_t j = 1; j < dim; ++j) {
        const std::int64_t p = b[j][j];
        for (std::size_t i = 0; i < j; ++i) {
            const std::int64_t q = b[i][j] / p;
            if (q == 0) continue;
            b[i][j] -= q * p;
            for (std::size_t k = j + 1; k < dim; ++k)
                b[i][k] = static_cast<std::int64_t>(((static_cast<i128>(b[i][k]) - static_cast<i128>(q) * b[j][k]) % n + n) % n);
        }
    }
    IntMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) out(i, k) = static_cast<long>(b[i][k]);
    return out;
}

constexpr std::int64_t kMachineModulusLimit = std::int64_t(1) << 40;

bool fits_machine(const Int& n) { return n > 0 && n < Int(static_cast<long>(kMachineModulusLimit)); }

}  // namespace

// Alternating row and column Hermite reduction keeps every entry bounded by its pivot,
// which plain pivoting does not on singular inputs.
SmithForm snf(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix a = m, u = IntMatrix::identity(r), vt = IntMatrix::identity(c);
    auto diagonal = [&] {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && a(i, j) != 0) return false;
        return true;
    };
    for (bool rows = true; !diagonal(); rows = !rows) {
        if (rows) {
            a = echelon(a, c, &u);
        } else {
            a = echelon(a.transpose(), r, &vt).transpose();
        }
    }
    IntMatrix v = vt.transpose();
    const std::size_t n = std::min(r, c);
    std::size_t rank = 0;
    while (rank < n && a(rank, rank) != 0) ++rank;
    // (x, y) -> (gcd, lcm) on the diagonal by one row and one column pass.
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = i + 1; j < rank; ++j) {
            const Int x = a(i, i), y = a(j, j);
            if (divides(x, y)) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            const Int p = -(y / g), q = x / g;
            u.add_row_multiple(i, j, 1);
            for (std::size_t k = 0; k < c; ++k) {
                const Int ci = v(k, i), cj = v(k, j);
                v(k, i) = s * ci + t * cj;
                v(k, j) = p * ci + q * cj;
            }
            u.add_row_multiple(j, i, -(y * t / g));
            a(i, i) = g;
            a(j, j) = x * y / g;
        }
    }
    for (std::size_t i = 0; i < rank; ++i)
        if (a(i, i) < 0) {
            a(i, i) = -a(i, i);
            u.negate_row(i);
        }
    return {std::move(u), std::move(a), std::move(v)};
}

IntVec smith_invariants(const IntMatrix& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    IntVec out(n, Int(0));
    const IntMatrix e = hnf(m);
    if (e.rows() == 0) return out;
    // Square nonsingular matrix with the same nonzero invariants.
    const IntMatrix f = hnf(e.transpose());
    Int d = 1;
    for (std::size_t i = 0; i < f.rows(); ++i) d *= f(i, i);
    d = abs(d);
    const IntVec inv = smith_mod(f, d);
    std::copy(inv.begin(), inv.end(), out.begin());
    return out;
}

IntMatrix hnf(const IntMatrix& gens) {
    IntMatrix e = echelon(gens, gens.cols());
    std::size_t k = 0;
    while (k < e.rows() && leading(e, k) < e.cols()) ++k;
    return e.block(0, 0, k, e.cols());
}

Lattice::Lattice(std::size_t dim) : dim_(dim), basis_(0, dim) {}

Lattice Lattice::from_generators(const IntMatrix& gens) {
    Lattice l(gens.cols());
    if (gens.rows() > 0) l.basis_ = hnf(gens);
    return l;
}

Lattice Lattice::from_generators(const std::vector<IntVec>& gens, std::size_t dim) {
    return from_generators(IntMatrix::from_rows(gens, dim));
}

Lattice Lattice::from_generators_mod(const IntMatrix& gens, const Int& modulus) {
    const std::size_t dim = gens.cols();
    if (!fits_machine(modulus)) {
        return from_generators(gens.vstack(IntMatrix::scalar(dim, modulus)));
    }
    const std::int64_t n = modulus.get_si();
    std::vector<std::vector<std::int64_t>> g(gens.rows(), std::vector<std::int64_t>(dim));
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < dim; ++j) g[i][j] = mod_floor(gens(i, j), n);
    Lattice l(dim);
    l.basis_ = hnf_mod_impl(std::move(g), dim, n);
    return l;
}

Lattice Lattice::full(std::size_t dim) { return scaled(dim, 1); }

Lattice Lattice::scaled(std::size_t dim, const Int& s) {
    Lattice l(dim);
    if (s != 0) l.basis_ = IntMatrix::scalar(dim, abs(s));
    return l;
}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Lattice: vector dimension mismatch");
    IntVec w = v;
    IntVec coords(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::size_t p = leading(basis_, i);
        for (std::size_t j = 0; j < p; ++j)
            if (w[j] != 0) return std::nullopt;
        if (!divides(basis_(i, p), w[p])) return std::nullopt;
        Int q = w[p] / basis_(i, p);
        coords[i] = q;
        if (q == 0) continue;
        for (std::size_t j = p; j < dim_; ++j)
            if (basis_(i, j) != 0) mpz_submul(w[j].get_mpz_t(), q.get_mpz_t(), basis_(i, j).get_mpz_t());
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Lattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("Lattice: dimension mismatch");
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Int> Lattice::index() const {
    if (!full_rank()) return std::nullopt;
    Int p = 1;
    for (std::size_t i = 0; i < dim_; ++i) p *= basis_(i, i);
    return p;
}

Lattice Lattice::operator+(const Lattice& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("Lattice: dimension mismatch");
    return from_generators(basis_.vstack(other.basis_));
}

Lattice Lattice::image(const IntMatrix& m) const {
    if (m.rows() != dim_) throw std::invalid_argument("Lattice::image: shape mismatch");
    if (rank() == 0) return Lattice(m.cols());
    return from_generators(basis_ * m);
}

bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.contains(b) && b.contains(a);
}

Lattice kernel_mod(const IntMatrix& m, const Int& modulus) {
    if (modulus < 2) throw std::invalid_argument("kernel_mod: modulus must be >= 2");
    const std::size_t r = m.rows(), c = m.cols();
    if (!fits_machine(modulus)) {
        IntMatrix a(r + c, c + r);
        a.set_block(0, 0, m);
        for (std::size_t j = 0; j < c; ++j) a(r + j, j) = modulus;
        for (std::size_t i = 0; i < r; ++i) a(i, c + i) = 1;
        IntMatrix e = echelon(a, c);
        std::vector<IntVec> ker;
        for (std::size_t i = 0; i < e.rows(); ++i) {
            if (leading(e, i) < c) continue;
            IntVec row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = e(i, c + j);
            ker.push_back(std::move(row));
        }
        return Lattice::from_generators(ker, r);
    }
    const std::int64_t n = modulus.get_si();
    std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a[i][j] = mod_floor(m(i, j), n);
    std::vector<std::vector<std::int64_t>> u(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
    auto row_sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t k = 0; k < c; ++k)
            if (a[src][k]) a[dst][k] = static_cast<std::int64_t>(((a[dst][k] - static_cast<i128>(q) * a[src][k]) % n + n) % n);
        for (std::size_t k = 0; k < r; ++k)
            if (u[src][k]) u[dst][k] = static_cast<std::int64_t>(((u[dst][k] - static_cast<i128>(q) * u[src][k]) % n + n) % n);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t k = 0; k < r; ++k)
            if (a[k][src]) a[k][dst] = static_cast<std::int64_t>(((a[k][dst] - static_cast<i128>(q) * a[k][src]) % n + n) % n);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < r; ++k) std::swap(a[k][i], a[k][j]);
    };
    const std::size_t steps = std::min(r, c);
    std::vector<std::int64_t> diag(r, 0);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t bi = r, bj = c;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (a[i][j] != 0 && (bi == r || a[i][j] < a[bi][bj])) bi = i, bj = j;
        if (bi == r) break;
        std::swap(a[t], a[bi]);
        std::swap(u[t], u[bi]);
        col_swap(t, bj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a[i][t] == 0) continue;
                row_sub(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    std::swap(u[t], u[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a[t][j] == 0) continue;
                col_sub(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        diag[t] = a[t][t];
    }
    std::vector<std::vector<std::int64_t>> gens;
    gens.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::int64_t g = diag[i] == 0 ? n : std::gcd(n, diag[i]);
        std::int64_t f = n / g;
        if (f == n) continue;
        std::vector<std::int64_t> row(r);
        for (std::size_t k = 0; k < r; ++k) row[k] = static_cast<std::int64_t>((static_cast<i128>(f) * u[i][k]) % n);
        gens.push_back(std::move(row));
    }
    IntMatrix g(gens.size(), r);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < r; ++k) g(i, k) = static_cast<long>(gens[i][k]);
    return Lattice::from_generators_mod(g, modulus);
}

std::optional<Int> index(const Lattice& l) { return l.index(); }

Int quotient_order(const Lattice& big, const Lattice& small) {
    if (!big.contains(small)) throw std::domain_error("quotient_order: lattice not contained");
    if (small.rank() < big.rank()) throw std::domain_error("quotient_order: infinite quotient");
    if (big.full_rank()) return *small.index() / *big.index();
    IntMatrix coords(small.rank(), big.rank());
    for (std::size_t i = 0; i < small.rank(); ++i) coords.set_row(i, *big.coordinates(small.basis().row(i)));
    Int p = 1;
    for (const auto& d : smith_invariants(coords)) p *= d;
    return p;
}

IntMatrix skew_block_form(const IntVec& h, std::size_t dim) {
    IntMatrix b(dim, dim);
    for (std::size_t i = 0; i < h.size(); ++i) {
        b(2 * i, 2 * i + 1) = h[i];
        b(2 * i + 1, 2 * i) = -h[i];
    }
    return b;
}

SkewDecomposition skew_normal_form(const IntMatrix& p, PivotRule rule) {
    if (!p.is_antisymmetric()) throw std::invalid_argument("skew_normal_form: matrix is not antisymmetric");
    const std::size_t n = p.rows();
    IntMatrix a = p;
    IntMatrix x = IntMatrix::identity(n);
    auto cswap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_rows(i, j);
        a.swap_cols(i, j);
        x.swap_cols(i, j);
    };
    auto cadd = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        a.add_col_multiple(dst, src, q);
        a.add_row_multiple(dst, src, q);
        x.add_col_multiple(dst, src, q);
    };
    auto cneg = [&](std::size_t i) {
        a.negate_row(i);
        a.negate_col(i);
        x.negate_col(i);
    };
    // Bring entry (i, j), i < j, to the pivot slot (p0, p1) with a positive sign.
    auto place = [&](std::size_t p0, std::size_t p1, std::size_t i, std::size_t j) {
        cswap(p0, i);
        if (j == p0) j = i;
        cswap(p1, j);
        if (a(p0, p1) < 0) cneg(p1);
    };
    SkewDecomposition out;
    std::size_t t = 0;
    while (2 * t + 1 < n) {
        const std::size_t p0 = 2 * t, p1 = 2 * t + 1;
        std::size_t bi = n, bj = n;
        for (std::size_t i = p0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a(i, j) == 0) continue;
                if (bi == n || (rule == PivotRule::MinAbs && abs(a(i, j)) < abs(a(bi, bj)))) bi = i, bj = j;
                if (rule == PivotRule::FirstNonzero) break;
            }
            if (rule == PivotRule::FirstNonzero && bi != n) break;
        }
        if (bi == n) break;
        place(p0, p1, bi, bj);
        for (;;) {
            bool clean = true;
            for (std::size_t k = p1 + 1; k < n && clean; ++k) {
                if (a(p0, k) != 0) {
                    cadd(k, p1, -fdiv(a(p0, k), a(p0, p1)));
                    if (a(p0, k) != 0) {
                        place(p0, p1, p0, k);
                        clean = false;
                        break;
                    }
                }
                if (a(p1, k) != 0) {
                    cadd(k, p0, fdiv(a(p1, k), a(p0, p1)));
                    if (a(p1, k) != 0) {
                        cswap(p0, p1);
                        place(p0, p1, p0, k);
                        clean = false;
                    }
                }
            }
            if (!clean) continue;
            std::size_t bad = n;
            for (std::size_t i = p1 + 1; i < n && bad == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!divides(a(p0, p1), a(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            cadd(p0, bad, 1);
        }
        out.h.push_back(a(p0, p1));
        ++t;
    }
    out.x = std::move(x);
    out.zeros = n - 2 * out.h.size();
    return out;
}

mpq_class weight_pairing(int i, int j, int n) {
    if (n < 2 || i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("weight_pairing: index out of range");
    mpq_class r((i == j ? 1 : 0) * n - 1, n);
    r.canonicalize();
    return r;
}

mpq_class varpi_pairing(int i, int j, int n) {
    if (n < 2 || i < 1 || j < 1 || i > n - 1 || j > n - 1) throw std::out_of_range("varpi_pairing: index out of range");
    mpq_class r(std::min(i, j) * n - i * j, n);
    r.canonicalize();
    return r;
}

}  // namespace skein
