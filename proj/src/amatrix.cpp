#include "skein/amatrix.hpp"

#include "skein/zlattice.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace skein {

StructuralMatrices structural(int n) {
    if (n < 2) throw std::invalid_argument("structural: n must be at least 2");
    const std::size_t s = n - 1;
    StructuralMatrices m;
    m.n = n;
    m.e = IntMatrix(s, s);
    m.f = IntMatrix(s, s);
    m.g = IntMatrix(s, s);
    m.iprime = IntMatrix(s, s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            const long i = a + 1, j = b + 1;
            if (i >= j) m.e(a, b) = i - j + 1;
            m.g(a, b) = i <= j ? i * (n - j) : j * (n - i);
            if (a + b == s - 1) m.iprime(a, b) = 1;
        }
    for (std::size_t b = 0; b < s; ++b) m.f(0, b) = n - static_cast<long>(b + 1);
    for (std::size_t b = 0; b + 1 < s; ++b) m.f(b + 1, b) = -n;
    m.gprime = m.iprime * m.g;
    return m;
}

IntMatrix block_grid(std::size_t h, std::size_t bs,
                     const std::function<std::optional<IntMatrix>(std::size_t, std::size_t)>& fn) {
    IntMatrix out(h * bs, h * bs);
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b)
            if (auto x = fn(a, b)) out.set_block(a * bs, b * bs, *x);
    return out;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    IntMatrix out(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

IntMatrix diag_blocks(std::size_t h, const IntMatrix& x) {
    return block_grid(h, x.rows(), [&](std::size_t a, std::size_t b) -> std::optional<IntMatrix> {
        if (a == b) return x;
        return std::nullopt;
    });
}

IntMatrix cyclic_blocks(std::size_t h, const IntMatrix& x, bool corner) {
    return block_grid(h, x.rows(), [&](std::size_t a, std::size_t b) -> std::optional<IntMatrix> {
        if (a == b + 1 || (corner && a == 0 && b == h - 1)) return x;
        return std::nullopt;
    });
}

IntMatrix last_block_row(std::size_t h, const IntMatrix& x) {
    IntMatrix out(x.rows(), h * x.cols());
    out.set_block(0, (h - 1) * x.cols(), x);
    return out;
}

IntMatrix first_block_col(std::size_t h, const IntMatrix& x) {
    IntMatrix out(h * x.rows(), x.cols());
    out.set_block(0, 0, x);
    return out;
}

IntMatrix expected_b_block(int r, int n) {
    const auto ni = IntMatrix::scalar(n - 1, n);
    // r = 1 leaves only the corner block, which sits on the diagonal.
    return cyclic_blocks(r, ni, true);
}

IntMatrix expected_l_block(int r, int n) {
    const auto g = structural(n).g;
    return cyclic_blocks(r, g, true) - diag_blocks(r, g);
}

IntMatrix expected_reduced_p(int r, int n) {
    const auto st = structural(n);
    const std::size_t s = n - 1;
    const auto ni = IntMatrix::scalar(s, n);
    const auto a = -ni;
    if (r == 1) return a + Int(n) * st.iprime;
    const std::size_t h = r / 2, hs = h * s;
    const auto da = diag_blocks(h, a);
    IntMatrix out(r * s, r * s);
    out.set_block(0, 0, da);
    out.set_block(0, hs, -da);
    out.set_block(hs, hs, da);
    if (r % 2 == 0) {
        out.set_block(hs, 0, cyclic_blocks(h, ni, true));
        return out;
    }
    out.set_block(hs, 0, cyclic_blocks(h, ni, false));
    out.set_block(hs, 2 * hs, first_block_col(h, Int(n) * st.iprime));
    out.set_block(2 * hs, 0, last_block_row(h, ni));
    out.set_block(2 * hs, 2 * hs, a);
    return out;
}

IntMatrix expected_reduced_s(int r, int n) {
    const auto st = structural(n);
    const std::size_t s = n - 1;
    if (r == 1) return st.g + st.gprime;
    const std::size_t h = r / 2, hs = h * s;
    const auto dg = diag_blocks(h, st.g);
    IntMatrix out(r * s, r * s);
    out.set_block(0, 0, dg);
    out.set_block(0, hs, dg);
    out.set_block(hs, hs, dg);
    if (r % 2 == 0) {
        out.set_block(hs, 0, cyclic_blocks(h, st.g, true));
        return out;
    }
    out.set_block(hs, 0, cyclic_blocks(h, st.g, false));
    out.set_block(hs, 2 * hs, first_block_col(h, st.gprime));
    out.set_block(2 * hs, 0, last_block_row(h, st.g));
    out.set_block(2 * hs, 2 * hs, st.g);
    return out;
}

Int kbar_entry(int n, const Coord& v, const Coord& w) {
    (void)n;
    for (int rot = 0; rot < 3; ++rot) {
        const int i = v[rot], j = v[(rot + 1) % 3], k = v[(rot + 2) % 3];
        const int i2 = w[rot], j2 = w[(rot + 1) % 3], k2 = w[(rot + 2) % 3];
        if (i2 <= i && j2 >= j) return Int(j * k2 + k * i2 + i2 * j);
    }
    throw std::logic_error("kbar_entry: no admissible rotation");
}

IntMatrix kbar_triangle(int n) {
    const auto tri = polygon(3);
    const VertexIndex vi(tri, n);
    IntMatrix k(vi.size(), vi.size());
    for (std::size_t a = 0; a < vi.size(); ++a)
        for (std::size_t b = 0; b < vi.size(); ++b) k(a, b) = kbar_entry(n, vi[a].ijk, vi[b].ijk);
    return k;
}

IntMatrix k_from_h(const IntMatrix& h, int n) {
    if (h.rows() != h.cols()) throw std::domain_error("k_from_h: H is not square");
    const auto inv = rational_inverse(h);
    if (inv.denom == 0) throw std::domain_error("k_from_h: H is singular");
    const IntMatrix scaled = Int(n) * inv.numer;
    if (!scaled.all_divisible_by(inv.denom)) throw std::domain_error("k_from_h: n H^{-1} is not integral");
    return scaled.divexact(inv.denom);
}

namespace {

std::string first_diff(const IntMatrix& got, const IntMatrix& want) {
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        std::ostringstream os;
        os << "shape " << got.rows() << "x" << got.cols() << " vs " << want.rows() << "x" << want.cols();
        return os.str();
    }
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (got(i, j) != want(i, j)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): " << got(i, j) << " vs " << want(i, j);
                return os.str();
            }
    return {};
}

void expect_eq(CheckReport& rep, const std::string& name, const IntMatrix& got, const IntMatrix& want) {
    rep.add(name, got == want, first_diff(got, want));
}

std::vector<std::size_t> range_idx(std::size_t a, std::size_t b) {
    std::vector<std::size_t> v;
    for (std::size_t i = a; i < b; ++i) v.push_back(i);
    return v;
}

std::vector<std::size_t> as_size(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Block form of K Q in the (interior, boundary) partition: -2nI on the interior, zero below it.
void kq_block_form(CheckReport& rep, const std::string& tag, const IntMatrix& kq, std::size_t ni, int n) {
    const std::size_t sz = kq.rows();
    expect_eq(rep, tag + ": KQ interior block = -2nI", kq.block(0, 0, ni, ni), IntMatrix::scalar(ni, -2 * n));
    const auto ll = kq.block(ni, 0, sz - ni, ni);
    rep.add(tag + ": KQ lower-left block = O", ll.is_zero(), first_diff(ll, IntMatrix(sz - ni, ni)));
}

// P'(a,b) = n * sum over corners c of a's face at the start puncture of b's slot of [a_c == coordinate of b there].
CheckReport pprime_check(const std::string& tag, const Triangulation& t, const VertexIndex& vi, const IntMatrix& kq,
                         const std::vector<int>& inner, const std::vector<int>& bnd, std::uint64_t seed) {
    const int n = vi.n();
    std::vector<std::pair<int, int>> pairs;
    if (vi.size() <= 200) {
        for (int a : inner)
            for (int b : bnd) pairs.push_back({a, b});
    } else if (!inner.empty() && !bnd.empty()) {
        std::mt19937_64 rng(seed);
        for (int s = 0; s < 500; ++s)
            pairs.push_back({inner[rng() % inner.size()], bnd[rng() % bnd.size()]});
    }
    std::size_t bad = 0;
    std::string first;
    for (auto [a, b] : pairs) {
        const auto& vb = vi[b];
        auto [s, d] = slot_of(vb.ijk);
        const int punct = t.corner_puncture(vb.face, s);
        const int coord = n - d;
        const auto& va = vi[a];
        long sum = 0;
        for (int c = 0; c < 3; ++c)
            if (t.corner_puncture(va.face, c) == punct && va.ijk[c] == coord) ++sum;
        if (kq(a, b) != Int(n * sum)) {
            if (!bad) first = va.label + " x " + vb.label + ": " + kq(a, b).get_str() + " vs " + std::to_string(n * sum);
            ++bad;
        }
    }
    CheckReport rep;
    rep.add(tag + ": P' corner-delta formula (" + std::to_string(pairs.size()) + " pairs)", bad == 0,
            bad ? std::to_string(bad) + " mismatches; first " + first : std::string{});
    return rep;
}

}  // namespace

IntMatrix AMatrices::t1() const {
    const auto blk = kq.block(0, n_inner, n_inner, n_w);
    if (!blk.all_divisible_by(n)) throw std::logic_error("t1: upper-right KQ block not divisible by n");
    return blk.divexact(n);
}

AMatrices p_matrices(const ExtendedTriangulation& x, int n) {
    AMatrices a;
    a.n = n;
    a.vs = small_vertices(x, n);
    const auto& vb = a.vs.vbar;
    for (std::size_t v = 0; v < vb.size(); ++v) {
        const bool on_bnd = vb[v].on_edge && x.base.is_boundary(vb[v].edge);
        (on_bnd ? a.bnd_bar : a.inner_bar).push_back(static_cast<int>(v));
    }
    a.qbar = q_matrix(x.base, vb);
    a.hbar = h_matrix(x.base, vb, a.qbar);
    a.kbar = k_from_h(a.hbar, n);
    a.pbar = a.kbar * a.qbar * a.kbar.transpose();
    a.qbar_star = q_matrix(x.star, a.vs.vbar_star);
    a.hbar_star = h_matrix(x.star, a.vs.vbar_star, a.qbar_star);
    a.kbar_star = k_from_h(a.hbar_star, n);

    const auto vx = a.vs.v_x(), va = a.vs.v_a();
    a.n_inner = a.vs.inner.size();
    a.n_w = a.vs.w.size();
    a.h = restrict_matrix(a.hbar_star, vx, va);
    a.q = restrict_matrix(a.qbar_star, vx, vx);
    a.k = k_from_h(a.h, n);
    a.kq = a.k * a.q;
    a.p = a.kq * a.k.transpose();

    auto& rep = a.checks;
    const Int nn(n);
    expect_eq(rep, "Kbar Hbar = nI", a.kbar * a.hbar, IntMatrix::scalar(vb.size(), nn));
    expect_eq(rep, "Kbar* Hbar* = nI", a.kbar_star * a.hbar_star, IntMatrix::scalar(a.hbar_star.rows(), nn));
    expect_eq(rep, "K H = nI", a.k * a.h, IntMatrix::scalar(a.h.rows(), nn));
    rep.add("Q antisymmetric", a.qbar.is_antisymmetric() && a.q.is_antisymmetric());
    rep.add("P antisymmetric", a.p.is_antisymmetric());
    rep.add("P divisible by n", a.p.all_divisible_by(nn));
    expect_eq(rep, "Pbar = n(Kbar - Kbar^T)", a.pbar, nn * (a.kbar - a.kbar.transpose()));
    {
        const auto alt = nn * (a.k - a.k.transpose());
        rep.add_unasserted("P = n(K - K^T)", a.p == alt, first_diff(a.p, alt));
    }
    const auto& surf = x.base.surface();
    rep.add("|V| = (n^2-1) r", static_cast<long>(vx.size()) == static_cast<long>(n * n - 1) * surf.r());
    rep.add("|Vbar| = (n^2-1) r - n(n-1)/2 #boundary",
            static_cast<long>(vb.size()) ==
                static_cast<long>(n * n - 1) * surf.r() - static_cast<long>(n * (n - 1) / 2) * surf.boundary_edges());
    rep.add("|W| = |U| = (n-1) #boundary",
            static_cast<long>(a.n_w) == surf.w_size(n) && a.vs.u.size() == a.n_w);
    kq_block_form(rep, "lambda*", a.kq, a.n_inner, n);
    rep.add("KQ upper-right block divisible by n", a.kq.block(0, a.n_inner, a.n_inner, a.n_w).all_divisible_by(nn));

    // Kbar Qbar of lambda in the (interior, boundary) partition.
    std::vector<int> ord = a.inner_bar;
    ord.insert(ord.end(), a.bnd_bar.begin(), a.bnd_bar.end());
    const auto kqbar = restrict_matrix(a.kbar * a.qbar, ord, ord);
    kq_block_form(rep, "lambda", kqbar, a.inner_bar.size(), n);
    return a;
}

CheckReport verify_block_identities(const AMatrices& a, const ExtendedTriangulation& x, std::uint64_t seed) {
    CheckReport rep;
    const int n = a.n;
    const auto w = as_size(a.vs.w), u = as_size(a.vs.u);
    const auto ksqs = a.kbar_star * a.qbar_star;
    const auto blk_a = ksqs.submatrix(w, w);
    const auto blk_b = ksqs.submatrix(u, w);
    expect_eq(rep, "A = -nI", blk_a, IntMatrix::scalar(w.size(), -n));
    // W/U order lists components last-first.
    std::vector<IntMatrix> bs, ls;
    for (auto it = a.vs.rs.rbegin(); it != a.vs.rs.rend(); ++it) {
        bs.push_back(expected_b_block(*it, n));
        ls.push_back(expected_l_block(*it, n));
    }
    expect_eq(rep, "B = diag(B_i)", blk_b, block_diag(bs));
    const auto lr = range_idx(a.n_inner, a.n_inner + a.n_w);
    expect_eq(rep, "KQ lower-right = B - A", a.kq.submatrix(lr, lr), blk_b - blk_a);
    const auto lblk = a.kbar_star.submatrix(u, w) - a.kbar_star.submatrix(w, w);
    expect_eq(rep, "K32 - K22 = diag(L_i)", lblk, block_diag(ls));
    const auto st = structural(n);
    expect_eq(rep, "EF = G", st.e * st.f, st.g);

    rep.append(pprime_check("lambda", x.base, a.vs.vbar, a.kbar * a.qbar, a.inner_bar, a.bnd_bar, seed));
    std::vector<int> bnd_star = a.vs.w;
    bnd_star.insert(bnd_star.end(), a.vs.u.begin(), a.vs.u.end());
    rep.append(pprime_check("lambda*", x.star, a.vs.vbar_star, ksqs, a.vs.inner, bnd_star, seed));
    return rep;
}

CheckReport k2_parity_check(const AMatrices& a, const ExtendedTriangulation& x) {
    CheckReport rep;
    const int n = a.n;
    const auto t = a.t1();
    const auto ker = kernel_mod(t.transpose(), 2);
    IntMatrix gens(0, a.n_w);
    if (n % 2 == 0) {
        IntVec pat(a.n_w);
        const auto& bd = x.base.boundary();
        for (std::size_t c = 0; c < bd.size(); ++c)
            for (std::size_t j = 0; j < bd[c].size(); ++j)
                for (int k = 1; k < n; k += 2) pat[a.vs.w_pos(c, j, k) - a.n_inner] = 1;
        gens.append_row(pat);
    }
    const auto want = Lattice::from_generators_mod(gens, 2);
    rep.add(n % 2 ? "mod-2 kernel of T1 is trivial" : "mod-2 kernel of T1 is {0, (1,0,...,1) pattern}", ker == want);
    return rep;
}

ReducedMatrices reduced_matrices(const Triangulation& t, int n) {
    ReducedMatrices r;
    r.n = n;
    r.rv = reduced_vertex_sets(t, n);
    const auto qb = q_matrix(t, r.rv.vbar);
    const auto hb = h_matrix(t, r.rv.vbar, qb);
    r.q = restrict_matrix(qb, r.rv.order, r.rv.order);
    r.h = restrict_matrix(hb, r.rv.order, r.rv.order);
    r.k = k_from_h(r.h, n);
    r.kq = r.k * r.q;
    r.p = r.kq * r.k.transpose();
    const Int nn(n);
    expect_eq(r.checks, "reduced: K H = nI", r.k * r.h, IntMatrix::scalar(r.h.rows(), nn));
    expect_eq(r.checks, "reduced: P = n(K - K^T)", r.p, nn * (r.k - r.k.transpose()));
    kq_block_form(r.checks, "reduced", r.kq, r.rv.n_inner, n);
    return r;
}

CheckReport reduced_blocks(const ReducedMatrices& r) {
    CheckReport rep;
    const int n = r.n;
    const std::size_t sz = r.k.rows();
    const std::size_t ni = r.rv.n_inner;
    std::vector<IntMatrix> ps, ss;
    for (int ri : r.rv.rs) {
        ps.push_back(expected_reduced_p(ri, n));
        ss.push_back(expected_reduced_s(ri, n));
    }
    const auto kq_b = r.kq.block(ni, ni, sz - ni, sz - ni);
    const auto k_b = r.k.block(ni, ni, sz - ni, sz - ni);
    for (std::size_t c = 0; c < r.rv.rs.size(); ++c) {
        const std::size_t off = r.rv.comp_offset[c] - ni;
        const std::size_t len = static_cast<std::size_t>(r.rv.rs[c]) * (n - 1);
        const std::string tag = "component " + std::to_string(c) + " (r=" + std::to_string(r.rv.rs[c]) + ")";
        expect_eq(rep, "P_i shape, " + tag, kq_b.block(off, off, len, len), ps[c]);
        expect_eq(rep, "S_i shape, " + tag, k_b.block(off, off, len, len), ss[c]);
    }
    expect_eq(rep, "P = diag(P_i)", kq_b, block_diag(ps));
    expect_eq(rep, "K_boundary = diag(S_i)", k_b, block_diag(ss));
    return rep;
}

CheckReport reduced_parity_check(const ReducedMatrices& r) {
    CheckReport rep;
    const int n = r.n;
    const std::size_t sz = r.k.rows(), ni = r.rv.n_inner, nb = sz - ni;
    const auto pp = r.kq.block(0, ni, ni, nb);
    if (!pp.all_divisible_by(n)) {
        rep.add("reduced: P' divisible by n", false);
        return rep;
    }
    const auto ker = kernel_mod(pp.divexact(n).transpose(), 2);
    IntMatrix gens(0, nb);
    if (n % 2 == 0) {
        IntVec pat(nb);
        for (const auto& comp : r.rv.traversal)
            for (const auto& edge : comp)
                for (int k = 1; k < n; k += 2) pat[edge[k - 1] - ni] = 1;
        gens.append_row(pat);
    }
    const auto want = Lattice::from_generators_mod(gens, 2);
    rep.add("reduced: parity patterns lie in the mod-2 kernel of P'/n", ker.contains(want));
    const auto excess = quotient_order(ker, want);
    rep.add_unasserted(n % 2 ? "reduced: mod-2 kernel of P'/n is trivial" : "reduced: mod-2 kernel of P'/n is {0, pattern}",
                       excess == 1, "kernel is " + excess.get_str() + " times larger");
    return rep;
}

}  // namespace skein
