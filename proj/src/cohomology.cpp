#include "skein/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace skein {

CWComplex cw_complex(const Triangulation& t) {
    CWComplex c;
    c.n0 = t.num_punctures();
    c.n1 = t.num_edges();
    c.n2 = t.num_faces();
    c.d0 = IntMatrix(c.n0, c.n1);
    c.d1 = IntMatrix(c.n1, c.n2);
    c.boundary_edge.resize(c.n1);
    c.intrinsic.resize(c.n1);
    c.ends.resize(c.n1);
    for (int e = 0; e < c.n1; ++e) {
        const bool bnd = t.is_boundary(e);
        c.boundary_edge[e] = bnd;
        c.intrinsic[e] = !(bnd && t.incidences(e).front().flip);
        c.ends[e] = bnd ? t.traversal_ends(e) : t.edge_ends(e);
        c.d0(c.ends[e].end, e) += 1;
        c.d0(c.ends[e].start, e) -= 1;
        for (const auto& in : t.incidences(e)) {
            const bool along = in.flip != c.intrinsic[e];  // slot direction vs cell direction
            c.d1(e, in.face) += along ? 1 : -1;
        }
    }
    return c;
}

Int kernel_order_mod(const IntMatrix& m, long k) {
    const Int kk(k);
    Int out = 1;
    const auto inv = smith_invariants(m);
    std::size_t nonzero = 0;
    for (const auto& s : inv) {
        if (s == 0) continue;
        ++nonzero;
        out *= gcd(s, kk);
    }
    return out * ipow(kk, m.rows() - nonzero);
}

Int h1_order(const CWComplex& c, long k) {
    // cycles: ker of d1 = d0^T on chains; boundaries: image of d2 = d1^T
    const Int cycles = kernel_order_mod(c.d0.transpose(), k);
    const Int faces_kernel = kernel_order_mod(c.d1.transpose(), k);
    const Int boundaries = ipow(Int(k), c.n2) / faces_kernel;
    return cycles / boundaries;
}

Int ModSubgroup::order() const { return ipow(Int(modulus), lattice.dim()) / *lattice.index(); }

std::vector<IntVec> ModSubgroup::generators() const {
    std::vector<IntVec> out;
    for (const auto& row : lattice.basis().row_list()) {
        IntVec v = row;
        bool zero = true;
        for (auto& x : v) {
            x = mod_floor(x, modulus);
            if (x != 0) zero = false;
        }
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

namespace {

std::vector<Congruence> cocycle_conditions(const CWComplex& c, long modulus) {
    std::vector<Congruence> out;
    for (int f = 0; f < c.n2; ++f) {
        Congruence cc{IntVec(c.n1), modulus};
        for (int e = 0; e < c.n1; ++e) cc.col[e] = c.d1(e, f);
        out.push_back(std::move(cc));
    }
    return out;
}

void divisibility(std::vector<Congruence>& out, const CWComplex& c, long modulus, long q, bool boundary_only) {
    const long g = std::gcd(q, modulus);
    if (g == 1) return;
    for (int e = 0; e < c.n1; ++e) {
        if (boundary_only && !c.boundary_edge[e]) continue;
        Congruence cc{IntVec(c.n1), g};
        cc.col[e] = 1;
        out.push_back(std::move(cc));
    }
}

ModSubgroup make(const CWComplex& c, long modulus, const std::vector<Congruence>& conds) {
    auto l = preimage_lattice(IntMatrix::identity(c.n1), conds);
    // every subgroup of Z_N^E contains N Z^E
    l = l + Lattice::scaled(c.n1, modulus);
    return {std::move(l), modulus};
}

Lattice kernel_mod_any(const IntMatrix& m, long modulus) {
    if (modulus == 1) return Lattice::full(m.rows());
    return kernel_mod(m, modulus);
}

}  // namespace

ModSubgroup cocycles(const CWComplex& c, long modulus) { return make(c, modulus, cocycle_conditions(c, modulus)); }

ModSubgroup cocycle_subgroup(const CWComplex& c, long modulus, long l, long d) {
    auto conds = cocycle_conditions(c, modulus);
    divisibility(conds, c, modulus, l, false);
    divisibility(conds, c, modulus, d, true);
    return make(c, modulus, conds);
}

ModSubgroup boundary_multiples(const CWComplex& c, long modulus, long d) {
    std::vector<Congruence> conds;
    divisibility(conds, c, modulus, d, true);
    return make(c, modulus, conds);
}

JMap::JMap(const ExtendedTriangulation& x, const AMatrices& a)
    : n_(a.n), cw_(cw_complex(x.base)), h_(a.h), edge_v_(x.base.num_edges()) {
    const auto& vs = a.vs;
    std::vector<int> pos(vs.vbar_star.size(), -1);
    for (std::size_t i = 0; i < vs.inner.size(); ++i) pos[vs.inner[i]] = static_cast<int>(i);
    for (int e = 0; e < x.base.num_edges(); ++e) {
        const int se = x.star_edge[e];
        const auto& in = x.star.incidences(se).front();
        for (int t = 1; t < n_; ++t) {
            const int along = cw_.intrinsic[e] ? t : n_ - t;  // distance along the intrinsic direction
            const int slot_t = in.flip ? n_ - along : along;
            const int v = vs.vbar_star.at(in.face, coord_on_slot(n_, in.slot, slot_t));
            if (pos[v] < 0) throw std::logic_error("JMap: edge vertex outside the interior set");
            edge_v_[e].push_back(pos[v]);
        }
    }
}

bool JMap::balanced(const IntVec& k) const {
    const Int nn(n_);
    for (const auto& x : vec_mul(k, h_))
        if (!mpz_divisible_p(x.get_mpz_t(), nn.get_mpz_t())) return false;
    return true;
}

IntVec JMap::operator()(const IntVec& k) const {
    if (k.size() != h_.rows()) throw std::invalid_argument("J: vector has the wrong length");
    if (!balanced(k)) throw std::invalid_argument("J: vector is not balanced");
    IntVec s(cw_.n1);
    for (int e = 0; e < cw_.n1; ++e) {
        const auto& ev = edge_v_[e];
        const Int se = mod_floor(k[ev[0]], n_);
        for (int i = 1; i < n_; ++i)
            if (mod_floor(Int(k[ev[i - 1]] - se * i), n_) != 0)
                throw std::invalid_argument("J: edge vector is not a multiple of (1, ..., n-1)");
        s[e] = se;
    }
    return s;
}

ExactnessReport j_exactness(const CenterContext& ctx, const RootParams& rp) {
    if (!rp.m_p_even()) throw std::invalid_argument("j_exactness: m' must be even");
    ExactnessReport rep;
    const auto& a = ctx.mats();
    const JMap j(ctx.ext(), a);
    const int n = rp.n;
    const long ms = rp.ms(), big_n = rp.N;
    const std::size_t dim = a.k.cols();

    const Lattice source = kernel_mod_any(a.k, ms).image(a.k);
    const Lattice kernel = Lattice::scaled(dim, big_n);
    rep.source_quotient = quotient_order(source, kernel);

    const auto target = cocycle_subgroup(j.complex(), n, *rp.d_star, 1);
    rep.target_order = target.order();

    auto image_of = [&](const Lattice& l) {
        std::vector<IntVec> gens;
        for (const auto& row : l.basis().row_list()) gens.push_back(j(row));
        return ModSubgroup{Lattice::from_generators(gens, j.complex().n1) + Lattice::scaled(j.complex().n1, n), n};
    };
    const auto im = image_of(source);
    rep.image_order = im.order();
    rep.image_equal = im.lattice == target.lattice;

    rep.kernel_contains = true;
    for (std::size_t v = 0; v < dim; ++v) {
        IntVec e(dim);
        e[v] = big_n;
        for (const auto& x : j(e))
            if (x != 0) rep.kernel_contains = false;
    }

    const auto im_prime = image_of(ctx.x_family(XVariant::X, rp));
    rep.image_prime_order = im_prime.order();
    const auto want = rp.n_p % 2 ? target : cocycle_subgroup(j.complex(), n, *rp.d_star, rp.d);
    rep.image_prime_equal = im_prime.lattice == want.lattice;

    rep.checks.add("N Z^V in ker J", rep.kernel_contains);
    rep.checks.add("im J = Z^1(Z_n)_{d*}", rep.image_equal);
    rep.checks.add("|source / N Z^V| = |Z^1(Z_n)_{d*}|", rep.source_quotient == rep.target_order,
                   rep.source_quotient.get_str() + " vs " + rep.target_order.get_str());
    rep.checks.add(rp.n_p % 2 ? "im J' = im J" : "im J' = Z^1_{d*} cap C^1_{d,boundary}", rep.image_prime_equal);
    return rep;
}

CheckReport cohomology_checks(const Triangulation& t, const std::vector<long>& ks) {
    CheckReport rep;
    const auto c = cw_complex(t);
    const auto& s = t.surface();
    rep.add("d1 d0 = 0", (c.d0 * c.d1).is_zero());
    for (long k : ks) {
        const Int want = ipow(Int(k), s.r());
        const Int via_smith = kernel_order_mod(c.d1, k);
        const Int via_lattice = cocycles(c, k).order();
        rep.add("|Z^1(Z_" + std::to_string(k) + ")| = k^r", via_smith == want && via_lattice == want,
                via_smith.get_str() + ", " + via_lattice.get_str() + " vs " + want.get_str());
    }
    const Int h1 = ipow(Int(2), 2 * s.genus + s.b() - 1);
    rep.add("|H_1(Z_2)| = 2^{2g+b-1}", h1_order(c, 2) == h1, h1_order(c, 2).get_str() + " vs " + h1.get_str());
    const Int zc = cocycle_subgroup(c, 2, 1, 2).order();
    rep.add("|Z^1 cap C^1_{2,boundary}| over Z_2 = |H_1(Z_2)|", zc == h1, zc.get_str() + " vs " + h1.get_str());
    return rep;
}

CheckReport zc_count_check(const Triangulation& t, const RootParams& rp) {
    CheckReport rep;
    if (!rp.m_p_even() || rp.n % rp.d != 0) return rep;
    const auto c = cw_complex(t);
    const auto& s = t.surface();
    const Int got = cocycle_subgroup(c, rp.n, *rp.d_star, rp.d).order();
    const Int want = ipow(Int(rp.n_p / 2), s.r()) * ipow(Int(2), 2 * s.genus + s.b() - 1);
    rep.add("|Z^1(Z_n)_{d*} cap C^1_{d,boundary}| = (n'/2)^r 2^{2g+b-1}", got == want,
            got.get_str() + " vs " + want.get_str());
    return rep;
}

}  // namespace skein
