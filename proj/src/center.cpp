#include "skein/center.hpp"

#include <numeric>
#include <stdexcept>

namespace skein {

RootParams root_params(int n, long m_pp) {
    if (n < 2) throw std::invalid_argument("root_params: n must be at least 2");
    if (m_pp < 2) throw std::invalid_argument("root_params: m'' must be at least 2");
    RootParams p;
    p.n = n;
    p.m_pp = m_pp;
    p.d_p = std::gcd(static_cast<long>(n), m_pp);
    p.m_p = m_pp / p.d_p;
    p.d = std::gcd(2L * n, p.m_p);
    p.m = p.m_p / p.d;
    p.n_p = 2L * n / p.d;
    p.m_bar = p.m;
    while (p.m_bar % 2 == 0) {
        p.m_bar /= 2;
        ++p.k;
    }
    if (p.m_p % 2 == 0) {
        p.m_star = p.m_p / 2;
        p.d_star = p.d / 2;  // d is even whenever m' is
        p.m_tilde = *p.d_star * p.m_bar;
        p.N = n * *p.m_star / *p.d_star;
    } else {
        p.N = n * p.m_p / p.d;
    }
    if (p.m_p % 2) {
        p.case_label = "m' odd";
    } else if (*p.m_star % 2) {
        p.case_label = n % 2 ? "m* odd, n odd" : "m* odd, n even";
    } else if (n % 2) {
        p.case_label = "m* even, n odd";
    } else if (p.m % 2 == 0) {
        p.case_label = "m* even, n even, m even";
    } else {
        p.case_label = p.n_p % 2 ? "m* even, n even, m odd, n' odd" : "m* even, n even, m odd, n' even";
    }
    return p;
}

const char* variant_name(XVariant v) {
    switch (v) {
        case XVariant::X: return "X";
        case XVariant::XStar: return "X*";
        case XVariant::XBarStar: return "Xbar*";
        case XVariant::XBar: return "Xbar";
        case XVariant::XSharp: return "X#";
        case XVariant::XBarSharp: return "Xbar#";
        case XVariant::XOdd: return "Xodd";
        case XVariant::Omega: return "Omega";
        case XVariant::Y: return "Y";
    }
    return "?";
}

Lattice preimage_lattice(const IntMatrix& k, const std::vector<Congruence>& conds) {
    Int big = 1;
    for (const auto& c : conds) big = lcm(big, Int(c.modulus));
    if (big == 1) return Lattice::full(k.rows());
    IntMatrix a(k.cols(), conds.size());
    for (std::size_t j = 0; j < conds.size(); ++j) {
        if (conds[j].modulus == 1) continue;
        const Int scale = big / conds[j].modulus;
        for (std::size_t i = 0; i < k.cols(); ++i)
            if (conds[j].col[i] != 0) a(i, j) = conds[j].col[i] * scale;
    }
    return kernel_mod(k * a, big);
}

namespace {

mpq_class pow_q(long base, long e) {
    mpq_class r = 1;
    const mpq_class b = base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    if (e < 0) r = 1 / r;
    return r;
}

Congruence unit_cond(std::size_t dim, std::size_t i, long mod) {
    Congruence c{IntVec(dim), mod};
    c.col[i] = 1;
    return c;
}

}  // namespace

CenterContext::CenterContext(const Triangulation& t, int n)
    : n_(n), ext_(attach_triangles(t)), mats_(p_matrices(ext_, n)), t1_(mats_.t1()) {}

std::vector<Congruence> CenterContext::conditions(XVariant v, const RootParams& rp) const {
    const std::size_t dim = mats_.n_inner + mats_.n_w;
    const std::size_t ni = mats_.n_inner;
    const auto& vs = mats_.vs;
    const auto& rs = vs.rs;
    std::vector<Congruence> out;
    if (v == XVariant::XOdd) {
        for (std::size_t i = 0; i < dim; ++i) out.push_back(unit_cond(dim, i, rp.m_p));
        return out;
    }
    if (!rp.m_p_even()) throw std::invalid_argument(std::string("variant ") + variant_name(v) + " needs m' even");
    const long ms = rp.ms(), mp = rp.m_p;
    auto k2_zero = [&](long mod, int parity) {  // parity: -1 all, 0 even components, 1 odd components
        for (std::size_t c = 0; c < rs.size(); ++c) {
            if (parity >= 0 && rs[c] % 2 != parity) continue;
            for (int j = 0; j < rs[c]; ++j)
                for (int k = 1; k < n_; ++k) out.push_back(unit_cond(dim, vs.w_pos(c, j, k), mod));
        }
    };
    if (v == XVariant::X) {
        for (std::size_t i = 0; i < ni; ++i) out.push_back(unit_cond(dim, i, ms));
        k2_zero(mp, -1);
        return out;
    }
    if (v == XVariant::Omega) throw std::invalid_argument("Omega is not a sublattice of the balanced lattice");
    // (X1) 2 k1 - T1 k2 = 0 mod m'
    for (std::size_t a = 0; a < ni; ++a) {
        Congruence c{IntVec(dim), mp};
        c.col[a] = 2;
        for (std::size_t b = 0; b < mats_.n_w; ++b) c.col[ni + b] -= t1_(a, b);
        out.push_back(std::move(c));
    }
    // (X2) b_ij = (-1)^j b_i0 mod m'
    for (std::size_t c = 0; c < rs.size(); ++c)
        for (int j = 1; j < rs[c]; ++j)
            for (int k = 1; k < n_; ++k) {
                Congruence cc{IntVec(dim), mp};
                cc.col[vs.w_pos(c, j, k)] += 1;
                cc.col[vs.w_pos(c, 0, k)] -= (j % 2 ? -1 : 1);
                out.push_back(std::move(cc));
            }
    // (X3) parity pattern per attached triangle; (X4) equal across triangles
    for (std::size_t c = 0; c < rs.size(); ++c)
        for (int j = 0; j < rs[c]; ++j)
            for (int k = 1; k < n_; ++k) {
                Congruence cc{IntVec(dim), 2};
                cc.col[vs.w_pos(c, j, k)] = 1;
                if (n_ % 2 == 0 && k % 2 == 1) {
                    if (k == 1) continue;
                    cc.col[vs.w_pos(c, j, 1)] -= 1;
                }
                out.push_back(std::move(cc));
            }
    for (std::size_t c = 0; c < rs.size(); ++c)
        for (int j = 0; j < rs[c]; ++j) {
            if (c == 0 && j == 0) continue;
            for (int k = 1; k < n_; ++k) {
                Congruence cc{IntVec(dim), 2};
                cc.col[vs.w_pos(c, j, k)] += 1;
                cc.col[vs.w_pos(0, 0, k)] -= 1;
                out.push_back(std::move(cc));
            }
        }
    switch (v) {
        case XVariant::XStar:
            k2_zero(ms, -1);
            return out;
        case XVariant::XSharp:
            k2_zero(ms, -1);
            if (n_ % 2) k2_zero(mp, 0);
            return out;
        case XVariant::XBarStar:
            k2_zero(ms, 1);
            return out;
        case XVariant::XBar:
            k2_zero(ms, 1);
            k2_zero(2, -1);
            return out;
        case XVariant::XBarSharp:
            if (n_ % 2) {
                k2_zero(ms, -1);
                k2_zero(mp, 0);
            } else {
                k2_zero(ms, 1);
                k2_zero(*rp.m_tilde, 0);
            }
            return out;
        default:
            throw std::invalid_argument(std::string("unsupported variant ") + variant_name(v));
    }
}

Lattice CenterContext::gamma_of(XVariant v, const RootParams& rp) const {
    return preimage_lattice(mats_.k, conditions(v, rp));
}

Lattice CenterContext::x_family(XVariant v, const RootParams& rp) const {
    const std::size_t dim = mats_.n_inner + mats_.n_w;
    if (v == XVariant::Omega) {
        if (!rp.m_p_even()) throw std::invalid_argument("Omega needs m' even");
        IntMatrix g(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) g(i, i) = i < mats_.n_inner ? rp.ms() : rp.m_p;
        return Lattice::from_generators(g);
    }
    return gamma_of(v, rp).image(mats_.k);
}

Lattice CenterContext::lambda_partial() const {
    const auto& vs = mats_.vs;
    const std::size_t dim = mats_.n_inner + mats_.n_w;
    std::vector<IntVec> gens;
    for (std::size_t c = 0; c < vs.rs.size(); ++c) {
        const int r = vs.rs[c];
        if (r % 2) continue;
        for (int j = 1; j < n_; ++j) {
            IntVec v(dim);
            for (int e = 0; e < r; ++e) v[vs.u_pos(c, e, j)] = e % 2 ? -1 : 1;
            gens.push_back(std::move(v));
        }
    }
    return Lattice::from_generators(gens, dim);
}

XVariant CenterContext::branch_variant(const RootParams& rp) const {
    if (!rp.m_p_even()) return XVariant::XOdd;
    if (rp.ms() % 2) return n_ % 2 ? XVariant::X : XVariant::XStar;
    return n_ % 2 ? XVariant::XBar : XVariant::XBarStar;
}

Lattice CenterContext::explicit_center(const RootParams& rp) const {
    const auto g = gamma(rp);
    if (rp.m_p_even() && rp.ms() % 2 == 0) return g;
    return g + lambda_partial();
}

Lattice CenterContext::kernel_center(const RootParams& rp) const { return kernel_mod(mats_.p, rp.m_pp); }

ReducedContext::ReducedContext(const Triangulation& t, int n, bool is_mu)
    : n_(n), is_mu_(is_mu), tri_(t), mats_(reduced_matrices(tri_, n)) {}

Lattice ReducedContext::lambda_partial() const {
    const auto& rv = mats_.rv;
    const std::size_t dim = rv.order.size();
    std::vector<IntVec> gens;
    for (std::size_t c = 0; c < rv.rs.size(); ++c) {
        const int r = rv.rs[c];
        const auto& edges = rv.traversal[c];
        for (int p = 0; p + 1 < n_; ++p) {
            const int q = n_ - 2 - p;
            if (r % 2 && q < p) continue;
            IntVec v(dim);
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (r % 2) {
                    v[edges[j][p]] = 1;
                    v[edges[j][q]] = 1;
                } else {
                    // every second edge carries the reversed block
                    v[edges[j][j % 2 ? q : p]] += 1;
                }
            }
            gens.push_back(std::move(v));
        }
    }
    return Lattice::from_generators(gens, dim);
}

std::vector<Congruence> ReducedContext::conditions(const RootParams& rp) const {
    const std::size_t dim = mats_.rv.order.size();
    std::vector<Congruence> out;
    for (std::size_t i = 0; i < dim; ++i) {
        const long mod = (rp.m_p_even() && i < mats_.rv.n_inner) ? rp.ms() : rp.m_p;
        out.push_back(unit_cond(dim, i, mod));
    }
    return out;
}

Lattice ReducedContext::gamma(const RootParams& rp) const { return preimage_lattice(mats_.k, conditions(rp)); }

Lattice ReducedContext::explicit_center(const RootParams& rp) const { return gamma(rp) + lambda_partial(); }

Lattice ReducedContext::kernel_center(const RootParams& rp) const { return kernel_mod(mats_.p, rp.m_pp); }

bool ReducedContext::hypotheses_hold(const RootParams& rp) const {
    if (!is_mu_) return false;
    return !rp.m_p_even() || n_ % 2 == 1;
}

std::optional<mpq_class> closed_form_rank(const Surface& s, const RootParams& rp, bool reduced) {
    const int n = rp.n;
    const long g = s.genus, b = s.b(), t = s.t(), r = s.r(), nb = s.boundary_edges();
    const long w = (n - 1) * nb;
    if (reduced) {
        const long vbar = static_cast<long>(n * n - 1) * r - static_cast<long>(n * (n - 1) / 2) * nb;
        const long e = vbar - t * (n - 1) - (b - t) * (n / 2);
        const mpq_class base = pow_q(rp.d, r - t) * pow_q(rp.m, e);
        if (!rp.m_p_even()) return base;
        if (n % 2) return base * pow_q(2, (n - 1) * nb - r + t);
        return std::nullopt;
    }
    const long e = static_cast<long>(n * n - 1) * r - t * (n - 1);
    const mpq_class base = pow_q(rp.d, r - t) * pow_q(rp.m, e);
    if (!rp.m_p_even()) return base;
    const long ms = rp.ms();
    if (ms % 2 && n % 2) return base * pow_q(2, w - r + t);
    if (ms % 2) return base * pow_q(2, -2 * g - 2 * ((b - t) / 2));
    if (n % 2 || rp.m % 2 == 0) return base * pow_q(2, w - r + t + (b - t) * (1 - n));
    if (b != t) return std::nullopt;
    if (rp.n_p % 2) return base * pow_q(2, w - r + t);
    return base * pow_q(2, -2 * g);
}

bool z_prediction_applies(const Surface& s, int n, bool reduced) {
    if (reduced) return n % 2 == 1;
    return n % 2 == 1 || s.b() == s.t();
}

std::optional<std::vector<Int>> z_prediction(const Surface& s, int n, bool reduced) {
    if (!z_prediction_applies(s, n, reduced)) return std::nullopt;
    const long g = s.genus, b = s.b(), t = s.t(), r = s.r(), nb = s.boundary_edges();
    const long w = (n - 1) * nb;
    std::vector<Int> z;
    auto wi = [&](long i) { return i <= (r - t) / 2 ? 1L : static_cast<long>(n); };
    if (reduced) {
        const long vbar = static_cast<long>(n * n - 1) * r - static_cast<long>(n * (n - 1) / 2) * nb;
        const long top = (vbar - t * (n - 1) - (b - t) * (n / 2)) / 2;
        for (long i = 1; i <= top; ++i) z.push_back(Int(i <= w / 2 ? wi(i) : 2 * wi(i)));
        return z;
    }
    const long top = (static_cast<long>(n * n - 1) * r - t * (n - 1)) / 2;
    if (n % 2) {
        const long mid = (static_cast<long>(n * n - 1) * r - b * (n - 1)) / 2;
        for (long i = 1; i <= top; ++i) z.push_back(Int(i <= w / 2 ? wi(i) : (i <= mid ? 2 * wi(i) : 4 * wi(i))));
        return z;
    }
    for (long i = 1; i <= top; ++i) {
        long v;
        if (i <= (r - t - 2 * g) / 2) v = 1;
        else if (i <= (r - t) / 2) v = 2;
        else if (i <= (w + 2 * g) / 2) v = n;
        else v = 2L * n;
        z.push_back(Int(v));
    }
    return z;
}

Int nu_image_size(int n, long modulus, bool palindromic) {
    const std::size_t s = n - 1;
    const auto g = structural(n).g;
    IntMatrix gens(0, s);
    if (!palindromic) {
        for (std::size_t i = 0; i < s; ++i) gens.append_row((Int(2) * g).row(i));
    } else {
        for (std::size_t i = 0; i <= (s - 1) / 2; ++i) {
            IntVec a(s);
            a[i] = 1;
            a[s - 1 - i] = 1;
            gens.append_row(vec_mul(a, Int(2) * g));
        }
    }
    const auto l = Lattice::from_generators_mod(gens, modulus);
    return ipow(Int(modulus), s) / *l.index();
}

namespace {

void add_q(std::vector<QuotientCheck>& out, std::string label, std::string branch, const Int& computed,
           const mpq_class& predicted) {
    out.push_back({std::move(label), std::move(branch), computed, predicted});
}

std::string odd_even(long x) { return x % 2 ? "odd" : "even"; }

}  // namespace

std::vector<QuotientCheck> quotient_checks(const CenterContext& ctx, const RootParams& rp) {
    std::vector<QuotientCheck> out;
    if (!rp.m_p_even()) return out;
    const int n = rp.n;
    const auto& s = ctx.surface();
    const long g = s.genus, b = s.b(), t = s.t(), r = s.r();
    const long w = s.w_size(n);
    const long vsize = static_cast<long>(n * n - 1) * r;
    const long ms = rp.ms(), m = rp.m;

    add_q(out, "|im nu|", "m* " + odd_even(ms) + ", m " + odd_even(m), nu_image_size(n, rp.m_p, false),
          mpq_class(ms) * pow_q(m, n - 2));
    const bool pal_extra = n % 2 == 0 && rp.n_p % 2;
    add_q(out, "|im nu palindromic|", pal_extra ? "n even, n' odd" : "otherwise", nu_image_size(n, rp.m_p, true),
          pal_extra ? 2 * pow_q(m, n / 2) : pow_q(m, n / 2));
    if (ms % 2 == 0)
        add_q(out, "|im nu'|", "m " + odd_even(m), nu_image_size(n, ms, false),
              mpq_class(ms) * pow_q(m, n - 2) / (m % 2 ? pow_q(2, 1) : pow_q(2, n - 1)));

    const auto lp = ctx.lambda_partial();
    const auto gx = ctx.gamma_of(XVariant::X, rp);
    add_q(out, "|Lambda/X|", "n' " + odd_even(rp.n_p), *gx.index(),
          (rp.n_p % 2 ? pow_q(2, w - r) : pow_q(2, -2 * g - b + 1)) * pow_q(m, vsize) * pow_q(rp.d, r));
    add_q(out, "|(X + phi Lambda_d)/X|", t ? "t > 0" : "t = 0", quotient_order(gx + lp, gx),
          mpq_class(pow_q(ms, t) * pow_q(m, t * (n - 2))));

    if (ms % 2 == 1 && n % 2 == 0) {
        const auto gs = ctx.gamma_of(XVariant::XStar, rp);
        const auto gbs = ctx.gamma_of(XVariant::XBarStar, rp);
        const auto gb = ctx.gamma_of(XVariant::XBar, rp);
        // parity of the number of boundary arcs
        const long nb = s.boundary_edges();
        const mpq_class want = nb % 2 ? 1 : 2;
        add_q(out, "|X*/X|", "#boundary arcs " + odd_even(nb), quotient_order(gs, gx), want);
        add_q(out, "|Xbar*/Xbar|", "m* odd, #boundary arcs " + odd_even(nb), quotient_order(gbs, gb), want);
    }
    if (ms % 2 == 0) {
        const auto gsh = ctx.gamma_of(XVariant::XSharp, rp);
        if (n % 2 == 1 || m % 2 == 0 || b == t) {
            mpq_class want;
            std::string br;
            if (n % 2) {
                want = pow_q(2, (b - t) * (n - 1));
                br = "n odd";
            } else if (m % 2 == 0) {
                want = pow_q(2, (n - 1) * b);
                br = "n even, m even";
            } else {
                want = pow_q(2, t);
                br = "n even, m odd";
            }
            add_q(out, "|X#/X|", br, quotient_order(gsh, gx), want);
        }
        if (n % 2) {
            add_q(out, "|(X# + phi Lambda_d)/X#|", t ? "t > 0" : "t = 0", quotient_order(gsh + lp, gsh),
                  pow_q(ms, t) * pow_q(m, t * (n - 2)));
        } else {
            const auto gbsh = ctx.gamma_of(XVariant::XBarSharp, rp);
            add_q(out, "|Xbar#/X#|", "m " + odd_even(m), quotient_order(gbsh, gsh),
                  m % 2 ? mpq_class(1) : pow_q(2, (rp.k - 1) * (n - 1) * t + t));
            add_q(out, "|(Xbar# + phi Lambda_d)/Xbar#|", t ? "t > 0" : "t = 0", quotient_order(gbsh + lp, gbsh),
                  pow_q(2, -t) * pow_q(*rp.m_tilde, t) * pow_q(rp.m_bar, t * (n - 2)));
            const auto gbs = ctx.gamma_of(XVariant::XBarStar, rp);
            const auto gb = ctx.gamma_of(XVariant::XBar, rp);
            const bool two = b == t && rp.n_p % 2 == 0;
            add_q(out, "|Xbar*/Xbar|", two ? "m* even, b = t, n' even" : "m* even, otherwise",
                  quotient_order(gbs, gb), two ? mpq_class(2) : mpq_class(1));
        }
    }
    return out;
}

std::vector<QuotientCheck> reduced_quotient_checks(const ReducedContext& ctx, const RootParams& rp) {
    std::vector<QuotientCheck> out;
    if (!rp.m_p_even()) return out;
    const int n = rp.n;
    const auto& s = ctx.surface();
    const long g = s.genus, b = s.b(), t = s.t(), r = s.r(), nb = s.boundary_edges();
    const long vbar = static_cast<long>(ctx.mats().rv.order.size());
    const long ms = rp.ms(), m = rp.m;
    const auto gy = ctx.gamma(rp);
    add_q(out, "|Lambdabar/Y|", "n' " + odd_even(rp.n_p), *gy.index(),
          (rp.n_p % 2 ? pow_q(2, (n - 1) * nb - r) : pow_q(2, -2 * g - b + 1)) * pow_q(m, vbar) * pow_q(rp.d, r));
    const bool extra = n % 2 == 0 && rp.n_p % 2;
    add_q(out, "|(Y + phi Lambdabar_d)/Y|", extra ? "n even, n' odd" : "otherwise",
          quotient_order(gy + ctx.lambda_partial(), gy),
          (extra ? pow_q(2, b - t) : mpq_class(1)) * pow_q(ms, t) * pow_q(m, (n - 2) * t) *
              pow_q(m, (b - t) * (n / 2)));
    return out;
}

Int skew_rank(const IntVec& h, long m_pp) {
    Int out = 1;
    const Int mm(m_pp);
    for (const auto& x : h) {
        const Int q = mm / gcd(mm, x);
        out *= q * q;
    }
    return out;
}

namespace {

void fill_ranks(CenterReport& rep, const IntMatrix& p, const Lattice& kern, const Surface& s, bool reduced) {
    rep.rank_kernel = *kern.index();
    const auto sk = skew_normal_form(p);
    rep.rank_skew = skew_rank(sk.h, rep.m_pp);
    for (const auto& h : sk.h) rep.z_sequence.push_back(h / rep.n);
    rep.rank_closed = closed_form_rank(s, rep.params, reduced);
    rep.z_predicted = z_prediction(s, rep.n, reduced);
    rep.z_asserted = rep.z_predicted.has_value();
    rep.checks.add("rank_kernel = rank_skew", rep.rank_kernel == rep.rank_skew);
    if (rep.rank_closed)
        rep.checks.add("rank_kernel = rank_closed", mpq_class(rep.rank_kernel) == *rep.rank_closed);
    if (rep.z_predicted) rep.checks.add("z sequence = prediction", rep.z_sequence == *rep.z_predicted);
    bool chain = true;
    for (std::size_t i = 1; i < rep.z_sequence.size(); ++i)
        if (!mpz_divisible_p(rep.z_sequence[i].get_mpz_t(), rep.z_sequence[i - 1].get_mpz_t())) chain = false;
    rep.checks.add("z_i | z_{i+1}", chain);
    const Int root = sqrt(rep.rank_kernel);
    rep.checks.add("rank is a perfect square", root * root == rep.rank_kernel);
}

}  // namespace

CenterReport center_report(const CenterContext& ctx, const RootParams& rp, const std::string& name) {
    CenterReport rep;
    rep.surface = name;
    rep.n = ctx.n();
    rep.m_pp = rp.m_pp;
    rep.params = rp;
    const auto kern = ctx.kernel_center(rp);
    fill_ranks(rep, ctx.mats().p, kern, ctx.surface(), false);
    const auto gam = ctx.gamma(rp);
    const auto lp = ctx.lambda_partial();
    rep.gamma_index = *gam.index();
    rep.gamma_boundary_index = *(gam + lp).index();
    rep.explicit_asserted = true;
    rep.lattice_equal = ctx.explicit_center(rp) == kern;
    rep.checks.add("explicit center = kernel_mod(P, m'')", rep.lattice_equal);
    rep.checks.add("m'' Z^{V'} inside Gamma", gam.contains(Lattice::scaled(gam.dim(), rp.m_pp)));
    if (rp.m_p_even()) {
        const auto gx = ctx.gamma_of(XVariant::X, rp);
        const auto gb = ctx.gamma_of(XVariant::XBar, rp);
        const auto gbs = ctx.gamma_of(XVariant::XBarStar, rp);
        const auto gsh = ctx.gamma_of(XVariant::XSharp, rp);
        const auto gbsh = ctx.gamma_of(XVariant::XBarSharp, rp);
        rep.checks.add("X in Xbar in Xbar*", gb.contains(gx) && gbs.contains(gb));
        rep.checks.add("X in X# in Xbar#", gsh.contains(gx) && gbsh.contains(gsh));
        if (rp.ms() % 2 == 0) rep.checks.add("Xbar = Xbar# + Lambda_d K", gb == gbsh + lp);
    }
    rep.quotients = quotient_checks(ctx, rp);
    for (const auto& q : rep.quotients) rep.checks.add(q.label, q.match(), q.computed.get_str() + " vs " + q.predicted.get_str());
    return rep;
}

CenterReport reduced_center_report(const ReducedContext& ctx, const RootParams& rp, const std::string& name) {
    CenterReport rep;
    rep.surface = name;
    rep.n = ctx.n();
    rep.m_pp = rp.m_pp;
    rep.reduced = true;
    rep.params = rp;
    const auto kern = ctx.kernel_center(rp);
    fill_ranks(rep, ctx.mats().p, kern, ctx.surface(), true);
    const auto gam = ctx.gamma(rp);
    rep.gamma_index = *gam.index();
    rep.gamma_boundary_index = *(gam + ctx.lambda_partial()).index();
    rep.explicit_asserted = ctx.hypotheses_hold(rp);
    rep.lattice_equal = ctx.explicit_center(rp) == kern;
    if (rep.explicit_asserted) rep.checks.add("explicit center = kernel_mod(Pbar, m'')", rep.lattice_equal);
    else rep.checks.add_unasserted("explicit center = kernel_mod(Pbar, m'') (hypotheses not met)", rep.lattice_equal);
    if (ctx.is_mu()) {
        rep.quotients = reduced_quotient_checks(ctx, rp);
        for (const auto& q : rep.quotients)
            rep.checks.add(q.label, q.match(), q.computed.get_str() + " vs " + q.predicted.get_str());
    }
    return rep;
}

}  // namespace skein
