#pragma once

#include "skein/amatrix.hpp"
#include "skein/check.hpp"
#include "skein/zlattice.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace skein {

struct RootParams {
    int n = 0;
    long m_pp = 0;  // order of q^2
    long d_p = 0, m_p = 0, d = 0, m = 0, n_p = 0;
    std::optional<long> m_star, d_star, m_tilde;
    int k = 0;  // m = 2^k * m_bar
    long m_bar = 0;
    long N = 0;
    std::string case_label;

    bool m_p_even() const { return m_p % 2 == 0; }
    long ms() const { return m_star.value(); }
};

RootParams root_params(int n, long m_pp);

enum class XVariant { X, XStar, XBarStar, XBar, XSharp, XBarSharp, XOdd, Omega, Y };
const char* variant_name(XVariant v);

// k * col = 0 mod modulus
struct Congruence {
    IntVec col;
    long modulus;
};

// {c : c*K satisfies every congruence}
Lattice preimage_lattice(const IntMatrix& k, const std::vector<Congruence>& conds);

// Non-reduced center machinery over a fixed (triangulation, n).
class CenterContext {
public:
    CenterContext(const Triangulation& t, int n);

    int n() const { return n_; }
    const ExtendedTriangulation& ext() const { return ext_; }
    const AMatrices& mats() const { return mats_; }
    const Surface& surface() const { return ext_.base.surface(); }

    std::vector<Congruence> conditions(XVariant v, const RootParams& rp) const;
    // Lattice of c in Z^{V'} with cK in the variant (c-coordinates).
    Lattice gamma_of(XVariant v, const RootParams& rp) const;
    // The variant itself as a sublattice of Z^V.
    Lattice x_family(XVariant v, const RootParams& rp) const;
    Lattice lambda_partial() const;
    // Branch-selected X lattice and its preimage.
    XVariant branch_variant(const RootParams& rp) const;
    Lattice gamma(const RootParams& rp) const { return gamma_of(branch_variant(rp), rp); }
    Lattice explicit_center(const RootParams& rp) const;
    Lattice kernel_center(const RootParams& rp) const;

private:
    int n_;
    ExtendedTriangulation ext_;
    AMatrices mats_;
    IntMatrix t1_;
};

// Reduced center machinery on a triangulation (the ear triangulation for asserted checks).
class ReducedContext {
public:
    ReducedContext(const Triangulation& t, int n, bool is_mu);

    int n() const { return n_; }
    bool is_mu() const { return is_mu_; }
    const Triangulation& tri() const { return tri_; }
    const ReducedMatrices& mats() const { return mats_; }
    const Surface& surface() const { return tri_.surface(); }

    Lattice lambda_partial() const;
    std::vector<Congruence> conditions(const RootParams& rp) const;
    Lattice gamma(const RootParams& rp) const;
    Lattice explicit_center(const RootParams& rp) const;
    Lattice kernel_center(const RootParams& rp) const;
    // Explicit description asserted: n odd when m' is even, and the triangulation is mu.
    bool hypotheses_hold(const RootParams& rp) const;

private:
    int n_;
    bool is_mu_;
    Triangulation tri_;
    ReducedMatrices mats_;
};

// Closed-form rank; nullopt when the case is not covered.
std::optional<mpq_class> closed_form_rank(const Surface& s, const RootParams& rp, bool reduced);
std::optional<std::vector<Int>> z_prediction(const Surface& s, int n, bool reduced);
// Whether the skew invariants are asserted to follow z_prediction.
bool z_prediction_applies(const Surface& s, int n, bool reduced);

struct QuotientCheck {
    std::string label;
    std::string branch;  // parity branch of the formula
    Int computed;
    mpq_class predicted;
    bool match() const { return mpq_class(computed) == predicted; }
};

// |im| of p -> 2pG on Z_mod^{n-1}, restricted to palindromic vectors when palindromic is set.
Int nu_image_size(int n, long modulus, bool palindromic);

std::vector<QuotientCheck> quotient_checks(const CenterContext& ctx, const RootParams& rp);
std::vector<QuotientCheck> reduced_quotient_checks(const ReducedContext& ctx, const RootParams& rp);

struct CenterReport {
    std::string surface;
    int n = 0;
    long m_pp = 0;
    bool reduced = false;
    RootParams params;
    Int rank_kernel, rank_skew;
    std::optional<mpq_class> rank_closed;
    std::vector<Int> z_sequence;
    std::optional<std::vector<Int>> z_predicted;
    bool z_asserted = false;
    bool explicit_asserted = false;
    bool lattice_equal = false;
    Int gamma_index;                  // |Z^{V'} / Gamma|
    Int gamma_boundary_index;         // |Z^{V'} / (Gamma + Lambda_partial)|
    std::vector<QuotientCheck> quotients;
    CheckReport checks;
};

CenterReport center_report(const CenterContext& ctx, const RootParams& rp, const std::string& name);
CenterReport reduced_center_report(const ReducedContext& ctx, const RootParams& rp, const std::string& name);

// prod (m''/gcd(m'', h_i))^2 over the skew invariants.
Int skew_rank(const IntVec& h, long m_pp);

}  // namespace skein
