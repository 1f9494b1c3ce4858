#pragma once

#include "xlap/config.hpp"

namespace xlap::xicore {

// Open vertical strip x0 < Re s < x1 with sign carrier (-1)^w.
struct StripSpec {
    double x0 = 0.0;
    double x1 = 4.0;
    int w = 0;
    bool closed = false;

    static StripSpec V4w(int w) { return {4.0 * w, 4.0 * (w + 1), w, false}; }
    static StripSpec V0prime() { return {0.5, 4.0, 0, false}; }
    bool contains(cplx s, double margin = 0.0) const;
    double sign() const { return (w % 2 == 0) ? 1.0 : -1.0; }
};

struct BetaParam {
    cplx value;
    double re;
    BetaParam(cplx b) : value(b), re(b.real()) {}  // NOLINT: implicit on purpose for call sites
    BetaParam(double b) : value(b), re(b) {}       // NOLINT
    bool is_real() const { return value.imag() == 0.0; }
    // Re β >= -3/2, or -2k - 3/2 <= Re β <= -2k for some integer k >= 1.
    bool in_D() const;
};

struct XiChain {
    cplx l, a, xi;
};

// l(s) = π^{-s/2} s Γ(s/2), a(s) = l(s)(s-1), ξ(s) = a(s)ζ(s)/2.
XiChain xi_chain(cplx s);
cplx l_fn(cplx s);
cplx xi(cplx s);

struct NFB {
    cplx n, f, b;
};
// n = sin(πs/4)·2ξ(2β+s), f = 1/n, b = n/ζ(2β+s). ZeroDivisionError when n vanishes.
NFB n_f_b(cplx s, BetaParam beta);
cplx n_fn(cplx s, BetaParam beta);
cplx f_fn(cplx s, BetaParam beta);
cplx b_fn(cplx s, BetaParam beta);

struct N0F0 {
    cplx n0, f0;
};
N0F0 n0_f0(cplx s, BetaParam beta);
cplx n0_fn(cplx s, BetaParam beta);
// ½ π^{-1+β} π^{s/2} F(s/2, β), the second route to f₀.
cplx f0_via_F(cplx s, BetaParam beta);

// N(z, β) = (1/π) sin(πz/2) Γ(1+β+z), F = 1/N.
cplx N_fn(cplx z, BetaParam beta);
cplx F_fn(cplx z, BetaParam beta);

struct NF {
    cplx N, F;
};
NF N_F(cplx z, BetaParam beta);

struct FShifted {
    cplx F1;         // by the splitting sum
    cplx F1_direct;  // sin(πu)/cos((π/2)(u+β)) · Γ(u)/(1-u)
    cplx E1, E2;
};
FShifted F_shifted(cplx u, BetaParam beta);

struct CCoeff {
    cplx c;        // (2/π)(-1)^k / ξ(2β+4k)
    cplx c_alt;    // (-1)^k π^{2k} / (π^{1-β} Γ(1+β+2k)(2k+β-1/2) ζ(2β+4k))
    cplx c_tilde;  // only at β = 1/4, else 0
};
CCoeff c_coeff(int k, BetaParam beta);

// n'(s, β) by central differences, h = 1e-5·max(1,|s|), one Richardson step.
cplx n_prime(cplx s, BetaParam beta);

}  // namespace xlap::xicore
