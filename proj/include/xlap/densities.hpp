#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "xlap/config.hpp"

namespace xlap::densities {

// m(z, β) = (π/β) sin(βz)/sin(πz), filled in at z = 0 and β = 0.
cplx eval_m(cplx z, double beta);

// q(u, β) = sin(uβ)/β, q(u, 0) = u.
double q_fn(double u, double beta);
double eval_lk(int k, double y, double beta);
// Q_k(e^{-y}) with Q_k(z) = z^{k+1}/(1+z).
double eval_Qk(int k, double y);

// J(z) = (1 - e^{-z})/z, J(0) = 1.
cplx eval_J(cplx z);

// 1 - e^{-w} without cancellation near w = 0.
cplx one_minus_exp(cplx w);

// R(z, β) = ∫_0^∞ j^{-β} e^{-j} / (1 + (j/z)^2) dj.
enum class RRoute { automatic, quadrature, asymptotic };
cplx eval_R(cplx z, cplx beta, RRoute route = RRoute::automatic);

// I(p, z, u) = ∫_0^∞ j^{p-1} e^{-zj} / (1 + uj) dj, by a rotated ray.
cplx eval_I(cplx p, cplx z, cplx u = 1.0);

// W(z, β) = ∫_0^∞ j^{-β} e^{-zj} / (1 + j^2) dj.
// R: z^{β-1} R(z, β), needs Re z > 0.  I: ½ Σ_σ I(1-β, z, σi).
// H: from H(z, β-1), fails when β is an integer.
enum class WRoute { automatic, R, I, H };
cplx eval_W(cplx z, cplx beta, WRoute route = WRoute::automatic);

struct B0M {
    cplx B0;
    cplx M;    // from B0
    cplx M_H;  // z^{-1+β} H(z, β)
};
B0M eval_B0_M(cplx z, cplx beta);

enum class HMode { automatic, series, closed };
cplx eval_H(cplx z, cplx beta, HMode mode = HMode::automatic);
// A(z, β, n) = Σ_{0<=k<=n} (-1/z^2)^k / Γ(β + 1 - 2k).
cplx eval_A(cplx z, cplx beta, int n);

// H(z, β, 2w). polynomial: Lemma-style lift of hybrid H by its first w Taylor terms.
enum class HShiftMode { automatic, series, polynomial, integral };
cplx eval_H_shift(cplx z, cplx beta, int w, HShiftMode mode = HShiftMode::automatic);

// ∫_a^b x^{c-1} H(x, β, 2w) dx for real a >= 36 (b = inf allowed), from the
// closed form of H and the asymptotic series of R.
cplx h_shift_moment(cplx c, cplx beta, int w, double a, double b);

// G(z, β, m) = (1/(m-1)!) ∫_0^1 j^β (1-j)^{m-1} H(jz, β) dj, G(z, β, 0) = H(z, β).
enum class GRoute { series, integral };
cplx eval_G(cplx z, cplx beta, int m, GRoute route = GRoute::series);

// E(v, m) = (2/(m-1)!) v^2 Σ_{1<=n<1/v} μ(n) (n^{-2} - v^2)^{m-1}.
double eval_E_density(double v, int m);

enum class T0Mode { automatic, series, transform };
cplx eval_T0(cplx z, cplx beta, int w, T0Mode mode = T0Mode::automatic);

enum class P4wMode { automatic, series, mobius };
cplx eval_P4w(cplx z, cplx beta, int w, P4wMode mode = P4wMode::automatic);

// P(z) = π^{-3/4} Σ_{k>=1} (πz)^{2k} / (Γ(5/4 + 2k)(2k - 1/4)).
cplx eval_P_section2(cplx z);

struct EnvelopeSpec {
    double j = 0.0;  // exponent for r > 1
    double q = 0.0;  // exponent for r <= 1
    double K = 1.0;
    std::optional<double> p;
};

struct DensityFn {
    std::function<cplx(double)> eval;
    EnvelopeSpec env;
    bool continuous = true;
    bool positive = false;  // claimed only
    std::vector<cplx> taylor;  // h^{(n)}(0)/n!, optional
};

double envelope_g(double r, const EnvelopeSpec& spec);

// Lemma 2.2 constants.
double envelope_alpha(double u);
double envelope_beta(double j, double q, double p);

cplx alpha_transform(const DensityFn& h, cplx alpha, double J);

// signed: Σ μ(n) n^{-p} T(r/n); unsigned: Σ n^{-p} T(r/n).
// Stops once the envelope bound on the remaining terms is below tol·|sum|.
cplx mobius_convolve(const DensityFn& T, cplx p, double r, bool signed_sum, double tol = 1e-12);

}  // namespace xlap::densities
