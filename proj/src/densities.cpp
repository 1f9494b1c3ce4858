#include "xlap/densities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xlap/errors.hpp"
#include "xlap/quadrature.hpp"
#include "xlap/series.hpp"
#include "xlap/specfun.hpp"

namespace xlap::densities {

using specfun::cpow;
using specfun::pi;
namespace sf = specfun;

namespace {

const cplx I1(0.0, 1.0);

double sgn_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Σ_{k>=k0} y^k w(k) / Γ(B + 2k) through the guarded series engine.
template <class W>
cplx even_series(cplx y, cplx B, int k0, W&& w, const char* what) {
    return series::evaluate(y, B, 2, k0, std::forward<W>(w), std::nullopt, what).value;
}

bool is_imag_axis(cplx z) { return z.real() == 0.0 && z.imag() != 0.0; }

// ∫_0^∞ j^{p-1} e^{-zj}/(1+uj) dj along j = e^{iφ}t, plus the residue at -1/u
// when the pole sits between the real axis and the ray. Valid wherever the
// rotated ray integral converges, i.e. Re p > 0 and Re(z e^{iφ}) > 0.
cplx i_rotated(cplx p, cplx z, cplx u) {
    if (z == cplx(0.0)) {
        if (u == cplx(0.0)) throw DomainError("I: divergent at z = 0, u = 0");
        return cpow(u, -p) * pi / sf::sinpi(p);
    }
    double phi = -0.5 * std::arg(z);
    cplx j0;
    bool has_pole = (u != cplx(0.0));
    double th0 = 0.0;
    if (has_pole) {
        j0 = -1.0 / u;
        th0 = std::arg(j0);
        // keep the ray at least 0.15 rad from the pole; stay within the decay window
        double lo = -0.5 * pi - std::arg(z) + 0.05, hi = 0.5 * pi - std::arg(z) - 0.05;
        lo = std::max(lo, -pi + 0.05);
        hi = std::min(hi, pi - 0.05);
        if (std::abs(th0 - phi) < 0.15) {
            double cand = (th0 >= phi) ? th0 - 0.3 : th0 + 0.3;
            if (cand < lo || cand > hi) cand = (th0 >= phi) ? th0 + 0.3 : th0 - 0.3;
            phi = std::clamp(cand, lo, hi);
        }
    }
    cplx e = std::polar(1.0, phi);
    cplx ze = z * e;
    double c = ze.real();
    if (!(c > 0.0)) throw DomainError("I: no decaying ray");
    cplx zn = ze / c, un = u * e / c;
    auto f = [&](double t) -> cplx {
        if (t == 0.0) return 0.0;
        return std::exp((p - 1.0) * std::log(t) - zn * t) / (1.0 + un * t);
    };
    cplx val = std::exp(I1 * phi * p) * cpow(cplx(c), -p) * quad::halfline(f, 0.0, 1e-14).value;
    if (has_pole) {
        bool swept = (phi > 0.0) ? (th0 > 0.0 && th0 < phi) : (th0 < 0.0 && th0 > phi);
        if (th0 == pi) swept = false;
        if (swept) {
            cplx res = std::exp((p - 1.0) * std::log(j0) - z * j0) / u;
            val += (phi > 0.0 ? 1.0 : -1.0) * 2.0 * pi * I1 * res;
        }
    }
    return val;
}

cplx h_series(cplx z, cplx beta) {
    if (z == cplx(0.0)) return 0.0;
    auto w = [](int) { return cdd(1.0); };
    return -2.0 * even_series(-z * z, 1.0 + beta, 1, w, "H series");
}

cplx h_closed(cplx z, cplx beta) {
    if (z == cplx(0.0)) throw DomainError("H closed form: z = 0");
    if (z.real() < 0.0) z = -z;
    if (z.real() == 0.0) throw DomainError("H closed form: needs |arg z| < π/2");
    int n = std::max(0, int(std::floor(beta.real() / 2.0)));
    cplx half = eval_A(z, beta, n) - cpow(z, -beta) * std::cos(z - 0.5 * pi * beta);
    cplx s = sf::sinpi(beta);
    if (s != cplx(0.0)) {
        cplx mz2 = -1.0 / (z * z);
        cplx pw = 1.0;
        for (int i = 0; i <= n; ++i) pw *= mz2;
        half -= pw * (s / pi) * eval_R(z, beta - double(2 * n + 1));
    }
    return 2.0 * half;
}

bool h_series_region(cplx z) {
    double a = std::abs(z);
    return a <= 20.0 || a - std::abs(z.imag()) <= 25.0;
}

}  // namespace

cplx one_minus_exp(cplx w) {
    if (std::abs(w) < 0.05) {
        // w - w^2/2 + w^3/6 - ...
        cplx term = w, sum = w;
        for (int k = 2; k < 30; ++k) {
            term *= -w / double(k);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return 1.0 - std::exp(-w);
}

cplx eval_m(cplx z, double beta) {
    if (!(beta > -pi && beta < pi)) throw DomainError("m: need -π < β < π");
    if (z == cplx(0.0)) return 1.0;
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())) throw PoleError("m: nonzero integer z");
    if (beta == 0.0) return pi * z / sf::sinpi(z);
    return (pi / beta) * std::sin(beta * z) / sf::sinpi(z);
}

double q_fn(double u, double beta) { return beta == 0.0 ? u : std::sin(u * beta) / beta; }

double eval_lk(int k, double y, double beta) {
    double ay = std::fabs(y);
    double den = 1.0 + 2.0 * std::cos(beta) * std::exp(-ay) + std::exp(-2.0 * ay);
    double num = q_fn(k, beta) * std::exp(-(k + 1) * y - ay) + q_fn(k + 1, beta) * std::exp(-k * y - ay);
    return num / den;
}

double eval_Qk(int k, double y) {
    // e^{-(k+1)y}/(1 + e^{-y})
    if (y >= 0.0) return std::exp(-(k + 1) * y) / (1.0 + std::exp(-y));
    return std::exp(-k * y) / (std::exp(y) + 1.0);
}

cplx eval_J(cplx z) {
    if (std::abs(z) < 1e-4) return 1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0;
    return one_minus_exp(z) / z;
}

cplx eval_R(cplx z, cplx beta, RRoute route) {
    if (z.real() == 0.0) throw DomainError("R: Re z = 0");
    if (beta.real() >= 1.0) throw DomainError("R: need Re β < 1");
    if (z.real() < 0.0) z = -z;
    if (route == RRoute::automatic)
        route = (std::abs(z) >= 36.0 && std::abs(std::arg(z)) <= 0.25 * pi) ? RRoute::asymptotic : RRoute::quadrature;
    if (route == RRoute::asymptotic) {
        cplx iz2 = 1.0 / (z * z);
        cplx term = sf::gamma(1.0 - beta);
        cplx sum = term;
        for (int m = 0; m < 200; ++m) {
            cplx next = -term * (1.0 - beta + double(2 * m)) * (2.0 - beta + double(2 * m)) * iz2;
            if (std::abs(next) >= std::abs(term)) break;
            term = next;
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    // rotate by π/4 away from the pole ±iz that lies in the right half-plane
    cplx p1 = (I1 * z).real() >= 0.0 ? I1 * z : -I1 * z;
    double phi = (p1.imag() > 0.0) ? -0.25 * pi : 0.25 * pi;
    cplx e = std::polar(1.0, phi);
    cplx ez = e / z;
    auto f = [&](double t) -> cplx {
        if (t == 0.0) return 0.0;
        cplx q = ez * t;
        cplx g = std::exp(-beta * std::log(t) - e * t);
        if (std::abs(q) <= 1.0) return g / (1.0 + q * q);
        cplx iq = 1.0 / q;
        return g * iq * iq / (1.0 + iq * iq);
    };
    return std::exp(I1 * phi * (1.0 - beta)) * quad::halfline(f, 0.0, 1e-14).value;
}

cplx eval_I(cplx p, cplx z, cplx u) {
    bool u_neg_real = (u.imag() == 0.0 && u.real() < 0.0);
    bool c1 = p.real() > 0.0 && z.real() > 0.0 && !u_neg_real;
    bool c2 = p.real() > 0.0 && p.real() < 1.0 && z.real() >= 0.0 && !u_neg_real && u != cplx(0.0);
    if (!c1 && !c2) throw DomainError("I: outside the admissible region");
    return i_rotated(p, z, u);
}

cplx eval_W(cplx z, cplx beta, WRoute route) {
    double b1 = beta.real();
    bool c1 = b1 < 1.0 && z.real() > 0.0;
    bool c2 = b1 > -1.0 && b1 < 1.0 && z.real() >= 0.0;
    if (!c1 && !c2) throw DomainError("W: outside the admissible region");
    if (z == cplx(0.0)) return (pi / 2.0) / sf::cospi(0.5 * beta);
    if (route == WRoute::automatic) route = (z.real() > 0.0) ? WRoute::R : WRoute::I;
    switch (route) {
        case WRoute::R:
            if (z.real() <= 0.0) throw DomainError("W: R route needs Re z > 0");
            return cpow(z, beta - 1.0) * eval_R(z, beta);
        case WRoute::I:
            return 0.5 * (i_rotated(1.0 - beta, z, I1) + i_rotated(1.0 - beta, z, -I1));
        case WRoute::H: {
            cplx bp = beta - 1.0;
            cplx s = sf::sinpi(bp);
            if (std::abs(s) < 1e-12) throw DomainError("W: H route undefined at integer β");
            return -(pi / s) * (cpow(z, bp) * 0.5 * eval_H(z, bp) + std::cos(z - 0.5 * pi * bp));
        }
        default:
            break;
    }
    throw DomainError("W: unknown route");
}

B0M eval_B0_M(cplx z, cplx beta) {
    double b1 = beta.real();
    if (!(b1 > -2.0 && b1 < 1.0)) throw DomainError("B0/M: need -2 < Re β < 1");
    if (z.real() < 0.0) throw DomainError("B0/M: need Re z >= 0");
    B0M out;
    if (z == cplx(0.0)) {
        if (!(b1 > -1.0)) throw DomainError("B0/M: z = 0 needs -1 < Re β < 1");
        out.B0 = (pi / 2.0) / sf::cospi(0.5 * beta);
        out.M = 0.0;
        out.M_H = 0.0;
        return out;
    }
    double phi = -0.5 * std::arg(z);
    cplx e = std::polar(1.0, phi);
    if (std::abs(z) < 1.0) {
        // (i2 - i3)/z folded into one integral: subtracting the two loses ε/|z|
        auto g1 = [&](double t) -> cplx {
            if (t == 0.0) return 0.0;
            return std::exp(-beta * std::log(t)) * eval_J(z * t) / (1.0 + t * t);
        };
        auto g2 = [&](double t) -> cplx {
            cplx th = 1.0 + e * t;
            cplx ith = 1.0 / th;
            return std::exp((-beta - 2.0) * std::log(th)) * eval_J(z * th) / (1.0 + ith * ith);
        };
        // the ray is cut at |θ| = 60/|z|, where J(zθ) = 1/(zθ) up to e^{-40}; the
        // scale 1/|z| is out of reach of exp-sinh, so t = e^x on [1, T]
        auto g2x = [&](double x) -> cplx {
            double t = std::exp(x);
            return g2(t) * t;
        };
        double xc = std::log(1.0 / std::abs(z)), xe = std::log(60.0 / std::abs(z));
        cplx ray = quad::finite(g2, 0.0, 1.0, 1e-14).value + quad::finite(g2x, 0.0, xc, 1e-14).value +
                   quad::finite(g2x, xc, xe, 1e-14).value;
        cplx T = 1.0 + e * std::exp(xe);
        cplx tail = 0.0;
        for (int k = 0; k < 60; ++k) {
            cplx ex = -2.0 - beta - double(2 * k);
            cplx term = (k % 2 ? -1.0 : 1.0) * -cpow(T, ex) / ex;
            tail += term;
            if (std::abs(term) < 1e-17 * std::abs(tail)) break;
        }
        out.B0 = quad::finite(g1, 0.0, 1.0, 1e-14).value + e * ray + tail / z;
    } else {
        cplx mb = -1.0 - beta;
        auto f1 = [&](double t) -> cplx {
            if (t == 0.0) return 0.0;
            return std::exp(-beta * std::log(t)) * z * eval_J(z * t) / (1.0 + t * t);
        };
        cplx i1 = quad::finite(f1, 0.0, 1.0, 1e-14).value;
        auto f2 = [&](double t) -> cplx { return std::exp(mb * std::log(t)) / (1.0 + t * t); };
        cplx i2 = quad::halfline(f2, 1.0, 1e-14).value;
        // θ = 1 + e^{iφ} t keeps clear of the poles ±i and the cut of θ^{-1-β}
        double c = (z * e).real();
        auto f3 = [&](double s) -> cplx {
            cplx th = 1.0 + e * (s / c);
            return std::exp(mb * std::log(th) - z * (th - 1.0)) / (1.0 + th * th);
        };
        cplx i3 = std::exp(-z) * (e / c) * quad::halfline(f3, 0.0, 1e-14).value;
        out.B0 = (i1 + i2 - i3) / z;
    }
    // cos A - cos(z - A) = 2 sin(z/2) sin(z/2 - A), free of cancellation near 0
    cplx half = 0.5 * z;
    out.M = (2.0 / pi) * sf::sinpi(beta) * out.B0 +
            (4.0 / z) * std::sin(half) * std::sin(half - 0.5 * pi * beta);
    out.M_H = cpow(z, beta - 1.0) * eval_H(z, beta);
    return out;
}

cplx eval_A(cplx z, cplx beta, int n) {
    if (z == cplx(0.0)) throw DomainError("A: z = 0");
    cplx mz2 = -1.0 / (z * z);
    cplx pw = 1.0, sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += sf::rgamma(beta + 1.0 - double(2 * k)) * pw;
        pw *= mz2;
    }
    return sum;
}

cplx eval_H(cplx z, cplx beta, HMode mode) {
    switch (mode) {
        case HMode::series: return h_series(z, beta);
        case HMode::closed: return h_closed(z, beta);
        case HMode::automatic: break;
    }
    if (h_series_region(z)) {
        try {
            return h_series(z, beta);
        } catch (const CancellationError&) {
            // near a zero of H the guard trips at any precision; the closed form does not divide by the sum
            if (z.real() <= 0.0) throw;
        }
    }
    return h_closed(z, beta);
}

cplx eval_H_shift(cplx z, cplx beta, int w, HShiftMode mode) {
    if (w < 0) throw DomainError("H_shift: w must be nonnegative");
    if (mode == HShiftMode::automatic) mode = h_series_region(z) ? HShiftMode::series : HShiftMode::polynomial;
    if (w == 0 && mode != HShiftMode::series) return eval_H(z, beta);
    double sw = sgn_pow(w);
    switch (mode) {
        case HShiftMode::series: {
            if (z == cplx(0.0)) return 0.0;
            auto wt = [](int) { return cdd(1.0); };
            return -2.0 * sw * even_series(-z * z, 1.0 + beta, w + 1, wt, "H_shift series");
        }
        case HShiftMode::polynomial: {
            cplx half = 0.5 * eval_H(z, beta);
            cplx z2 = z * z, pw = 1.0;
            for (int k = 1; k <= w; ++k) {
                pw *= -z2;
                half += pw * sf::rgamma(1.0 + beta + double(2 * k));
            }
            return 2.0 * sw * half;
        }
        case HShiftMode::integral: {
            cplx pw = 1.0;
            for (int k = 0; k < w; ++k) pw *= z * z;
            return pw * eval_G(z, beta, 2 * w, GRoute::integral);
        }
        default:
            break;
    }
    throw DomainError("H_shift: unknown mode");
}

cplx eval_G(cplx z, cplx beta, int m, GRoute route) {
    if (m < 0) throw DomainError("G: m must be nonnegative");
    if (m == 0) return eval_H(z, beta);
    if (route == GRoute::series) {
        if (z == cplx(0.0)) return 0.0;
        auto wt = [](int) { return cdd(1.0); };
        return -2.0 * even_series(-z * z, 1.0 + beta + double(m), 1, wt, "G series");
    }
    if (!(beta.real() > -3.0)) throw DomainError("G: integral route needs Re β > -3");
    double fact = 1.0;
    for (int i = 2; i < m; ++i) fact *= i;
    auto f = [&](double j) -> cplx {
        if (j == 0.0) return 0.0;
        return std::exp(beta * std::log(j)) * std::pow(1.0 - j, m - 1) * eval_H(j * z, beta);
    };
    return quad::finite(f, 0.0, 1.0, 1e-13).value / fact;
}

double eval_E_density(double v, int m) {
    if (!(v > 0.0 && v <= 1.0)) throw DomainError("E: need 0 < v <= 1");
    if (m < 2) throw DomainError("E: need m >= 2");
    double fact = 1.0;
    for (int i = 2; i < m; ++i) fact *= i;
    double v2 = v * v, sum = 0.0;
    for (std::int64_t n = 1; double(n) * v < 1.0; ++n) {
        int mu = sf::mobius(n);
        if (mu == 0) continue;
        double d = 1.0 / (double(n) * double(n)) - v2;
        sum += mu * std::pow(d, m - 1);
    }
    return (2.0 / fact) * v2 * sum;
}

namespace {

cplx t0_series(cplx z, cplx beta, int w) {
    if (z == cplx(0.0)) return 0.0;
    for (int k = w + 1; k < w + 64; ++k)
        if (cplx(2.0 * k + beta - 0.5) == cplx(0.0)) throw PoleError("T0: 2k + β - 1/2 = 0");
    auto wt = [&](int k) { return series::inv(2.0 * k + beta - 0.5); };
    cplx pz = pi * z;
    cplx s = even_series(pz * pz, 1.0 + beta, w + 1, wt, "T0 series");
    return sgn_pow(w + 1) * cpow(cplx(pi), beta - 1.0) * s;
}

// ∫_x^∞ t^{d-1} cos(t - φ) dt through Γ(d, ∓ix); needs Re d < 1.
cplx cos_moment(cplx d, cplx phi, double x) {
    cplx sum = 0.0;
    for (double sg : {-1.0, 1.0}) {
        cplx mu(0.0, sg);
        sum += std::exp(sg * I1 * phi) * cpow(mu, -d) * sf::upper_incomplete_gamma(d, mu * x);
    }
    return 0.5 * sum;
}

// ∫_a^b x^{e-1} dx, b = inf allowed when Re e < 0.
cplx power_moment(cplx e, double a, double b) {
    if (std::abs(e) < 1e-14) {
        if (std::isinf(b)) throw DivergenceError("H moment: logarithmic divergence");
        return std::log(b / a);
    }
    if (std::isinf(b)) {
        if (!(e.real() < 0.0)) throw DivergenceError("H moment: power term diverges at infinity");
        return -cpow(cplx(a), e) / e;
    }
    return (cpow(cplx(b), e) - cpow(cplx(a), e)) / e;
}

// ∫_a^r j^{-α-1} h0(j) dj for πa >= 36.
cplx t0_tail(double r, double a, cplx beta, int w, cplx alpha) {
    return 0.5 * cpow(cplx(pi), beta - 1.0 + alpha) * h_shift_moment(-alpha, beta, w, pi * a, pi * r);
}

}  // namespace

cplx h_shift_moment(cplx c, cplx beta, int w, double a, double b) {
    if (w < 0) throw DomainError("H moment: w must be nonnegative");
    if (!(a >= 36.0)) throw DomainError("H moment: needs a >= 36");
    if (!(b >= a)) throw DomainError("H moment: needs b >= a");
    int n = std::max(0, int(std::floor(beta.real() / 2.0)));
    cplx sum = 0.0;
    for (int k = -n; k <= w; ++k) {
        cplx g = sf::rgamma(1.0 + beta + double(2 * k));
        if (g == cplx(0.0)) continue;
        sum += sgn_pow(std::abs(k)) * g * power_moment(double(2 * k) + c, a, b);
    }
    cplx d = c - beta, ph = 0.5 * pi * beta;
    cplx cm = cos_moment(d, ph, a);
    if (!std::isinf(b)) cm -= cos_moment(d, ph, b);
    sum -= cm;
    cplx s = sf::sinpi(beta);
    if (s != cplx(0.0)) {
        // R(x, b') ~ Σ (-1)^m Γ(1 - b' + 2m) x^{-2m}, cut at the smallest term
        cplx bp = beta - double(2 * n + 1);
        cplx g = sf::gamma(1.0 - bp);
        cplx acc = 0.0;
        double prev = INFINITY;
        for (int m = 0; m < 200; ++m) {
            double mag = std::abs(g) * std::pow(a, -2.0 * m);
            if (mag > prev) break;
            prev = mag;
            cplx t = sgn_pow(m) * g * power_moment(c - double(2 * n + 2 + 2 * m), a, b);
            acc += t;
            if (std::abs(t) < 1e-18 * std::abs(acc)) break;
            g *= (1.0 - bp + 2.0 * m) * (2.0 - bp + 2.0 * m);
        }
        sum -= sgn_pow(n + 1) * (s / pi) * acc;
    }
    return 2.0 * sgn_pow(w) * sum;
}

namespace {

cplx t0_transform(cplx z, cplx beta, int w) {
    if (!is_imag_axis(z)) throw DomainError("T0 transform: needs z = ir, r != 0");
    double r = std::fabs(z.imag());
    cplx alpha = 0.5 - beta;
    if (!(2.0 * (w + 1) > alpha.real())) throw DomainError("T0 transform: divergent at 0");
    const double a = 36.0 / pi;
    double b = std::min(r, a);
    cplx pre = cpow(cplx(pi), beta - 1.0);
    auto f = [&](double j) -> cplx {
        cplx h = eval_H_shift(pi * j, beta, w);
        if (h == cplx(0.0)) return 0.0;
        return 0.5 * pre * std::exp((-alpha - 1.0) * std::log(j) + std::log(h));
    };
    cplx inner = quad::finite(f, 0.0, b, 1e-13).value;
    if (r > a) inner += t0_tail(r, a, beta, w, alpha);
    return cpow(cplx(r), alpha) * inner;
}

}  // namespace

cplx eval_T0(cplx z, cplx beta, int w, T0Mode mode) {
    if (w < 0) throw DomainError("T0: w must be nonnegative");
    switch (mode) {
        case T0Mode::series: return t0_series(z, beta, w);
        case T0Mode::transform: return t0_transform(z, beta, w);
        case T0Mode::automatic: break;
    }
    if (z == cplx(0.0)) return 0.0;
    if (is_imag_axis(z) && pi * std::abs(z) > 25.0) return t0_transform(z, beta, w);
    try {
        return t0_series(z, beta, w);
    } catch (const CancellationError&) {
        if (!is_imag_axis(z)) throw;
    } catch (const ConvergenceError&) {
        if (!is_imag_axis(z)) throw;
    }
    return t0_transform(z, beta, w);
}

namespace {

cplx p4w_series(cplx z, cplx beta, int w) {
    if (z == cplx(0.0)) return 0.0;
    auto wt = [&](int k) {
        cplx d = sf::zeta_minus_one(2.0 * beta + 4.0 * k);
        return series::inv(2.0 * k + beta - 0.5) / (cdd(1.0) + cdd(d));
    };
    cplx s = even_series(-z * z, 1.0 + beta, w + 1, wt, "P4w series");
    return sgn_pow(w + 1) * cpow(cplx(pi), beta - 1.0) * s;
}

// P_{4w}(πx, β) = Σ μ(n) n^{-2β} T0(ix/n², β, 4w); beyond N the leading Taylor
// term of T0 is summed in closed form through 1/ζ.
cplx p4w_mobius(cplx z, cplx beta, int w) {
    if (z.imag() != 0.0) throw DomainError("P4w Möbius route: needs real z");
    double v = std::fabs(z.real());
    if (v == 0.0) return 0.0;
    double x = v / pi;
    const auto& mu = sf::mobius_table();
    std::int64_t bound = std::int64_t(mu.size()) - 1;
    cplx s1 = 2.0 * beta + 4.0 * (w + 1);
    double s2 = 2.0 * beta.real() + 4.0 * (w + 2);
    cplx c1 = std::pow(pi, 2.0 * w + 2.0) * cpow(cplx(pi), beta - 1.0) * sf::rgamma(3.0 + beta + 2.0 * w) /
              (2.0 * w + 1.5 + beta);
    double c2 = std::abs(std::pow(pi, 2.0 * w + 4.0) * cpow(cplx(pi), beta - 1.0) * sf::rgamma(5.0 + beta + 2.0 * w) /
                         (2.0 * w + 3.5 + beta));
    double lead2 = c2 * std::pow(x, 2.0 * w + 4.0);
    cplx sum = 0.0, part = 0.0;
    std::int64_t nmin = std::max<std::int64_t>(10, std::int64_t(std::ceil(std::sqrt(v))));
    std::int64_t n = 1;
    for (;; ++n) {
        if (n > bound) throw ConvergenceError("P4w Möbius route: sieve bound reached");
        int m = mu[n];
        if (m != 0) {
            double ln = std::log(double(n));
            sum += double(m) * std::exp(-2.0 * beta * ln) * eval_T0(cplx(0.0, x / (double(n) * double(n))), beta, w);
            part += double(m) * std::exp(-s1 * ln);
        }
        if (n >= nmin) {
            double bnd = lead2 * std::pow(double(n), 1.0 - s2) / (s2 - 1.0);
            if (bnd <= 1e-17 * std::abs(sum)) break;
        }
    }
    cplx tail = c1 * std::pow(x, 2.0 * w + 2.0) * (1.0 / sf::zeta(s1) - part);
    return sum + tail;
}

}  // namespace

cplx eval_P4w(cplx z, cplx beta, int w, P4wMode mode) {
    if (w < 0) throw DomainError("P4w: w must be nonnegative");
    switch (mode) {
        case P4wMode::series: return p4w_series(z, beta, w);
        case P4wMode::mobius: return p4w_mobius(z, beta, w);
        case P4wMode::automatic: break;
    }
    if (z == cplx(0.0)) return 0.0;
    // the alternating series loses e^{|z|} relative to its result on the real axis
    if (z.imag() == 0.0 && std::fabs(z.real()) > 30.0) return p4w_mobius(z, beta, w);
    try {
        return p4w_series(z, beta, w);
    } catch (const CancellationError&) {
        if (z.imag() != 0.0) throw;
    }
    return p4w_mobius(z, beta, w);
}

cplx eval_P_section2(cplx z) {
    if (z == cplx(0.0)) return 0.0;
    auto wt = [](int k) { return series::inv(2.0 * k - 0.25); };
    cplx pz = pi * z;
    return std::pow(pi, -0.75) * even_series(pz * pz, 1.25, 1, wt, "P series");
}

double envelope_alpha(double u) { return 1.0 + 1.0 / (u - 1.0); }

double envelope_beta(double j, double q, double p) { return 1.0 + 1.0 / (p + q - 1.0) - 1.0 / (p + j - 1.0); }

double envelope_g(double r, const EnvelopeSpec& spec) {
    if (!(r > 0.0)) throw DomainError("g: need r > 0");
    if (!spec.p) return (r <= 1.0) ? std::pow(r, spec.q) : std::pow(r, spec.j);
    double p = *spec.p;
    if (!(p + spec.q > 1.0)) throw DivergenceError("g: need p + q > 1");
    std::int64_t nr = std::int64_t(std::ceil(r));
    double head = 0.0;
    for (std::int64_t n = 1; n < nr; ++n) head += std::pow(double(n), -(p + spec.j));
    double tail = sf::hurwitz_tail(p + spec.q, std::max<std::int64_t>(nr, 1)).real();
    return std::pow(r, spec.j) * head + std::pow(r, spec.q) * tail;
}

cplx alpha_transform(const DensityFn& h, cplx alpha, double J) {
    if (!(J > 0.0)) throw DomainError("α-transform: need J > 0");
    if (!(alpha.real() < h.env.q)) throw DomainError("α-transform: need Re α < q0(h)");
    if (!h.taylor.empty()) {
        cplx sum = 0.0, pw = 1.0;
        for (size_t n = 0; n < h.taylor.size(); ++n) {
            if (h.taylor[n] != cplx(0.0)) {
                cplx d = double(n) - alpha;
                if (d == cplx(0.0)) throw DomainError("α-transform: n = α");
                sum += h.taylor[n] * pw / d;
            }
            pw *= J;
        }
        return sum;
    }
    auto f = [&](double j) -> cplx {
        cplx v = h.eval(j);
        if (v == cplx(0.0)) return 0.0;
        return std::exp((-alpha - 1.0) * std::log(j) + std::log(v));
    };
    cplx s = quad::finite(f, 0.0, std::min(J, 1.0), 1e-13).value;
    if (J > 1.0) s += quad::finite(f, 1.0, J, 1e-13).value;
    return cpow(cplx(J), alpha) * s;
}

cplx mobius_convolve(const DensityFn& T, cplx p, double r, bool signed_sum, double tol) {
    if (!(r > 0.0)) throw DomainError("Möbius convolution: need r > 0");
    double u = p.real() + T.env.q;
    if (!(u > 1.0)) throw DivergenceError("Möbius convolution: need Re p + q0(T) > 1");
    std::int64_t cap = signed_sum ? std::int64_t(sf::mobius_table().size()) - 1 : std::int64_t(10000000);
    const auto* mu = signed_sum ? &sf::mobius_table() : nullptr;
    double scale = T.env.K * std::pow(r, T.env.q) * envelope_alpha(u);
    cplx sum = 0.0;
    for (std::int64_t n = 1;; ++n) {
        if (n > cap) throw ConvergenceError("Möbius convolution: truncation bound not reached");
        int m = signed_sum ? (*mu)[n] : 1;
        if (m != 0) sum += double(m) * std::exp(-p * std::log(double(n))) * T.eval(r / double(n));
        if (double(n) >= r) {
            double bnd = scale * std::pow(double(n + 1), 1.0 - u);
            if (bnd <= tol * std::abs(sum) + 1e-300) break;
        }
    }
    return sum;
}

}  // namespace xlap::densities
