#include "xlap/xicore.hpp"

#include <cmath>

#include "xlap/errors.hpp"
#include "xlap/specfun.hpp"

namespace xlap::xicore {

using specfun::pi;

bool StripSpec::contains(cplx s, double margin) const {
    double x = s.real();
    if (closed) return x >= x0 + margin && x <= x1 - margin;
    return x > x0 + margin && x < x1 - margin;
}

bool BetaParam::in_D() const {
    if (re >= -1.5) return true;
    // -2k - 3/2 <= re <= -2k  <=>  k in [-re/2 - 3/4, -re/2]
    double kmin = std::ceil(-re / 2.0 - 0.75);
    return kmin >= 1.0 && kmin <= -re / 2.0;
}

cplx l_fn(cplx s) {
    // π^{-s/2} s Γ(s/2) = 2 π^{-s/2} Γ(1 + s/2), entire except at s = -2, -4, ...
    return 2.0 * std::exp(-0.5 * s * std::log(pi)) * specfun::gamma(1.0 + 0.5 * s);
}

cplx xi(cplx s) {
    if (std::abs(s - 1.0) < 1e-6) {
        // (s-1)ζ(s) = 1 + γ(s-1) + O((s-1)^2)
        return 0.5 * l_fn(s) * (1.0 + specfun::euler_gamma * (s - 1.0));
    }
    if (s.real() < 0.5) return xi(1.0 - s);
    return 0.5 * l_fn(s) * (s - 1.0) * specfun::zeta(s);
}

XiChain xi_chain(cplx s) {
    XiChain c;
    c.l = l_fn(s);
    c.a = c.l * (s - 1.0);
    c.xi = xi(s);
    return c;
}

namespace {

cplx sin_quarter(cplx s) { return specfun::sinpi(0.25 * s); }

// log sin(πw) for |Im w| large, where sin and Γ would over/underflow separately.
cplx log_sinpi(cplx w) {
    if (w.imag() < 0.0) return std::conj(log_sinpi(std::conj(w)));
    cplx iw = cplx(0.0, 1.0) * pi * w;
    return -iw + std::log(cplx(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * iw));
}

cplx checked_inverse(cplx n, const char* what) {
    if (n == cplx(0.0) || !std::isfinite(std::abs(1.0 / n)))
        throw ZeroDivisionError(std::string(what) + ": zero of the denominator");
    return 1.0 / n;
}

}  // namespace

cplx n_fn(cplx s, BetaParam beta) { return sin_quarter(s) * 2.0 * xi(2.0 * beta.value + s); }

cplx b_fn(cplx s, BetaParam beta) {
    cplx t = 2.0 * beta.value + s;
    return sin_quarter(s) * l_fn(t) * (t - 1.0);
}

cplx f_fn(cplx s, BetaParam beta) { return checked_inverse(n_fn(s, beta), "f"); }

NFB n_f_b(cplx s, BetaParam beta) {
    NFB r;
    r.n = n_fn(s, beta);
    r.b = b_fn(s, beta);
    r.f = checked_inverse(r.n, "f");
    return r;
}

cplx n0_fn(cplx s, BetaParam beta) { return sin_quarter(s) * l_fn(2.0 * beta.value + s); }

N0F0 n0_f0(cplx s, BetaParam beta) {
    N0F0 r;
    r.n0 = n0_fn(s, beta);
    r.f0 = checked_inverse(r.n0, "f0");
    return r;
}

cplx f0_via_F(cplx s, BetaParam beta) {
    return 0.5 * std::exp((beta.value - 1.0 + 0.5 * s) * std::log(pi)) * F_fn(0.5 * s, beta);
}

cplx N_fn(cplx z, BetaParam beta) {
    cplx g = 1.0 + beta.value + z;
    cplx sn = specfun::sinpi(0.5 * z);
    if (g.imag() == 0.0 && g.real() <= 0.0 && g.real() == std::floor(g.real())) {
        if (sn == cplx(0.0)) {
            // removable: limit of sin(πz/2)Γ(g) as both factors meet
            int n = int(-g.real());
            int m = int(std::lround(z.real() / 2.0));
            double fact = 1.0;
            for (int i = 2; i <= n; ++i) fact *= i;
            double sg = ((n + m) % 2 == 0) ? 1.0 : -1.0;
            return (1.0 / pi) * (pi / 2.0) * sg / fact;
        }
        throw PoleError("N: pole of Γ(1+β+z)");
    }
    if (std::abs(z.imag()) > 100.0) return std::exp(log_sinpi(0.5 * z) + specfun::lgamma(g)) / pi;
    return sn * specfun::gamma(g) / pi;
}

cplx F_fn(cplx z, BetaParam beta) {
    cplx g = 1.0 + beta.value + z;
    cplx sn = specfun::sinpi(0.5 * z);
    cplx rg = specfun::rgamma(g);
    if (sn == cplx(0.0)) {
        if (rg == cplx(0.0)) return 1.0 / N_fn(z, beta);
        throw PoleError("F: pole at an even integer");
    }
    if (std::abs(z.imag()) > 100.0) return pi * std::exp(-log_sinpi(0.5 * z) - specfun::lgamma(g));
    return pi * rg / sn;
}

NF N_F(cplx z, BetaParam beta) {
    NF r;
    r.F = F_fn(z, beta);
    r.N = N_fn(z, beta);
    return r;
}

FShifted F_shifted(cplx u, BetaParam beta) {
    if (u == cplx(1.0)) throw PoleError("F_shifted: u = 1");
    cplx c = specfun::cospi(0.5 * (u + beta.value));
    if (c == cplx(0.0)) throw PoleError("F_shifted: cos((π/2)(u+β)) = 0");
    cplx g = specfun::gamma(u);
    FShifted r;
    r.E1 = (1.0 / (1.0 - u)) * ((pi / 2.0) / c) * g;
    r.E2 = 2.0 * specfun::sinpi(0.5 * (u - beta.value)) * g / (1.0 - u);
    r.F1 = (2.0 / pi) * specfun::sinpi(beta.value) * r.E1 + r.E2;
    r.F1_direct = specfun::sinpi(u) / c * g / (1.0 - u);
    return r;
}

CCoeff c_coeff(int k, BetaParam beta) {
    if (k < 0) throw DomainError("c_coeff: k must be nonnegative");
    if (!beta.in_D()) throw DomainError("c_coeff: β outside the admissible set D");
    cplx b = beta.value;
    double sg = (k % 2 == 0) ? 1.0 : -1.0;
    cplx s = 2.0 * b + 4.0 * k;
    CCoeff r;
    r.c = (2.0 / pi) * sg / xi(s);
    r.c_alt = sg * std::pow(pi, 2.0 * k) /
              (std::exp((1.0 - b) * std::log(pi)) * specfun::gamma(1.0 + b + 2.0 * k) * (2.0 * k + b - 0.5) *
               specfun::zeta(s));
    if (b == cplx(0.25)) {
        r.c_tilde = 1.0 / (std::pow(pi, 0.75) * specfun::gamma(1.25 + 2.0 * k) * (2.0 * k - 0.25) *
                           specfun::zeta(0.5 + 4.0 * k));
    }
    return r;
}

cplx n_prime(cplx s, BetaParam beta) {
    double h = 1e-5 * std::max(1.0, std::abs(s));
    auto d = [&](double hh) { return (n_fn(s + hh, beta) - n_fn(s - hh, beta)) / (2.0 * hh); };
    cplx d1 = d(h), d2 = d(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace xlap::xicore
