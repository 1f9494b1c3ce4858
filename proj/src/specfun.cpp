#include "xlap/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>

#include "xlap/series.hpp"

namespace xlap {

Context& context() {
    static Context ctx;
    return ctx;
}

void apply_env_overrides() {
    if (const char* s = std::getenv("XLAP_SIEVE_BOUND")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || v < 1) throw DomainError("XLAP_SIEVE_BOUND must be a positive number");
        context().sieve_bound = static_cast<std::int64_t>(v);
    }
    if (const char* s = std::getenv("XLAP_PRECISION")) {
        std::string v(s);
        if (v == "standard") {
            context().precision = Precision::standard;
        } else if (v == "extended") {
            context().precision = Precision::extended;
        } else {
            throw DomainError("XLAP_PRECISION must be standard or extended");
        }
    }
}

namespace specfun {

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Stirling series for |z| >= 10, Re z >= 1/2; Lanczos loses a few digits far up the imaginary direction.
cplx stirling_log(cplx z) {
    using L = std::complex<long double>;
    static const long double c[] = {1.0L / 12,         -1.0L / 360,       1.0L / 1260,   -1.0L / 1680,
                                    1.0L / 1188,       -691.0L / 360360,  1.0L / 156,    -3617.0L / 122400,
                                    43867.0L / 244188, -174611.0L / 125400};
    L w(z.real(), z.imag());
    L wi = 1.0L / w, wi2 = wi * wi, acc = 0.0L;
    for (int j = 9; j >= 0; --j) acc = acc * wi2 + c[j];
    L r = (w - 0.5L) * std::log(w) - w + 0.91893853320467274178032973640562L + acc * wi;
    return cplx(double(r.real()), double(r.imag()));
}

cplx lanczos_log(cplx z) {
    if (std::abs(z) >= 10.0) return stirling_log(z);
    // valid for Re z >= 1/2; long double keeps the phase accurate at large |Im z|
    using L = std::complex<long double>;
    L w(z.real() - 1.0L, z.imag());
    L x = (long double)lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += (long double)lanczos_c[i] / (w + (long double)i);
    L t = w + (long double)lanczos_g + 0.5L;
    L r = 0.91893853320467274178032973640562L + (w + 0.5L) * std::log(t) - t + std::log(x);
    return cplx(double(r.real()), double(r.imag()));
}

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

cplx sinpi(cplx z) {
    double n = std::round(z.real());
    cplx r(z.real() - n, z.imag());
    cplx v = std::sin(pi * r);
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -v : v;
}

cplx cospi(cplx z) { return sinpi(z + 0.5); }

cplx cpow(cplx z, cplx a) {
    if (z == cplx(0.0)) {
        if (a == cplx(0.0)) return 1.0;
        if (a.real() > 0.0) return 0.0;
        throw PoleError("cpow: 0 raised to exponent with nonpositive real part");
    }
    if (a.imag() == 0.0 && z.imag() == 0.0 && z.real() > 0.0) return std::pow(z.real(), a.real());
    return std::exp(a * std::log(z));
}

cplx lgamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("lgamma: pole at nonpositive integer");
    if (z.real() < 0.5) return std::log(pi) - std::log(sinpi(z)) - lanczos_log(1.0 - z);
    return lanczos_log(z);
}

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
    if (z.real() < 0.5) return pi / (sinpi(z) * gamma(1.0 - z));
    if (z.imag() == 0.0 && z.real() <= 171.0) return std::tgamma(z.real());
    return std::exp(lanczos_log(z));
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sinpi(z) * gamma(1.0 - z) / pi;
    if (z.imag() == 0.0 && z.real() <= 171.0) return 1.0 / std::tgamma(z.real());
    return std::exp(-lanczos_log(z));
}

const std::vector<double>& bernoulli_scaled() {
    static const std::vector<double> table = [] {
        std::vector<double> t(31, 0.0);
        for (int j = 1; j <= 30; ++j) {
            long double z2j;
            if (j == 1) {
                z2j = 1.6449340668482264364724151666460252L;
            } else if (j == 2) {
                z2j = 1.0823232337111381915160036965411679L;
            } else {
                z2j = 0.0L;
                for (int n = 2000; n >= 1; --n) z2j += std::pow((long double)n, -2.0L * j);
            }
            long double v = 2.0L * z2j / std::pow(2.0L * (long double)pi, 2.0L * j);
            t[j] = double((j % 2 == 1) ? v : -v);
        }
        return t;
    }();
    return table;
}

namespace {

// Σ_{n=2}^{N-1} n^{-s} plus Euler-Maclaurin remainder from N.
cplx zeta_tail(cplx s) {
    const auto& b = bernoulli_scaled();
    double as = std::abs(s);
    int N = 12 + int(std::ceil(as / (2.0 * pi)) * 2);
    cplx sum = 0.0;
    for (int n = N - 1; n >= 2; --n) sum += std::exp(-s * std::log(double(n)));
    double lN = std::log(double(N));
    cplx NmS = std::exp(-s * lN);
    cplx rem = NmS * double(N) / (s - 1.0) + 0.5 * NmS;
    cplx rise = s;  // s(s+1)...(s+2j-2)
    cplx pw = NmS / double(N);
    for (int j = 1; j <= 30; ++j) {
        cplx term = b[j] * rise * pw;
        rem += term;
        if (std::abs(term) < 1e-18 * std::abs(sum + rem + 1.0) && j > 2) break;
        rise *= (s + double(2 * j - 1)) * (s + double(2 * j));
        pw /= double(N) * double(N);
    }
    return sum + rem;
}

}  // namespace

cplx zeta_minus_one(cplx s) {
    if (s == cplx(1.0)) throw PoleError("zeta: pole at s = 1");
    if (s.real() >= 40.0) {
        cplx sum = 0.0;
        for (int n = 2; n < 200; ++n) {
            cplx t = std::exp(-s * std::log(double(n)));
            sum += t;
            if (std::abs(t) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    if (s.real() < 0.0) return zeta(s) - 1.0;
    return zeta_tail(s);
}

cplx hurwitz_tail(cplx s, std::int64_t N) {
    if (N < 1) throw DomainError("hurwitz_tail: N must be positive");
    if (s.real() <= 1.0) throw DivergenceError("hurwitz_tail: Re s <= 1");
    const auto& b = bernoulli_scaled();
    std::int64_t M = std::max<std::int64_t>(N, 12 + std::int64_t(std::ceil(std::abs(s) / (2.0 * pi)) * 2));
    cplx sum = 0.0;
    for (std::int64_t n = M - 1; n >= N; --n) sum += std::exp(-s * std::log(double(n)));
    double lM = std::log(double(M));
    cplx MmS = std::exp(-s * lM);
    cplx rem = MmS * double(M) / (s - 1.0) + 0.5 * MmS;
    cplx rise = s;
    cplx pw = MmS / double(M);
    for (int j = 1; j <= 30; ++j) {
        cplx term = b[j] * rise * pw;
        rem += term;
        if (std::abs(term) < 1e-18 * std::abs(sum + rem) && j > 2) break;
        rise *= (s + double(2 * j - 1)) * (s + double(2 * j));
        pw /= double(M) * double(M);
    }
    return sum + rem;
}

cplx zeta(cplx s) {
    if (s == cplx(1.0)) throw PoleError("zeta: pole at s = 1");
    if (s.real() < 0.0) {
        // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
        if (s.imag() == 0.0 && s.real() == std::floor(s.real()) && std::fmod(-s.real(), 2.0) == 0.0)
            return 0.0;
        cplx oms = 1.0 - s;
        cplx lg = lanczos_log(oms);
        cplx f = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + lg);
        return f * sinpi(0.5 * s) * zeta(oms);
    }
    return 1.0 + zeta_minus_one(s);
}

namespace {

struct Sieve {
    std::int64_t bound = 0;
    std::vector<std::int8_t> mu;
};

std::mutex sieve_mutex;
std::shared_ptr<const Sieve> sieve_ptr;

std::shared_ptr<const Sieve> build_sieve(std::int64_t bound) {
    auto s = std::make_shared<Sieve>();
    s->bound = bound;
    s->mu.assign(bound + 1, 1);
    s->mu[0] = 0;
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            s->mu[i] = -1;
        }
        for (std::int64_t p : primes) {
            std::int64_t ip = i * p;
            if (ip > bound) break;
            composite[ip] = true;
            if (i % p == 0) {
                s->mu[ip] = 0;
                break;
            }
            s->mu[ip] = std::int8_t(-s->mu[i]);
        }
    }
    return s;
}

std::shared_ptr<const Sieve> current_sieve() {
    std::lock_guard<std::mutex> lock(sieve_mutex);
    std::int64_t want = context().sieve_bound;
    if (!sieve_ptr || sieve_ptr->bound != want) sieve_ptr = build_sieve(want);
    return sieve_ptr;
}

}  // namespace

const std::vector<std::int8_t>& mobius_table() {
    // The returned table stays alive until the bound changes.
    static thread_local std::shared_ptr<const Sieve> hold;
    hold = current_sieve();
    return hold->mu;
}

int mobius(std::int64_t n) {
    if (n < 1) throw DomainError("mobius: n must be positive");
    auto s = current_sieve();
    if (n > s->bound)
        throw RangeError("mobius: n = " + std::to_string(n) + " exceeds sieve bound " + std::to_string(s->bound));
    return s->mu[n];
}

cplx pochhammer(cplx z, int n) {
    cplx p = 1.0;
    for (int k = 0; k < n; ++k) p *= z + double(k);
    return p;
}

namespace {

// Legendre continued fraction, modified Lentz; returns e^z Γ(q, z).
cplx gamma_cf_scaled(cplx q, cplx z) {
    const double tiny = 1e-300;
    cplx b = z + 1.0 - q;
    cplx f = (std::abs(b) < tiny) ? cplx(tiny) : b;
    cplx C = f, D = 0.0;
    for (int n = 1; n < 5000; ++n) {
        cplx an = -double(n) * (double(n) - q);
        b += 2.0;
        D = b + an * D;
        if (std::abs(D) < tiny) D = tiny;
        C = b + an / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return std::exp(q * std::log(z)) / f;
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
}

cplx gamma_cf(cplx q, cplx z) { return std::exp(-z) * gamma_cf_scaled(q, z); }

// E1(z) = Γ(0, z) for small |z|.
cplx e1_series(cplx z) {
    cplx sum = 0.0, t = 1.0;
    for (int k = 1; k < 500; ++k) {
        t *= -z / double(k);
        cplx term = t / double(k);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return -euler_gamma - std::log(z) - sum;
}

}  // namespace

cplx upper_incomplete_gamma(cplx q, cplx z) {
    if (z == cplx(0.0)) {
        if (q.real() > 0.0) return gamma(q);
        throw DomainError("upper_incomplete_gamma: Γ(q, 0) needs Re q > 0");
    }
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("upper_incomplete_gamma: z on the negative real axis");
    double az = std::abs(z);
    if (az > 2.5 && (z.real() > -0.5 * az || az > 25.0)) return gamma_cf(q, z);
    if (q.real() > 0.5) {
        // Γ(q) (1 - z^q γ*(q, z))
        return gamma(q) - cpow(z, q) * gamma(q) * gamma_star(q, z);
    }
    // downward recurrence Γ(q, z) = (Γ(q+1, z) - z^q e^{-z}) / q
    int n = int(std::ceil(0.5 - q.real()));
    cplx q0 = q + double(n);
    cplx g;
    bool integral = is_nonpositive_integer(q);
    if (integral) {
        n = int(-q.real());
        q0 = 0.0;
        g = e1_series(z);
    } else {
        g = upper_incomplete_gamma(q0, z);
    }
    cplx ez = std::exp(-z), lz = std::log(z);
    for (int i = 1; i <= n; ++i) {
        cplx qq = q0 - double(i);
        g = (g - std::exp(qq * lz) * ez) / qq;
    }
    return g;
}

cplx upper_incomplete_gamma_scaled(cplx q, cplx z) {
    double az = std::abs(z);
    if (az > 1.5 && (z.real() > 0.0 || (az > 2.5 && z.real() > -0.5 * az) || az > 25.0))
        return gamma_cf_scaled(q, z);
    return std::exp(z) * upper_incomplete_gamma(q, z);
}

cplx phi(cplx B, cplx z, std::optional<Precision> tier) {
    auto w = [](int) { return cdd(1.0); };
    return series::evaluate(z, B, 1, 0, w, tier, "phi").value;
}

cplx gamma_star(cplx beta, cplx z, std::optional<Precision> tier) {
    if (is_nonpositive_integer(beta)) {
        int n = int(-beta.real());
        cplx p = 1.0;
        for (int i = 0; i < n; ++i) p *= z;
        return p;
    }
    const cdd bt(beta);
    auto w = [&](int k) { return cdd(1.0) / (bt + cdd(double(k))); };
    return rgamma(beta) * series::evaluate(-z, 1.0, 1, 0, w, tier, "gamma_star").value;
}

double kummer_residual(cplx a, cplx B, KummerTarget g, cplx z, double h) {
    auto eval = [&](cplx x) -> cplx {
        switch (g) {
            case KummerTarget::phi: return phi(B, x);
            case KummerTarget::U: return upper_incomplete_gamma_scaled(1.0 - a, x);
            case KummerTarget::zero: return 0.0;
        }
        return 0.0;
    };
    // five-point central stencil, O(h^4)
    cplx f2 = eval(z + 2.0 * h), f1 = eval(z + h), f0 = eval(z), fm1 = eval(z - h), fm2 = eval(z - 2.0 * h);
    cplx d1 = (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * h);
    cplx d2 = (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    return std::abs(z * d2 + (B - z) * d1 - a * f0);
}

}  // namespace specfun
}  // namespace xlap
