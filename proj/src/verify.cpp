#include "xlap/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "xlap/errors.hpp"
#include "xlap/quadrature.hpp"
#include "xlap/specfun.hpp"
#include "xlap/xicore.hpp"

namespace xlap::verify {

namespace sf = xlap::specfun;
namespace dn = xlap::densities;
namespace xc = xlap::xicore;
using sf::pi;

namespace {

constexpr cplx I1{0.0, 1.0};

double sgn_w(int w) { return (w % 2 == 0) ? 1.0 : -1.0; }

// e^{s y} g without forming either factor on its own.
cplx weighted(cplx s, double y, cplx g) {
    if (g == cplx(0.0)) return 0.0;
    return std::exp(s * y + std::log(g));
}

double envelope_lo(double sigma, const dn::EnvelopeSpec& e, double abs_tol) {
    double rate = sigma - e.j;
    return std::min(0.0, std::log(abs_tol * rate / (10.0 * std::max(e.K, 1e-300))) / rate);
}

double envelope_hi(double sigma, const dn::EnvelopeSpec& e, double abs_tol) {
    double rate = e.q - sigma;
    return std::max(0.0, -std::log(abs_tol * rate / (10.0 * std::max(e.K, 1e-300))) / rate);
}

}  // namespace

// r = 1/v = e^{-y}: ∫ v^{s-1} T(1/v) dv = ∫ r^{-s-1} T(r) dr = ∫ e^{sy} T(e^{-y}) dy.
Density laplace_form(const Density& T) {
    Density g;
    g.env = T.env;
    auto ev = T.eval;
    g.eval = [ev](double y) { return ev(std::exp(-y)); };
    if (T.upper) g.lower = Tail{-std::log(T.upper->cut), T.upper->value};
    if (T.lower) g.upper = Tail{-std::log(T.lower->cut), T.lower->value};
    for (double x : T.breaks) g.breaks.push_back(-std::log(x));
    return g;
}


QuadratureResult integrate_laplace(const Density& g, cplx s, const QuadratureSpec& spec) {
    double sigma = s.real();
    if (!(g.env.j < sigma && sigma < g.env.q)) {
        std::ostringstream os;
        os << "Re s = " << sigma << " outside the strip (" << g.env.j << ", " << g.env.q << ")";
        throw StripError(os.str());
    }
    double lo, hi;
    if (g.lower) lo = g.lower->cut;
    else if (spec.window) lo = spec.window->first;
    else lo = envelope_lo(sigma, g.env, spec.abs_tol);
    if (g.upper) hi = g.upper->cut;
    else if (spec.window) hi = spec.window->second;
    else hi = envelope_hi(sigma, g.env, spec.abs_tol);

    QuadratureResult out;
    out.window = {lo, hi};
    if (hi > lo) {
        std::vector<double> cuts{lo, hi};
        if (lo < 0.0 && hi > 0.0) cuts.push_back(0.0);
        for (double b : g.breaks)
            if (b > lo && b < hi) cuts.push_back(b);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        auto f = [&](double y) { return weighted(s, y, g.eval(y)); };
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            auto r = quad::gk(f, cuts[i], cuts[i + 1], spec.rel_tol);
            out.value += r.value;
            out.err_estimate += r.err;
            out.evals += r.evals;
        }
    }
    if (g.lower) out.value += g.lower->value(s);
    if (g.upper) out.value += g.upper->value(s);
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
        throw ConvergenceError("integrate_laplace: non-finite value");
    if (out.evals > spec.max_evals) throw ConvergenceError("integrate_laplace: evaluation budget exceeded");
    if (out.err_estimate > std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value))) {
        std::ostringstream os;
        os << "integrate_laplace: error estimate " << out.err_estimate << " above tolerance";
        throw ConvergenceError(os.str());
    }
    return out;
}

QuadratureResult integrate_mellin(const Density& T, cplx s, const QuadratureSpec& spec) {
    QuadratureSpec sp = spec;
    if (spec.window) sp.window = std::make_pair(-std::log(spec.window->second), -std::log(spec.window->first));
    return integrate_laplace(laplace_form(T), s, sp);
}

namespace {

// ---------- sampling and bookkeeping ----------

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    double uni(double a, double b) { return a + (b - a) * double(g() >> 11) * 0x1.0p-53; }
    cplx box(double x0, double x1, double y0, double y1) { return {uni(x0, x1), uni(y0, y1)}; }
    int pick(int n) { return int(g() % std::uint64_t(n)); }
    double loguni(double a, double b) { return std::exp(uni(std::log(a), std::log(b))); }
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

struct Run {
    IdentityCheck& out;
    const IdentityParams& P;
    Rng rng;
    Run(IdentityCheck& o, const IdentityParams& p) : out(o), P(p), rng(p.seed ^ fnv1a(o.entry.id)) {}
    int n(int def = 25) const { return P.n_samples.value_or(def); }
    // Runs one sample; an evaluation error marks the sample as failed.
    template <class F>
    void sample(const std::string& label, cplx point, cplx beta, int w, F&& f) {
        Sample s{label, point, beta, w, 0.0};
        try {
            s.residual = f();
            if (!std::isfinite(s.residual)) s.residual = std::numeric_limits<double>::infinity();
        } catch (const std::exception& e) {
            s.residual = std::numeric_limits<double>::infinity();
            if (out.error.empty()) out.error = label + ": " + e.what();
        }
        out.samples.push_back(s);
    }
    // Explicit points when given, otherwise `count` draws from `draw`.
    template <class D>
    std::vector<cplx> points(int count, D&& draw) {
        if (!P.points.empty()) return P.points;
        std::vector<cplx> v;
        for (int i = 0; i < count; ++i) v.push_back(draw());
        return v;
    }
};

// Σ_{k>=k0} c_k ρ^{e_k - s}/(e_k - s): the Mellin piece over (0, ρ] of a power series.
Tail power_tail(double rho, std::function<std::pair<double, cplx>(int)> term, int k0) {
    return Tail{rho, [rho, term, k0](cplx s) {
                    cplx sum = 0.0;
                    int small = 0;
                    for (int k = k0; k < k0 + 400; ++k) {
                        auto [e, c] = term(k);
                        if (c == cplx(0.0)) continue;
                        cplx t = c * std::exp((e - s) * std::log(rho)) / (e - s);
                        sum += t;
                        if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(sum))) {
                            if (++small >= 2) break;
                        } else {
                            small = 0;
                        }
                    }
                    return sum;
                }};
}

cplx cpow(double x, cplx a) { return std::exp(a * std::log(x)); }

// ∫_x^∞ t^{d-1} cos(t - φ) dt for Re d < 1.
cplx cos_moment(cplx d, cplx phi, double x) {
    cplx sum = 0.0;
    for (int sg : {1, -1}) {
        cplx mu = double(sg) * I1;
        sum += std::exp(double(sg) * I1 * phi) * std::exp(-d * std::log(mu)) * sf::upper_incomplete_gamma(d, mu * x);
    }
    return 0.5 * sum;
}

// Σ_{n<=N} μ(n) n^{-e}
cplx mobius_prefix(cplx e, std::int64_t N) {
    const auto& mu = sf::mobius_table();
    cplx s = 0.0;
    for (std::int64_t n = 1; n <= N; ++n)
        if (mu[n] != 0) s += double(mu[n]) * std::exp(-e * std::log(double(n)));
    return s;
}

// Σ_{n>N} μ(n) n^{-e}. Summed directly when the terms fall off fast enough,
// since 1/ζ(e) minus the prefix loses the tail to cancellation once it is small.
cplx mobius_tail(cplx e, std::int64_t N) {
    const auto& mu = sf::mobius_table();
    double x = e.real() - 1.0;
    if (x > 0.5) {
        double M = double(N) * std::pow(10.0, 13.0 / x);
        if (M < double(mu.size() - 1) && M < 2e4) {
            cplx s = 0.0;
            for (std::int64_t n = N + 1; n <= std::int64_t(M); ++n)
                if (mu[n] != 0) s += double(mu[n]) * std::exp(-e * std::log(double(n)));
            return s;
        }
    }
    return 1.0 / sf::zeta(e) - mobius_prefix(e, N);
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---------- ID-01 ----------

void id01(Run& R) {
    const int ks[] = {0, 1, 2, -1, -2, 3};
    auto pts = R.points(R.n(), [&] {
        int k = ks[R.rng.pick(6)];
        return cplx(k + R.rng.uni(0.05, 0.95), R.rng.uni(-2.0, 2.0));
    });
    for (size_t i = 0; i < pts.size(); ++i) {
        cplx z = pts[i];
        int k = int(std::floor(z.real()));
        double b = (i % 2 == 0) ? 0.0 : R.rng.uni(-2.0, 2.0);
        R.sample("Q_k", z, b, k, [&] {
            Density g;
            g.eval = [k, b](double y) {
                cplx L(-y, b);
                if (L.real() > 0.0) return std::exp(double(k) * L - std::log(1.0 + std::exp(-L)));
                return std::exp(double(k + 1) * L - std::log(1.0 + std::exp(L)));
            };
            double K = std::cos(b) >= 0.0 ? 1.0 : 1.0 / std::fabs(std::sin(b));
            g.env = {double(k), double(k + 1), K, std::nullopt};
            cplx lhs = sgn_w(std::abs(k)) * integrate_laplace(g, z).value;
            cplx rhs = pi * std::exp(I1 * b * z) / sf::sinpi(z);
            return rel(lhs, rhs);
        });
    }
}

// ---------- ID-02 ----------

void id02(Run& R) {
    const int ks[] = {0, 1, 2, -2, -3};
    for (int i = 0; i < R.n(); ++i) {
        int k = ks[i % 5];
        double b = R.rng.uni(-2.5, 2.5);
        double x0 = (k == 0) ? -0.95 : k + 0.05, x1 = k + 0.95;
        cplx z = R.rng.box(x0, x1, -2.0, 2.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            z = R.P.points[i];
            k = (std::fabs(z.real()) < 1.0) ? 0 : int(std::floor(z.real()));
        }
        R.sample("l_k", z, b, k, [&] {
            Density g;
            g.eval = [k, b](double y) { return cplx(dn::eval_lk(k, y, b)); };
            double qj = (k == 0) ? -1.0 : double(k);
            double c = std::cos(b);
            double den = c >= 0.0 ? 1.0 : std::max(1e-3, 1.0 - c * c);
            double K = 10.0 * (std::fabs(dn::q_fn(k, b)) + std::fabs(dn::q_fn(k + 1, b))) / den;
            g.env = {qj, double(k + 1), K, std::nullopt};
            cplx lhs = sgn_w(std::abs(k)) * integrate_laplace(g, z).value;
            return rel(lhs, dn::eval_m(z, b));
        });
    }
}

// ---------- ID-03 ----------

cplx expm1_minus(cplx w) {
    // e^w - 1 - w
    if (std::abs(w) < 0.5) {
        cplx t = w, s = 0.0;
        for (int k = 2; k < 40; ++k) {
            t *= w / double(k);
            s += t;
            if (std::abs(t) < 1e-18 * std::abs(s)) break;
        }
        return s;
    }
    return std::exp(w) - 1.0 - w;
}

void id03(Run& R) {
    const std::int64_t N = 2000;
    const auto& mu = sf::mobius_table();
    auto pts = R.points(R.n(), [&] { return std::polar(R.rng.uni(0.1, 3.0), R.rng.uni(-pi, pi)); });
    for (cplx z : pts) {
        cplx p = R.P.p.value_or(R.rng.box(1.5, 3.0, -2.0, 2.0));
        R.sample("Mobius interchange", z, p, 0, [&] {
            cplx lhs = 0.0;
            for (std::int64_t n = 1; n <= N; ++n)
                if (mu[n] != 0) lhs += double(mu[n]) * std::exp(-p * std::log(double(n))) * expm1_minus(z / double(n));
            lhs += 0.5 * z * z * mobius_tail(p + 2.0, N);
            cplx rhs = 0.0, t = z;
            for (int k = 2; k < 80; ++k) {
                t *= z / double(k);
                cplx term = t / sf::zeta(p + double(k));
                rhs += term;
                if (std::abs(term) < 1e-18) break;
            }
            return rel(lhs, rhs);
        });
    }
}

// ---------- ID-04 ----------

void id04(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        double p = R.rng.uni(0.5, 3.0), q = R.rng.uni(0.0, 4.0), j = R.rng.uni(-3.0, 3.0);
        if (p + q <= 1.05) q = 1.05 - p + R.rng.uni(0.0, 2.0);
        if (p + j <= 0.05) j = 0.05 - p + R.rng.uni(0.0, 2.0);
        if (std::fabs(j - (1.0 - p)) < 0.05) j += 0.1;
        double r = R.rng.loguni(1.01, 200.0);
        R.sample("g(r,j,q,p) bounds", r, p, 0, [&] {
            dn::EnvelopeSpec e{j, q, 1.0, p};
            double g = dn::envelope_g(r, e);
            double a = dn::envelope_alpha(p + j), b = dn::envelope_beta(j, q, p);
            double bound = a * std::pow(r, j) + b * std::pow(r, 1.0 - p);
            double K = std::max(sf::zeta(p + q).real(), std::fabs(a) + std::fabs(b));
            double jp = std::max(1.0 - p, j);
            double bound2 = K * std::pow(r, jp);
            double small = dn::envelope_g(1.0 / r, e);
            double small_rhs = sf::zeta(p + q).real() * std::pow(1.0 / r, q);
            double v1 = std::max(0.0, g - bound) / bound;
            double v2 = std::max(0.0, g - bound2) / bound2;
            return std::max({v1, v2, std::fabs(small - small_rhs) / small_rhs});
        });
    }
}

// ---------- ID-05 ----------

// T(r) = r^3 (1 - r)^2 on (0, 1), zero beyond.
constexpr int kA = 3, kB = 2;

cplx test_T(double r) { return r < 1.0 ? r * r * r * (1.0 - r) * (1.0 - r) : 0.0; }

// Σ_n n^{-p} T(r/n) (signed: μ(n) n^{-p} T(r/n)).
cplx theta_fn(double r, cplx p, bool mobius) {
    std::int64_t N0 = std::int64_t(std::floor(r)) + 1;
    cplx sum = 0.0;
    for (int i = 0; i <= kB; ++i) {
        cplx e = p + double(kA + i);
        cplx tail = mobius ? mobius_tail(e, N0 - 1) : sf::hurwitz_tail(e, N0);
        sum += binom(kB, i) * std::pow(-r, i) * tail;
    }
    return std::pow(r, kA) * sum;
}

Density theta_density(cplx p, bool mobius, double Rcut) {
    Density d;
    d.eval = [p, mobius](double r) { return theta_fn(r, p, mobius); };
    d.env = {1.0 - p.real(), double(kA), 1.0, std::nullopt};
    for (int n = 2; n < int(Rcut); ++n) d.breaks.push_back(n);
    // on (0, 1] the sums start at n = 1, so θ is a polynomial there
    d.lower = Tail{1.0, [p, mobius](cplx s) {
                       cplx sum = 0.0;
                       for (int i = 0; i <= kB; ++i) {
                           cplx z = sf::zeta(p + double(kA + i));
                           sum += binom(kB, i) * std::pow(-1.0, i) * (mobius ? 1.0 / z : z) / (double(kA + i) - s);
                       }
                       return sum;
                   }};
    // Fubini over r > R: Σ_{n>R} n^{-p-a-i} ∫_R^n r^{a+i-s-1} dr
    std::int64_t Rn = std::int64_t(Rcut);
    d.upper = Tail{Rcut, [p, mobius, Rn, Rcut](cplx s) {
                       auto tail = [&](cplx e) { return mobius ? mobius_tail(e, Rn) : sf::hurwitz_tail(e, Rn + 1); };
                       cplx sum = 0.0;
                       cplx ts = tail(p + s);
                       for (int i = 0; i <= kB; ++i) {
                           cplx c = double(kA + i) - s;
                           sum += binom(kB, i) * std::pow(-1.0, i) / c *
                                  (ts - cpow(Rcut, c) * tail(p + double(kA + i)));
                       }
                       return sum;
                   }};
    return d;
}

void id05(Run& R) {
    // small cut: the Fubini tail is exact, and R^{a+i} amplifies the rounding in ω
    const double Rcut = 10.0;
    for (int i = 0; i < R.n(); ++i) {
        cplx p = R.P.p.value_or(R.rng.box(1.2, 2.5, -1.0, 1.0));
        cplx s = R.rng.box(1.0 - p.real() + 0.05, 2.95, -3.0, 3.0);
        bool mob = (i % 2 == 1);
        R.sample(mob ? "zeta-divide" : "zeta-multiply", s, p, 0, [&] {
            cplx base = sf::gamma(3.0 - s) * 2.0 * sf::rgamma(6.0 - s);
            cplx lhs = integrate_mellin(theta_density(p, mob, Rcut), s).value;
            cplx z = sf::zeta(p + s);
            cplx rhs = mob ? base / z : base * z;
            return rel(lhs, rhs);
        });
    }
    // closure: ω of θ gives T back
    const std::int64_t N = 2000;
    const auto& mu = sf::mobius_table();
    for (int i = 0; i < 5; ++i) {
        cplx p = R.rng.box(1.2, 2.5, -1.0, 1.0);
        double r = R.rng.uni(0.05, 3.0);
        R.sample("closure", r, p, 0, [&] {
            cplx sum = 0.0;
            for (std::int64_t m = 1; m <= N; ++m)
                if (mu[m] != 0) sum += double(mu[m]) * std::exp(-p * std::log(double(m))) * theta_fn(r / double(m), p, false);
            sum += std::pow(r, 3) * sf::zeta(p + 3.0) * mobius_tail(p + 3.0, N);
            return rel(sum, test_T(r));
        });
    }
}

// ---------- ID-06 ----------

void id06(Run& R) {
    const cplx alphas[] = {0.25, -0.5, cplx(0.5, 0.3), 1.0};
    const double qs[] = {2.0, 1.5};
    const double Rcut = 60.0;
    for (int i = 0; i < R.n(); ++i) {
        double q = qs[i % 2];
        cplx a = alphas[(i / 2) % 4];
        cplx s = R.rng.box(a.real() + 0.05, q - 0.05, -3.0, 3.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            s = R.P.points[i];
        }
        R.sample("alpha-transform", s, a, 0, [&] {
            dn::DensityFn h;
            h.eval = [q](double r) { return cplx(std::pow(r, q) * std::exp(-r)); };
            h.env = {q - 30.0, q, std::pow(30.0, 30.0) * std::exp(-30.0), std::nullopt};
            auto taylor = [q](int n) { return std::make_pair(q + n, cplx(std::pow(-1.0, n) / std::tgamma(n + 1.0))); };
            Density hd;
            hd.eval = h.eval;
            hd.env = h.env;
            hd.lower = power_tail(0.5, taylor, 0);
            hd.upper = Tail{80.0, [](cplx) { return cplx(0.0); }};
            cplx lap_h = integrate_mellin(hd, s).value;
            // h^{<α>}: Taylor tail near 0, constant C J^α beyond R
            cplx C = sf::gamma(q - a);
            Density ha;
            ha.eval = [h, a](double r) { return dn::alpha_transform(h, a, r); };
            ha.env = {a.real(), q, 1.0, std::nullopt};
            ha.lower = power_tail(0.5, [taylor, a](int n) {
                auto [e, c] = taylor(n);
                return std::make_pair(e, c / (e - a));
            }, 0);
            ha.upper = Tail{Rcut, [C, a, Rcut](cplx s2) { return C * cpow(Rcut, a - s2) / (s2 - a); }};
            cplx lap_ha = integrate_mellin(ha, s).value;
            cplx closed = sf::gamma(q - s);
            return std::max({rel(lap_ha, lap_h / (s - a)), rel(lap_h, closed), rel(lap_ha, closed / (s - a))});
        });
    }
}

// ---------- ID-07 ----------

// ∫_0^1 v^{u-1} E(v, m) dv
cplx j_integral(cplx u, int m) {
    const int N = 60;
    cplx sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        double a = 1.0 / (n + 1), b = 1.0 / n;
        auto f = [&](double v) { return std::exp((u - 1.0) * std::log(v)) * dn::eval_E_density(v, m); };
        // the μ-sum in E carries rounding noise near 1e-13 relative
        sum += quad::gk(f, a, b, 1e-10, 8).value;
    }
    // v < 1/(N+1): exact polynomial pieces
    const auto& mu = sf::mobius_table();
    double fact = std::tgamma(double(m));
    double a = 1.0 / (N + 1);
    for (int n = 1; n <= N; ++n) {
        if (mu[n] == 0) continue;
        cplx piece = 0.0;
        for (int l = 0; l <= m - 1; ++l) {
            cplx e = u + 2.0 + 2.0 * l;
            piece += binom(m - 1, l) * std::pow(double(n), -2.0 * (m - 1 - l)) * std::pow(-1.0, l) * cpow(a, e) / e;
        }
        sum += double(mu[n]) * (2.0 / fact) * piece;
    }
    sum += mobius_tail(u + 2.0 * m, N) / sf::pochhammer(1.0 + 0.5 * u, m);
    return sum;
}

void id07(Run& R) {
    const int ms[] = {2, 3, 4};
    for (int i = 0; i < R.n(); ++i) {
        int m = ms[i % 3];
        cplx u = R.rng.box(0.5, 3.0, -3.0, 3.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            u = R.P.points[i];
        }
        R.sample("j(u,m)", u, 0.0, m, [&] {
            cplx rhs = 1.0 / (sf::zeta(u + 2.0 * m) * sf::pochhammer(1.0 + 0.5 * u, m));
            return rel(j_integral(u, m), rhs);
        });
        R.sample("1/(1+u/2)_m", u, 0.0, m, [&] {
            double fact = std::tgamma(double(m));
            auto f = [&](double t) {
                return std::exp((u + 1.0) * std::log(t)) * std::pow(1.0 - t * t, m - 1);
            };
            cplx lhs = (2.0 / fact) * quad::finite(quad::Fn(f), 0.0, 1.0).value;
            return rel(lhs, 1.0 / sf::pochhammer(1.0 + 0.5 * u, m));
        });
        cplx p = R.rng.box(0.3, 3.0, -2.0, 2.0), q = R.rng.box(0.3, 3.0, -2.0, 2.0);
        R.sample("Beta", p, q, 0, [&] {
            auto f = [&](double t, double d) {
                double omt = d > 0.0 ? d : 1.0 - t;
                return std::exp((p - 1.0) * std::log(t) + (q - 1.0) * std::log(omt));
            };
            cplx lhs = quad::finite(quad::Fn2(f), 0.0, 1.0).value;
            return rel(lhs, sf::gamma(p) * sf::gamma(q) * sf::rgamma(p + q));
        });
    }
}

// ---------- ID-08 ----------

void id08(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        int w = 1 + i % 3;
        cplx z = R.rng.box(-3.0, 3.0, -4.0, 4.0);
        cplx b = R.P.beta.value_or(R.rng.box(-1.0, 1.5, -0.5, 0.5));
        R.sample("F translation", z, b, w, [&] {
            cplx lhs = sgn_w(w) * xc::F_fn(z + 2.0 * w, b);
            cplx rhs = xc::F_fn(z, b) / sf::pochhammer(1.0 + b + z, 2 * w);
            return rel(lhs, rhs);
        });
        cplx S = R.rng.box(0.6, 4.0, -5.0, 5.0);
        R.sample("f translation", S, 0.25, w, [&] {
            int m = 2 * w;
            cplx jv = 1.0 / (sf::zeta(0.5 + S + 2.0 * m) * sf::pochhammer(1.0 + 0.5 * (0.5 + S), m));
            cplx lhs = sgn_w(w) * xc::f_fn(S + 2.0 * m, 0.25);
            cplx rhs = std::pow(pi, m) / (S + 2.0 * m - 0.5) * jv * xc::n0_f0(S, 0.25).f0;
            return rel(lhs, rhs);
        });
    }
}

// ---------- ID-09 ----------

void id09(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        cplx u = R.rng.box(0.05, 0.95, -4.0, 4.0);
        cplx b = R.P.beta.value_or(R.rng.box(-1.5, 0.9, -0.5, 0.5));
        R.sample("splitting", u, b, 0, [&] {
            auto fs = xc::F_shifted(u, b);
            cplx F = xc::F_fn(1.0 - b - u, b);
            return std::max({rel(fs.F1, F), rel(fs.F1_direct, F)});
        });
        cplx th = R.rng.box(-2.0, 2.0, -1.0, 1.0), om = R.rng.box(-2.0, 2.0, -1.0, 1.0);
        R.sample("trig identity", th, om, 0, [&] {
            cplx lhs = std::sin(2.0 * th) / std::cos(th + om);
            cplx rhs = std::sin(2.0 * om) / std::cos(th + om) + 2.0 * std::sin(th - om);
            return rel(lhs, rhs);
        });
    }
}

// ---------- ID-10 ----------

// Σ_k (-1)^k e^{-ikφ} / ((k+1)! (u+k)): ∫_0^1 v^{u-1} J(v e^{-iφ}) dv
cplx j_small(cplx u, double phi) {
    cplx sum = 0.0;
    double fact = 1.0;
    for (int k = 0; k < 60; ++k) {
        fact *= (k + 1);
        cplx t = std::pow(-1.0, k) * std::exp(-I1 * double(k) * phi) / (fact * (u + double(k)));
        sum += t;
        if (std::abs(t) < 1e-18) break;
    }
    return sum;
}

void id10(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        cplx u = R.rng.box(0.05, 0.95, -2.0, 2.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            u = R.P.points[i];
        }
        cplx target = sf::gamma(u) / (1.0 - u);
        R.sample("J Mellin", u, 0.0, 0, [&] {
            Density T;
            T.eval = [](double r) { return dn::eval_J(1.0 / r); };
            T.env = {0.0, 1.0, 2.0, std::nullopt};
            const double V = 40.0;
            T.lower = Tail{1.0 / V, [V](cplx s) { return -cpow(V, s - 1.0) / (s - 1.0); }};
            T.upper = Tail{1.0, [](cplx s) { return j_small(s, 0.0); }};
            return rel(integrate_mellin(T, u).value, target);
        });
        double phi = R.rng.uni(-1.2, 1.2);
        R.sample("rotation", u, phi, 0, [&] {
            Density g;
            g.eval = [phi](double y) { return dn::eval_J(std::exp(cplx(y, -phi))); };
            g.env = {0.0, 1.0, 2.0, std::nullopt};
            double cut = std::log(40.0 / std::cos(phi));
            // v = e^{y}: small v is y -> -inf
            g.lower = Tail{0.0, [phi](cplx s) { return j_small(s, phi); }};
            g.upper = Tail{cut, [phi, cut](cplx s) {
                               return std::exp(I1 * phi) * (-std::exp((s - 1.0) * cut) / (s - 1.0));
                           }};
            cplx lhs = integrate_laplace(g, u).value;
            return rel(lhs, std::exp(I1 * phi * u) * target);
        });
        double th = R.rng.uni(-1.2, 1.2), om = R.rng.uni(-2.0, 2.0);
        R.sample("Im form", u, th, 0, [&] {
            Density T;
            T.eval = [th, om](double r) {
                return cplx((std::exp(-I1 * om) * dn::eval_J((1.0 / r) * std::exp(-I1 * th))).imag());
            };
            T.env = {0.0, 1.0, 2.0, std::nullopt};
            double V = 40.0 / std::cos(th);
            T.lower = Tail{1.0 / V, [V, th, om](cplx s) { return std::sin(th - om) * (-cpow(V, s - 1.0) / (s - 1.0)); }};
            T.upper = Tail{1.0, [th, om](cplx s) {
                               cplx sum = 0.0;
                               double fact = 1.0;
                               for (int k = 0; k < 60; ++k) {
                                   fact *= (k + 1);
                                   cplx t = std::pow(-1.0, k) * std::sin(-om - k * th) / (fact * (s + double(k)));
                                   sum += t;
                                   if (std::abs(t) < 1e-18) break;
                               }
                               return sum;
                           }};
            cplx lhs = integrate_mellin(T, u).value;
            return rel(lhs, std::sin(th * u - om) * target);
        });
        cplx omc = R.rng.box(-2.0, 2.0, -0.3, 0.3);
        R.sample("E(u,beta,2)", u, omc, 0, [&] {
            const double A = 40.0;
            // v^{u-1} g(v) with g(v) = (cos ω - cos(v - ω))/v; g(0) is split off on (0, 1]
            auto g = [&](double v) {
                double sinc = v < 1e-8 ? 0.5 : std::sin(0.5 * v) / v;
                return -2.0 * sinc * std::sin(omc - 0.5 * v);
            };
            cplx g0 = -std::sin(omc);
            auto f0 = [&](double v) { return std::exp((u - 1.0) * std::log(v)) * (g(v) - g0); };
            auto f1 = [&](double v) { return std::exp((u - 1.0) * std::log(v)) * g(v); };
            cplx lhs = quad::finite(quad::Fn(f0), 0.0, 1.0).value + g0 / u + quad::finite(quad::Fn(f1), 1.0, A).value +
                       std::cos(omc) * cpow(A, u - 1.0) / (1.0 - u) - cos_moment(u - 1.0, omc, A);
            return rel(lhs, std::sin(0.5 * pi * u - omc) * target);
        });
    }
}

// ---------- ID-11 ----------

// ∫_0^V v^{u-1} f(v) dv for f = O(v^{-a}) at 0 with Re u - a = margin > 0.
// (0, 1] runs in x = -log v up to where v^{margin} falls below e^{-40}.
cplx mellin_head(const std::function<cplx(double)>& f, cplx u, double margin, double V) {
    auto g = [&](double x) { return std::exp(-u * x) * f(std::exp(-x)); };
    double X = 40.0 / margin;
    cplx near = quad::finite(quad::Fn(g), 0.0, 1.0).value + quad::finite(quad::Fn(g), 1.0, X).value;
    auto h = [&](double v) { return std::exp((u - 1.0) * std::log(v)) * f(v); };
    return near + quad::finite(quad::Fn(h), 1.0, V).value;
}


// -Σ_m (-1)^m Γ(1-β+2m) V^e/e with e = u+β-1-2m: ∫_V^∞ v^{u-1} W(v, β) dv
cplx w_tail(cplx u, cplx b, double V) {
    cplx sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 60; ++m) {
        cplx e = u + b - 1.0 - 2.0 * m;
        cplx t = std::pow(-1.0, m) * sf::gamma(1.0 - b + 2.0 * m) * (-cpow(V, e) / e);
        if (std::abs(t) > prev) break;
        prev = std::abs(t);
        sum += t;
        if (prev < 1e-18) break;
    }
    return sum;
}

void id11(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        cplx z = R.rng.box(0.2, 5.0, -3.0, 3.0);
        cplx b = R.P.beta.value_or(R.rng.box(-1.5, 0.9, -0.3, 0.3));
        R.sample("W translation", z, b, 0, [&] {
            cplx lhs = dn::eval_W(z, b);
            cplx rhs = sf::gamma(1.0 - b) * std::exp((b - 1.0) * std::log(z)) - dn::eval_W(z, b - 2.0);
            return rel(lhs, rhs);
        });
        cplx b0 = R.P.beta.value_or(R.rng.box(-0.9, 0.9, -0.3, 0.3));
        R.sample("W(0,beta)", 0.0, b0, 0, [&] {
            return rel(dn::eval_W(0.0, b0), (pi / 2.0) / sf::cospi(0.5 * b0));
        });
        double edge = std::max(0.0, -(1.0 + b.real()));
        cplx u = R.rng.box(edge + 0.2, 1.0 - b.real() - 0.05, -2.0, 2.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            u = R.P.points[i];
        }
        R.sample("W Mellin", u, b, 0, [&] {
            const double V = 40.0;
            auto f = [&](double v) { return dn::eval_W(v, b); };
            cplx lhs = mellin_head(f, u, u.real() - edge, V) + w_tail(u, b, V);
            cplx rhs = (pi / 2.0) / sf::cospi(0.5 * (u + b)) * sf::gamma(u);
            return rel(lhs, rhs);
        });
    }
}

// ---------- ID-12 ----------

void id12(Run& R) {
    const double V = 40.0;
    for (int i = 0; i < R.n(); ++i) {
        double b = R.rng.uni(-1.8, 0.8);
        if (std::fabs(b) < 0.05) b = 0.05;
        if (std::fabs(b + 1.0) < 0.05) b = -1.05;
        if (R.P.beta) b = R.P.beta->real();
        double edge = std::max(0.0, -(1.0 + b));
        cplx u = R.rng.box(edge + 0.2, std::min(1.0, 1.0 - b) - 0.05, -2.0, 2.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            u = R.P.points[i];
        }
        auto fs = xc::F_shifted(u, b);
        R.sample("B0 Mellin", u, b, 0, [&] {
            cplx head = mellin_head([&](double v) { return dn::eval_B0_M(v, b).B0; }, u, u.real() - edge, V);
            // v B0 = -Γ(-β) v^β - (π/2)/sin(πβ/2) + W(v, β-1), W by its asymptotic series
            cplx e1 = u + b - 1.0, e2 = u - 1.0;
            cplx tail = -sf::gamma(-b) * (-cpow(V, e1) / e1) - (pi / 2.0) / std::sin(0.5 * pi * b) * (-cpow(V, e2) / e2);
            double prev = std::numeric_limits<double>::infinity();
            for (int m = 0; m < 60; ++m) {
                cplx e = u + b - 3.0 - 2.0 * m;
                cplx t = std::pow(-1.0, m) * sf::gamma(2.0 - b + 2.0 * m) * (-cpow(V, e) / e);
                if (std::abs(t) > prev) break;
                prev = std::abs(t);
                tail += t;
                if (prev < 1e-18) break;
            }
            return rel(head + tail, fs.E1);
        });
        R.sample("M Mellin", u, b, 0, [&] {
            cplx head = mellin_head([&](double v) { return dn::eval_B0_M(v, b).M; }, u, u.real() - edge, V);
            cplx tail = dn::h_shift_moment(u + b - 1.0, b, 0, V, std::numeric_limits<double>::infinity());
            return rel(head + tail, fs.F1_direct);
        });
        cplx z = R.rng.box(0.1, 20.0, -5.0, 5.0);
        R.sample("M vs z^{-1+b}H", z, b, 0, [&] {
            auto r = dn::eval_B0_M(z, b);
            return rel(r.M, r.M_H);
        });
    }
}

// ---------- ID-13 ----------

void id13(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        cplx p = R.P.p.value_or(R.rng.box(0.05, 0.95, -1.0, 1.0));
        cplx z = R.rng.box(0.2, 4.0, -3.0, 3.0);
        // u with |arg(z/u)| <= 1.4
        cplx u = z / std::polar(R.rng.loguni(0.3, 3.0), R.rng.uni(-1.4, 1.4));
        R.sample("I scaling", z, p, 0, [&] {
            cplx lhs = dn::eval_I(p, z, u);
            cplx rhs = std::exp(-p * std::log(u)) * dn::eval_I(p, z / u, 1.0);
            return rel(lhs, rhs);
        });
        cplx b = R.P.beta.value_or(R.rng.box(-0.95, -0.05, -0.3, 0.3));
        double x = R.rng.uni(0.2, 10.0);
        if (!R.P.points.empty() && size_t(i) < R.P.points.size()) x = R.P.points[i].real();
        R.sample("W from I", x, b, 0, [&] {
            cplx sum = 0.0;
            for (double sg : {1.0, -1.0}) {
                cplx si = sg * I1;
                sum += std::exp(b * std::log(si)) * dn::eval_I(-b, -si * x, 1.0);
            }
            return rel(0.5 * sum, dn::eval_W(x, 1.0 + b, dn::WRoute::R));
        });
    }
}

// ---------- ID-14 ----------

void id14(Run& R) {
    auto pts = R.points(R.n(), [&] { return R.rng.box(0.1, 5.0, -4.0, 4.0); });
    for (cplx z : pts) {
        cplx p = R.P.p.value_or(R.rng.box(0.1, 3.0, -1.5, 1.5));
        R.sample("I vs Gamma(1-p,z)", z, p, 0, [&] {
            cplx lhs = std::exp(-z) * dn::eval_I(p, z, 1.0) * sf::rgamma(p);
            return rel(lhs, sf::upper_incomplete_gamma(1.0 - p, z));
        });
    }
    for (int i = 0; i < 5 && R.P.points.empty(); ++i) {
        cplx p = R.rng.box(0.05, 0.95, -1.0, 1.0);
        R.sample("I(p,0)", 0.0, p, 0, [&] { return rel(dn::eval_I(p, 0.0, 1.0), pi / sf::sinpi(p)); });
    }
}

// ---------- ID-15 ----------

void id15(Run& R) {
    auto pts = R.points(R.n(), [&] { return R.rng.box(-4.0, 4.0, -4.0, 4.0); });
    for (cplx z : pts) {
        cplx b = R.P.beta.value_or(R.rng.box(-2.0, 3.0, -1.0, 1.0));
        cplx B = 1.0 + b;
        R.sample("phi = e^z gamma*", z, b, 0, [&] { return rel(sf::phi(B, z), std::exp(z) * sf::gamma_star(b, z)); });
        R.sample("recurrence", z, b, 0, [&] {
            return rel(z * sf::phi(B, z), -sf::rgamma(b) + sf::phi(b, z));
        });
        R.sample("(*) and Kummer", z, b, 0, [&] {
            // D φ(B, z) = Σ (k+1) z^k/Γ(B+k+1) = φ(B) - (B-1) φ(B+1)
            cplx p0 = sf::phi(B, z), p1 = sf::phi(B + 1.0, z), p2 = sf::phi(B + 2.0, z);
            cplx d1 = p0 - b * p1;
            cplx d2 = p0 - 2.0 * b * p1 + b * (b + 1.0) * p2;
            double r1 = rel(z * d1 + (b - z) * p0, sf::rgamma(b));
            double r2 = std::abs(z * d2 + (B - z) * d1 - p0) / std::max({1.0, std::abs(p0), std::abs(z * d2)});
            return std::max(r1, r2);
        });
        if (b.real() > 0.05) {
            R.sample("Laplace form", z, b, 0, [&] {
                auto f = [&](double j, double d) {
                    double omj = d > 0.0 ? d : 1.0 - j;
                    return std::exp((b - 1.0) * std::log(omj) + z * j);
                };
                cplx lhs = sf::rgamma(b) * quad::finite(quad::Fn2(f), 0.0, 1.0).value;
                return rel(lhs, sf::phi(B, z));
            });
        }
        cplx bn = R.rng.box(-0.95, -0.05, -0.5, 0.5);
        cplx zr = R.rng.box(0.0, 4.0, -4.0, 4.0);
        R.sample("I(-beta,z)", zr, bn, 0, [&] {
            cplx zmb = std::exp(-bn * std::log(zr));
            cplx lhs = zmb * dn::eval_I(-bn, zr, 1.0);
            cplx rhs = -(pi / sf::sinpi(bn)) * (sf::rgamma(1.0 + bn) - sf::phi(1.0 + bn, zr) + zmb * std::exp(zr));
            return rel(lhs, rhs);
        });
    }
}

// ---------- ID-16 ----------

void id16(Run& R) {
    auto pts = R.points(R.n(), [&] { return R.rng.box(-8.0, 8.0, -3.0, 3.0); });
    for (size_t i = 0; i < pts.size(); ++i) {
        cplx z = pts[i];
        cplx b = R.P.beta.value_or(R.rng.box(0.05, 2.5, -0.5, 0.5));
        R.sample("H routes", z, b, 0, [&] {
            cplx def = 2.0 * sf::rgamma(1.0 + b) - sf::phi(1.0 + b, I1 * z) - sf::phi(1.0 + b, -I1 * z);
            cplx ser = dn::eval_H(z, b, dn::HMode::series);
            cplx au = dn::eval_H(z, b);
            auto f = [&](double j, double d) {
                double omj = d > 0.0 ? d : 1.0 - j;
                return std::exp((b - 1.0) * std::log(omj)) * (1.0 - std::cos(z * j));
            };
            cplx integ = 2.0 * sf::rgamma(b) * quad::finite(quad::Fn2(f), 0.0, 1.0).value;
            double sym = std::max(rel(dn::eval_H(-z, b), au), rel(dn::eval_H(std::conj(z), std::conj(b)), std::conj(au)));
            return std::max({rel(def, ser), rel(au, ser), rel(integ, ser), sym});
        });
        R.sample("H(z,0)", z, 0.0, 0, [&] { return rel(dn::eval_H(z, 0.0), 2.0 * (1.0 - std::cos(z))); });
    }
}

// ---------- ID-17 ----------

void id17(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        cplx z = R.rng.box(0.3, 8.0, -3.0, 3.0);
        cplx b = R.P.beta.value_or(R.rng.box(-1.5, 2.5, -0.5, 0.5));
        int n = 1 + i % 3;
        R.sample("H translation", z, b, n, [&] {
            cplx h = 0.5 * dn::eval_H(z, b);
            double r1 = rel(h, sf::rgamma(b + 1.0) - 0.5 * dn::eval_H(z, b - 2.0) / (z * z));
            cplx mz = -1.0 / (z * z);
            double r2 = rel(h, dn::eval_A(z, b, n - 1) + std::pow(mz, n) * 0.5 * dn::eval_H(z, b - 2.0 * n));
            return std::max(r1, r2);
        });
        cplx zl = std::polar(R.rng.uni(10.0, 30.0), R.rng.uni(-0.4, 0.4));
        cplx bl = R.rng.box(0.0, 1.9, -0.3, 0.3);
        R.sample("closed form", zl, bl, 0, [&] {
            return rel(dn::eval_H(zl, bl, dn::HMode::closed), dn::eval_H(zl, bl, dn::HMode::series));
        });
        cplx zw = std::polar(R.rng.uni(0.2, 10.0), R.rng.uni(-1.3, 1.3));
        cplx bw = R.rng.box(-1.5, 0.9, -0.3, 0.3);
        R.sample("W vs R", zw, bw, 0, [&] {
            cplx lhs = std::exp((1.0 - bw) * std::log(zw)) * dn::eval_W(zw, bw, dn::WRoute::I);
            return rel(lhs, dn::eval_R(zw, bw));
        });
    }
}

// ---------- ID-18 ----------

// t_k with H(r, β, 2w) = Σ_{k>=w+1} t_k r^{2k}
cplx h_shift_coeff(int k, cplx b, int w) { return -2.0 * sgn_w(w) * sgn_w(k) * sf::rgamma(1.0 + b + 2.0 * k); }

Density h_shift_density(cplx b, int w) {
    Density d;
    d.eval = [b, w](double r) { return dn::eval_H_shift(r, b, w); };
    d.env = {std::max(2.0 * w, -b.real()), 2.0 * w + 2.0, 1.0, std::nullopt};
    d.lower = power_tail(1.0, [b, w](int k) { return std::make_pair(2.0 * k, h_shift_coeff(k, b, w)); }, w + 1);
    const double A = 40.0;
    d.upper = Tail{A, [b, w, A](cplx s) {
                       return dn::h_shift_moment(-s, b, w, A, std::numeric_limits<double>::infinity());
                   }};
    return d;
}

void id18(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        int w = R.P.w.value_or(i % 3);
        cplx b = R.P.beta.value_or(R.rng.box(0.0, 1.5, -0.3, 0.3));
        double lo = std::max(2.0 * w, -b.real()) + 0.05;
        cplx z = R.rng.box(lo, 2.0 * w + 1.95, -3.0, 3.0);
        if (!R.P.points.empty()) {
            if (size_t(i) >= R.P.points.size()) break;
            z = R.P.points[i];
        }
        R.sample("F Mellin", z, b, w, [&] {
            cplx lhs = integrate_mellin(h_shift_density(b, w), z).value;
            return rel(lhs, sgn_w(w) * xc::F_fn(z, b));
        });
    }
}

// ---------- ID-19 ----------

void id19(Run& R) {
    for (int i = 0; i < R.n(); ++i) {
        cplx z = R.rng.box(-10.0, 10.0, -2.0, 2.0);
        cplx b = R.P.beta.value_or(R.rng.box(0.0, 2.0, -0.3, 0.3));
        int m = 1 + i % 3;
        R.sample("G", z, b, m, [&] {
            return rel(dn::eval_G(z, b, m, dn::GRoute::integral), dn::eval_G(z, b, m, dn::GRoute::series));
        });
        int w = R.P.w.value_or(i % 3);
        R.sample("H(.,.,2w)", z, b, w, [&] {
            cplx ser = dn::eval_H_shift(z, b, w, dn::HShiftMode::series);
            double r1 = rel(dn::eval_H_shift(z, b, w, dn::HShiftMode::polynomial), ser);
            double r2 = rel(dn::eval_H_shift(z, b, w, dn::HShiftMode::integral), ser);
            return std::max(r1, r2);
        });
    }
}

// ---------- ID-20 / ID-21 ----------

// T0(i r², β, 4w) = Σ_{k>=w+1} τ_k r^{4k}
cplx t0_coeff(int k, cplx b, int w) {
    return sgn_w(w + 1) * sgn_w(k) * cpow(pi, b - 1.0) * std::pow(pi, 2.0 * k) * sf::rgamma(1.0 + b + 2.0 * k) /
           (2.0 * k + b - 0.5);
}

double t0_strip_lo(cplx b, int w) { return std::max({1.0 - 2.0 * b.real(), 4.0 * w, 0.0}); }

const double kSeriesA = 25.0 / pi;  // J <= A keeps T0(iJ) and P(πJ) on the series route
const double kMomentX = 40.0;       // start of the closed-form H moment

// ½ π^{β-1+σ} ∫_{πA}^∞ x^{-σ-1} H(x, β, 2w) dx = ∫_A^∞ j^{-σ-1} h0(j) dj
cplx h0_tail(cplx sigma, cplx b, int w) {
    auto f = [&](double x) { return std::exp((-sigma - 1.0) * std::log(x)) * dn::eval_H_shift(x, b, w); };
    cplx head = quad::gk(f, pi * kSeriesA, kMomentX, 1e-13).value;
    cplx rest = dn::h_shift_moment(-sigma, b, w, kMomentX, std::numeric_limits<double>::infinity());
    return 0.5 * cpow(pi, b - 1.0 + sigma) * (head + rest);
}

// Mellin density r -> T0(i r², β, 4w)
Density t0_density(cplx b, int w) {
    Density d;
    d.eval = [b, w](double r) { return dn::eval_T0(I1 * (r * r), b, w); };
    d.env = {t0_strip_lo(b, w), 4.0 * w + 4.0, 1.0, std::nullopt};
    d.lower = power_tail(1.0, [b, w](int k) { return std::make_pair(4.0 * k, t0_coeff(k, b, w)); }, w + 1);
    double Rt = std::sqrt(kSeriesA);
    d.upper = Tail{Rt, [b, w](cplx s) {
                       // T0(iJ) = J^α (c_A + ∫_A^J j^{-α-1} h0 dj) beyond A
                       cplx sigma = 0.5 * s, alpha = 0.5 - b;
                       double A = kSeriesA;
                       cplx tA = dn::eval_T0(I1 * A, b, w);
                       return 0.5 * (tA * cpow(A, -sigma) + h0_tail(sigma, b, w)) / (sigma - alpha);
                   }};
    return d;
}

// ∫_0^X J^{-σ-1} T0(iJ) dJ for X <= A
cplx t0_partial(cplx sigma, cplx b, int w, double X) {
    auto taylor = [&](double x) {
        cplx sum = 0.0;
        for (int k = w + 1; k < w + 200; ++k) {
            cplx e = 2.0 * k - sigma;
            cplx t = t0_coeff(k, b, w) * cpow(x, e) / e;
            sum += t;
            if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(sum)) && k > w + 3) break;
        }
        return sum;
    };
    if (X <= 1.0) return taylor(X);
    auto f = [&](double J) { return std::exp((-sigma - 1.0) * std::log(J)) * dn::eval_T0(I1 * J, b, w); };
    return taylor(1.0) + quad::gk(f, 1.0, X, 1e-13).value;
}

// Mellin density r -> P_{4w}(π r², β); beyond the series range through T0 and μ.
Density p4w_density(cplx b, int w) {
    Density d;
    d.eval = [b, w](double r) { return dn::eval_P4w(pi * r * r, b, w, dn::P4wMode::series); };
    d.env = {t0_strip_lo(b, w), 4.0 * w + 4.0, 1.0, std::nullopt};
    d.lower = power_tail(1.0, [b, w](int k) {
        return std::make_pair(4.0 * k, t0_coeff(k, b, w) / sf::zeta(2.0 * b + 4.0 * k));
    }, w + 1);
    double Rt = std::sqrt(kSeriesA);
    d.upper = Tail{Rt, [b, w](cplx s) {
                       cplx sigma = 0.5 * s, u = 2.0 * b + s;
                       cplx phi_total = 2.0 * integrate_mellin(t0_density(b, w), s).value;
                       const auto& mu = sf::mobius_table();
                       const std::int64_t N = 200;
                       double A = kSeriesA;
                       cplx sum = 0.0;
                       for (std::int64_t n = 1; n <= N; ++n)
                           if (mu[n] != 0)
                               sum += double(mu[n]) * std::exp(-u * std::log(double(n))) *
                                      t0_partial(sigma, b, w, A / double(n * n));
                       cplx e = 2.0 * w + 2.0 - sigma;
                       sum += t0_coeff(w + 1, b, w) * cpow(A, e) / e * mobius_tail(2.0 * b + 4.0 * w + 4.0, N);
                       return 0.5 * (phi_total / sf::zeta(u) - sum);
                   }};
    return d;
}

// Mellin density r -> π^{β-1} H(π r², β, 2w)
Density f0_density(cplx b, int w) {
    Density d;
    cplx pre = cpow(pi, b - 1.0);
    d.eval = [b, w, pre](double r) { return pre * dn::eval_H_shift(pi * r * r, b, w); };
    d.env = {std::max(4.0 * w, -2.0 * b.real()), 4.0 * w + 4.0, 1.0, std::nullopt};
    d.lower = power_tail(1.0, [b, w, pre](int k) {
        return std::make_pair(4.0 * k, pre * h_shift_coeff(k, b, w) * std::pow(pi, 2.0 * k));
    }, w + 1);
    double Rt = std::sqrt(kMomentX / pi);
    d.upper = Tail{Rt, [b, w](cplx s) {
                       cplx sigma = 0.5 * s;
                       return 0.5 * cpow(pi, b - 1.0 + sigma) *
                              dn::h_shift_moment(-sigma, b, w, kMomentX, std::numeric_limits<double>::infinity());
                   }};
    return d;
}

std::vector<std::pair<cplx, int>> nested_combos(const IdentityParams& P) {
    std::vector<std::pair<cplx, int>> out;
    std::vector<cplx> bs = P.beta ? std::vector<cplx>{*P.beta} : std::vector<cplx>{0.0, 0.25, 1.0};
    std::vector<int> ws = P.w ? std::vector<int>{*P.w} : std::vector<int>{0, 1};
    for (cplx b : bs)
        for (int w : ws) out.emplace_back(b, w);
    return out;
}

void id20(Run& R) {
    for (auto [b, w] : nested_combos(R.P)) {
        double lo = t0_strip_lo(b, w) + 0.05, hi = 4.0 * w + 3.95;
        auto pts = R.points(R.n(9), [&] { return R.rng.box(lo, hi, -3.0, 3.0); });
        for (cplx s : pts) {
            R.sample("f0 Mellin", s, b, w, [&] {
                cplx lhs = integrate_mellin(f0_density(b, w), s).value;
                return rel(lhs, sgn_w(w) * xc::n0_f0(s, b).f0);
            });
            R.sample("1/b Mellin", s, b, w, [&] {
                cplx lhs = integrate_mellin(t0_density(b, w), s).value;
                return rel(lhs, sgn_w(w) / xc::b_fn(s, b));
            });
        }
    }
}

void id21(Run& R) {
    for (auto [b, w] : nested_combos(R.P)) {
        double lo = t0_strip_lo(b, w) + 0.05, hi = 4.0 * w + 3.95;
        auto pts = R.points(R.n(9), [&] { return R.rng.box(lo, hi, -3.0, 3.0); });
        for (cplx s : pts) {
            R.sample("f Mellin", s, b, w, [&] {
                cplx lhs = integrate_mellin(p4w_density(b, w), s).value;
                return rel(lhs, sgn_w(w) * xc::f_fn(s, b));
            });
        }
        if (R.P.points.empty()) {
            for (int i = 0; i < 3; ++i) {
                double v = R.rng.uni(0.5, 28.0);
                R.sample("P4w routes", v, b, w, [&] {
                    return rel(dn::eval_P4w(v, b, w, dn::P4wMode::mobius), dn::eval_P4w(v, b, w, dn::P4wMode::series));
                });
            }
        }
        if (b == cplx(0.25) && w == 0 && R.P.points.empty()) {
            for (double s : {1.0, 2.0, 3.0}) {
                R.sample("Laplace form", s, b, w, [&] {
                    cplx lhs = integrate_laplace(laplace_form(p4w_density(b, w)), s).value;
                    return rel(lhs, xc::f_fn(s, b));
                });
            }
        }
    }
}

// ---------- ID-22 ----------

void id22(Run& R) {
    const std::int64_t N = 2000;
    const auto& mu = sf::mobius_table();
    auto pts = R.points(R.n(), [&] { return R.rng.box(0.05, 9.0, -0.5, 0.5); });
    for (cplx z : pts) {
        R.sample("P0 vs P", z, 0.25, 0, [&] {
            cplx sum = 0.0;
            for (std::int64_t n = 1; n <= N; ++n)
                if (mu[n] != 0)
                    sum -= double(mu[n]) / std::sqrt(double(n)) * dn::eval_P_section2(I1 * z / double(n * n));
            double c = std::pow(pi, -0.75) * pi * pi / (std::tgamma(3.25) * 1.75);
            sum += c * z * z * mobius_tail(4.5, N);
            return rel(sum, dn::eval_P4w(pi * z, 0.25, 0, dn::P4wMode::series));
        });
    }
}

// ---------- ID-23..25 ----------

void id23(Run& R) {
    int n = R.P.n_samples.value_or(2000);
    double b = R.P.beta ? R.P.beta->real() : 0.25;
    R.sample("metric axioms", 5.0, b, 0, [&] {
        auto m = metric_check(5.0, b, n, R.P.seed);
        if (!m.positive) return 1.0;
        return std::max({std::max(0.0, m.worst_slack), m.symmetry_max, m.m0});
    });
}

void id24(Run& R) {
    for (double x : {1.0, 2.5}) {
        R.sample("decay slope", x, 0.25, 0, [&] {
            auto r = decay_scan(x, 0.25);
            return std::max(0.0, *r.exponent);
        });
        R.sample("tail decreasing", x, 0.25, 0, [&] {
            auto mean_abs = [&](double t0, double t1) {
                double s = 0.0;
                const int n = 200;
                for (int i = 0; i < n; ++i) {
                    double t = t0 + (t1 - t0) * (i + 0.5) / n;
                    s += std::abs(xc::f_fn(cplx(x, t), 0.25)) + std::abs(xc::f_fn(cplx(x, -t), 0.25));
                }
                return s / n;
            };
            double a = mean_abs(100.0, 150.0), c = mean_abs(150.0, 200.0);
            return (std::isfinite(a) && c < a) ? 0.0 : 1.0;
        });
    }
}

void id25(Run& R) {
    for (auto [b, w] : nested_combos(R.P)) {
        R.sample("small-r order", 0.0, b, w, [&] {
            auto fn = [b = b, w = w](double v) { return dn::eval_P4w(v, b, w).real(); };
            auto r = fit_growth("P4w", fn, Grid{1e-3, 1e-2, 50, true});
            return std::fabs(*r.exponent - 2.0 * (w + 1));
        });
    }
    R.sample("P0 growth on [1,10]", 0.0, 0.25, 0, [&] {
        auto fn = [](double v) { return dn::eval_P4w(v, 0.25, 0).real(); };
        auto r = fit_growth("P0", fn, Grid{1.0, 10.0, 200, true});
        return *r.exponent < 1.0 ? 0.0 : *r.exponent;
    });
}

}  // namespace

Density p4w_mellin_density(cplx beta, int w) { return p4w_density(beta, w); }

namespace {

// ---------- catalog ----------

using Runner = void (*)(Run&);

struct Entry {
    CatalogEntry info;
    Runner run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {{"ID-01", "sine representation by Q_k", "(-1)^k ∫ e^{zy} Q_k(e^{-y+iβ}) dy = π e^{iβz}/sin(πz)",
          "k < Re z < k+1, k in {-2..3}, |Im z| <= 2, |β| <= 2", 1e-7}, id01},
        {{"ID-02", "Lemma 1.2 (1)-(2)", "(-1)^k ∫ e^{zy} l_k(y, β) dy = m(z, β)",
          "k in {0,1,2,-2,-3}, strip interior with margin 0.05, |β| <= 2.5", 1e-7}, id02},
        {{"ID-03", "Lemma 2.1", "Σ μ(n) n^{-p} E(z/n) = Σ z^k/(k! ζ(p+k)) for E = e^z - 1 - z",
          "|z| <= 3, 1.5 <= Re p <= 3", 1e-9}, id03},
        {{"ID-04", "Lemma 2.2, Corollary 2.2", "g(r,j,q,p) under α r^j + β r^{1-p} and K g(r, j', q)",
          "p + q > 1.05, p + j > 0.05, |j - (1-p)| >= 0.05, 1.01 <= r <= 200", 1e-9}, id04},
        {{"ID-05", "Lemma 2.4 (iv)/(iv)'", "Mellin of θ and ω is ζ(p+s) or 1/ζ(p+s) times that of T; ω of θ is T",
          "T = r^3(1-r)^2 on (0,1); max(1-p, -inf) < Re s < 3", 1e-7}, id05},
        {{"ID-06", "Lemma 3.2 (2)", "(1/(s-α)) ∫ e^{sy} h(e^{-y}) dy = ∫ e^{sy} h^{<α>}(e^{-y}) dy",
          "h = r^q e^{-r}, q in {2, 1.5}, Re α < Re s < q", 1e-7}, id06},
        {{"ID-07", "Lemma 3.3 (2), Beta representation", "j(u,m) = ∫_0^1 v^{u-1} E(v,m) dv; Beta integrals",
          "m in {2,3,4}, 0.5 <= Re u <= 3", 1e-7}, id07},
        {{"ID-08", "translation relations for F and f", "(-1)^w F(z+2w) = F(z)/(1+β+z)_{2w}; f(S+2m) via j and f0",
          "w in {1,2,3}, |Im| <= 5", 1e-9}, id08},
        {{"ID-09", "splitting of F(u, β, 1), trigonometric identity", "F(u,β,1) = (2/π) sin(πβ) E1 + E2 = F(1-β-u, β)",
          "0 < Re u < 1, -1.5 <= Re β <= 0.9", 1e-9}, id09},
        {{"ID-10", "Lemma 3.4, Lemma 3.5, Corollary 3.2",
          "sin(θu - ω) Γ(u)/(1-u) = ∫ v^{u-1} Im(e^{-iω} J(v e^{-iθ})) dv and relatives",
          "0 < Re u < 1, |φ|, |θ| <= 1.2", 1e-7}, id10},
        {{"ID-11", "Claim 3.1, Lemma 3.6 (2)", "W translation, W(0,β), Mellin of W",
          "Re β < 1, max(0, -(1+Re β)) < Re u < 1 - Re β", 1e-7}, id11},
        {{"ID-12", "Lemma 3.7, Lemma 3.8", "E(u,β,1) = Mellin of B0; F(u,β,1) = Mellin of M",
          "-1.8 <= β <= 0.8, max(0, -(1+β)) < Re u < min(1, 1-β)", 1e-7}, id12},
        {{"ID-13", "Claim 3.3", "I(p,z,u) = u^{-p} I(p,z/u); W(z,1+β) = ½ Σ (σi)^β I(-β, -σiz)",
          "0 < Re p < 1, Re z > 0, Re(z/u) >= 0; -1 < Re β < 0, z > 0", 1e-7}, id13},
        {{"ID-14", "Lemma 4.1", "e^{-z} I(p,z)/Γ(p) = Γ(1-p, z); I(p,0) = π/sin(πp)",
          "Re p > 0, Re z > 0", 1e-9}, id14},
        {{"ID-15", "Lemma 4.2", "φ(1+β,z) = e^z γ(β,z,*), recurrences, Kummer's equation, Laplace form, I(-β,z)",
          "|Re z|, |Im z| <= 4, -2 <= Re β <= 3", 1e-9}, id15},
        {{"ID-16", "definition of H, Claim 5.1", "H by φ, by series, by integral; H(z,0) = 2(1 - cos z); symmetries",
          "|Re z| <= 8, |Im z| <= 3, 0.05 <= Re β <= 2.5", 1e-9}, id16},
        {{"ID-17", "Claim 5.2, Lemma 5.2, Claim 5.6", "H translation, closed form of H, z^{1-β} W = R",
          "10 <= |z| <= 30 for the closed form; |arg z| <= 1.3 for W", 1e-7}, id17},
        {{"ID-18", "Theorem 5.2, Theorem 5.3", "(-1)^w F(z, β) = ∫ v^{z-1} H(1/v, β, 2w) dv",
          "w in {0,1,2}, max(2w, -Re β) < Re z < 2w+2, 0 <= Re β <= 1.5", 1e-7}, id18},
        {{"ID-19", "Lemma 5.3 (2)(ii)/(3)", "G and H(., ., 2w) by series and by integral",
          "|Re z| <= 10, |Im z| <= 2, 0 <= Re β <= 2", 1e-7}, id19},
        {{"ID-20", "Corollary 6.1 (1)(2)", "(-1)^w f0(s,β) and (-1)^w/b(s,β) as Mellin transforms",
          "β in {0, 0.25, 1}, w in {0, 1}, V_{4w} interior", 1e-6}, id20},
        {{"ID-21", "Unconditional theorem 6.1 (1)(2)(3)", "(-1)^w f(s,β) = ∫ v^{s-1} P_{4w}(π v^{-2}, β) dv",
          "β in {0, 0.25, 1}, w in {0, 1}, V_{4w} interior", 1e-6}, id21},
        {{"ID-22", "Corollary 2.1", "P0(πz) = Σ μ(n) n^{-1/2} (-P(iz/n²))", "0.05 <= Re z <= 9, |Im z| <= 0.5", 1e-9},
         id22},
        {{"ID-23", "Corollary 6.2", "m(t) = |1 - n(x)/n(x+it)|^{1/2} is a metric norm", "x = 5, β = 0.25", 1e-10},
         id23},
        {{"ID-24", "Theorem 3.1", "decay of |f(x+it)| along vertical lines", "β = 0.25, x in {1, 2.5}, t in [e, 200]",
          0.05}, id24},
        {{"ID-25", "Unconditional theorem 6.1 (4)", "growth orders of P_{4w}", "r in [1e-3, 1e-2]; P0 on [1, 10]", 0.1},
         id25},
    };
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = [] {
        std::vector<CatalogEntry> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return c;
}

IdentityCheck run_identity(const std::string& id, const IdentityParams& params) {
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        IdentityCheck out;
        out.entry = e.info;
        out.tolerance = params.tol.value_or(e.info.tolerance);
        Run R(out, params);
        try {
            e.run(R);
        } catch (const std::exception& ex) {
            out.error = ex.what();
        }
        out.max_residual = 0.0;
        for (const auto& s : out.samples) out.max_residual = std::max(out.max_residual, s.residual);
        out.pass = out.error.empty() && !out.samples.empty() && out.max_residual <= out.tolerance;
        return out;
    }
    throw UnknownIdentityError("unknown identity: " + id);
}

std::vector<std::string> parse_suite(const std::string& spec) {
    std::vector<std::string> ids;
    if (spec == "all") {
        for (const auto& e : catalog()) ids.push_back(e.id);
        return ids;
    }
    std::set<std::string> known;
    for (const auto& e : catalog()) known.insert(e.id);
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        tok = tok.substr(b, e - b + 1);
        if (!known.count(tok)) throw UnknownIdentityError("unknown identity: " + tok);
        ids.push_back(tok);
    }
    if (ids.empty()) throw UnknownIdentityError("empty suite");
    return ids;
}

std::vector<IdentityCheck> run_suite(const std::vector<std::string>& ids, const IdentityParams& params, int jobs) {
    for (const auto& id : ids)
        if (std::none_of(catalog().begin(), catalog().end(), [&](const CatalogEntry& e) { return e.id == id; }))
            throw UnknownIdentityError("unknown identity: " + id);
    sf::mobius_table();  // built once before the workers start
    std::vector<IdentityCheck> out(ids.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < ids.size();) out[i] = run_identity(ids[i], params);
    };
    int n = std::max(1, std::min<int>(jobs, int(ids.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

// ---------- scans ----------

std::vector<double> Grid::points() const {
    if (count < 2) throw DomainError("grid: count must be at least 2");
    if (!(stop > start)) throw DomainError("grid: need stop > start");
    if (log && !(start > 0.0)) throw DomainError("grid: log spacing needs start > 0");
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        double t = double(i) / (count - 1);
        v[i] = log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start))) : start + t * (stop - start);
    }
    v.back() = stop;
    return v;
}

namespace {

ScanResult scan_values(const std::string& target, const std::string& kind, const Grid& grid, const RealFn& f,
                       std::vector<double>& vals) {
    ScanResult r;
    r.target = target;
    r.kind = kind;
    r.grid = grid;
    auto xs = grid.points();
    vals.clear();
    for (double x : xs) vals.push_back(f(x));
    r.min = *std::min_element(vals.begin(), vals.end());
    r.max = *std::max_element(vals.begin(), vals.end());
    // zeros separate nothing: only a strict sign flip counts
    int last = 0;
    for (double v : vals) {
        int sg = (v > 0.0) - (v < 0.0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++r.sign_changes;
        last = sg;
    }
    r.monotone = true;
    for (size_t i = 1; i < vals.size(); ++i)
        if (!(vals[i] > vals[i - 1])) r.monotone = false;
    return r;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ScanResult scan_positivity(const std::string& target, const RealFn& f, const Grid& grid) {
    std::vector<double> vals;
    return scan_values(target, "positivity", grid, f, vals);
}

ScanResult scan_monotone(const std::string& target, const RealFn& f, const Grid& grid) {
    std::vector<double> vals;
    return scan_values(target, "monotone", grid, f, vals);
}

ScanResult fit_growth(const std::string& target, const RealFn& f, const Grid& grid) {
    std::vector<double> vals;
    auto r = scan_values(target, "growth", grid, f, vals);
    auto xs = grid.points();
    std::vector<double> lx, ly;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (vals[i] == 0.0 || !std::isfinite(vals[i])) continue;
        lx.push_back(std::log(xs[i]));
        ly.push_back(std::log(std::fabs(vals[i])));
    }
    if (lx.size() >= 2) r.exponent = slope(lx, ly);
    return r;
}

ScanResult decay_scan(double x, double beta, int count) {
    Grid g{std::exp(1.0), 200.0, count, true};
    auto f = [x, beta](double t) {
        double a = std::abs(xc::f_fn(cplx(x, t), beta));
        return a * std::pow(t, 1.75 + 0.5 * x) / std::pow(std::log(t), 7.0);
    };
    auto r = fit_growth("f decay bound", f, g);
    r.kind = "decay";
    return r;
}

// ---------- metric ----------

MetricResult metric_check(double x, double beta, int n_samples, std::uint64_t seed) {
    if (std::fabs(x) <= 4.0) throw DomainError("metric: need |x| > 4");
    if (std::fmod(std::fabs(x), 4.0) == 0.0) throw DomainError("metric: x is a multiple of four");
    if (x < -4.0 && beta != 0.25) throw DomainError("metric: x < -4 only for β = 1/4");
    MetricResult r;
    r.x = x;
    r.beta = beta;
    r.n_samples = n_samples;
    r.seed = seed;
    cplx nx = xc::n_fn(x, beta);
    auto m = [&](double t) { return std::sqrt(std::abs(1.0 - nx / xc::n_fn(cplx(x, t), beta))); };
    r.m0 = m(0.0);
    Rng rng(seed ^ fnv1a("metric"));
    r.worst_slack = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        double t1 = rng.uni(-50.0, 50.0), t2 = rng.uni(-50.0, 50.0), t3 = rng.uni(-50.0, 50.0);
        double d12 = m(t1 - t2), d23 = m(t2 - t3), d13 = m(t1 - t3);
        double slack = d13 - d12 - d23;
        r.worst_slack = std::max(r.worst_slack, slack);
        if (slack > 1e-10) ++r.violations;
        double t = t1 - t2;
        if (t != 0.0 && !(d12 > 0.0)) r.positive = false;
        r.symmetry_max = std::max(r.symmetry_max, std::fabs(d12 - m(-t)));
    }
    r.pass = r.m0 == 0.0 && r.positive && r.violations == 0 && r.symmetry_max <= 1e-12;
    return r;
}

KummerResult kummer_scan(int count, std::uint64_t seed, double h) {
    Rng rng(seed ^ fnv1a("kummer"));
    KummerResult r;
    r.count = count;
    for (int i = 0; i < count; ++i) {
        cplx z = rng.box(0.2, 4.0, -3.0, 3.0);
        double b = rng.uni(0.1, 1.5);
        r.phi_max = std::max(r.phi_max, sf::kummer_residual(1.0, 1.0 + b, sf::KummerTarget::phi, z, h));
        cplx a = rng.box(0.1, 0.9, -0.3, 0.3);
        cplx zu = rng.box(0.2, 4.0, -3.0, 3.0);
        r.U_max = std::max(r.U_max, sf::kummer_residual(a, a, sf::KummerTarget::U, zu, h));
    }
    return r;
}

// ---------- registry ----------

const std::map<std::string, Evaluator>& registry() {
    static const std::map<std::string, Evaluator> r = {
        {"m", [](cplx x, const FnParams& p) { return dn::eval_m(x, p.beta.real()); }},
        {"lk", [](cplx x, const FnParams& p) { return cplx(dn::eval_lk(p.k, x.real(), p.beta.real())); }},
        {"Qk", [](cplx x, const FnParams& p) { return cplx(dn::eval_Qk(p.k, x.real())); }},
        {"J", [](cplx x, const FnParams&) { return dn::eval_J(x); }},
        {"R", [](cplx x, const FnParams& p) { return dn::eval_R(x, p.beta); }},
        {"I", [](cplx x, const FnParams& p) { return dn::eval_I(p.p, x, p.u); }},
        {"W", [](cplx x, const FnParams& p) { return dn::eval_W(x, p.beta); }},
        {"B0", [](cplx x, const FnParams& p) { return dn::eval_B0_M(x, p.beta).B0; }},
        {"M", [](cplx x, const FnParams& p) { return dn::eval_B0_M(x, p.beta).M; }},
        {"H", [](cplx x, const FnParams& p) { return dn::eval_H(x, p.beta); }},
        {"Hshift", [](cplx x, const FnParams& p) { return dn::eval_H_shift(x, p.beta, p.w); }},
        {"G", [](cplx x, const FnParams& p) { return dn::eval_G(x, p.beta, p.m); }},
        {"E", [](cplx x, const FnParams& p) { return cplx(dn::eval_E_density(x.real(), p.m)); }},
        {"T0", [](cplx x, const FnParams& p) { return dn::eval_T0(x, p.beta, p.w); }},
        {"T0ir", [](cplx x, const FnParams& p) { return dn::eval_T0(I1 * x, p.beta, p.w); }},
        {"P4w", [](cplx x, const FnParams& p) { return dn::eval_P4w(x, p.beta, p.w); }},
        {"P0", [](cplx x, const FnParams& p) { return dn::eval_P4w(x, p.beta, 0); }},
        {"P", [](cplx x, const FnParams&) { return dn::eval_P_section2(x); }},
        {"phi", [](cplx x, const FnParams& p) { return sf::phi(1.0 + p.beta, x); }},
        {"gamma_star", [](cplx x, const FnParams& p) { return sf::gamma_star(p.beta, x); }},
        {"gamma", [](cplx x, const FnParams&) { return sf::gamma(x); }},
        {"zeta", [](cplx x, const FnParams&) { return sf::zeta(x); }},
        {"xi", [](cplx x, const FnParams&) { return xc::xi(x); }},
        {"n", [](cplx x, const FnParams& p) { return xc::n_fn(x, p.beta); }},
        {"f", [](cplx x, const FnParams& p) { return xc::f_fn(x, p.beta); }},
        {"b", [](cplx x, const FnParams& p) { return xc::b_fn(x, p.beta); }},
        {"f0", [](cplx x, const FnParams& p) { return xc::n0_f0(x, p.beta).f0; }},
        {"N", [](cplx x, const FnParams& p) { return xc::N_fn(x, p.beta); }},
        {"F", [](cplx x, const FnParams& p) { return xc::F_fn(x, p.beta); }},
        {"r2probe", [](cplx x, const FnParams&) { return x * x; }},
        {"negprobe", [](cplx x, const FnParams&) { return -x; }},
    };
    return r;
}

RealFn real_target(const std::string& fn, const FnParams& p) {
    auto it = registry().find(fn);
    if (it == registry().end()) throw DomainError("unknown function: " + fn);
    Evaluator ev = it->second;
    return [ev, p](double x) { return ev(cplx(x), p).real(); };
}

}  // namespace xlap::verify
