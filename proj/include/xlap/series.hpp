#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "xlap/config.hpp"
#include "xlap/dd.hpp"
#include "xlap/errors.hpp"
#include "xlap/specfun.hpp"

namespace xlap::series {

struct Outcome {
    cplx value{};
    double ratio = 1.0;  // largest term over |result|
    int terms = 0;
    bool extended = false;
};

namespace detail {

template <class T>
T from(cplx z) {
    return T(z);
}

inline double mag(const cplx& z) { return std::abs(z); }
inline double mag(const cdd& z) { return abs_approx(z); }

// Σ_{k>=k0} y^k w(k) / Γ(B + step k), with 1/Γ(B + step K) factored out so
// the inner sum carries only exact rational recurrences.
template <class T, class W>
Outcome run(cplx y, cplx B, int step, int k0, double zabs, W&& w, const SeriesTruncation& tr) {
    int K = k0;
    while ((B + double(step * K)).real() < 1.0) ++K;
    const cplx G = specfun::rgamma(B + double(step * K));

    const T Bt = from<T>(B);
    auto factor = [&](int k) {
        T p = Bt + from<T>(cplx(double(step * k)));
        for (int j = 1; j < step; ++j) p *= Bt + from<T>(cplx(double(step * k + j)));
        return p;
    };

    const T yT = from<T>(y);
    auto ypow = [&](int n) {
        T p = from<T>(1.0);
        for (int i = 0; i < n; ++i) p *= yT;
        return p;
    };

    T sum = from<T>(0.0);
    double maxterm = 0.0;
    int quiet = 0;
    T base = from<T>(1.0);  // y^k / Π factors, kept as one recurrence to avoid overflow
    int k = k0;
    for (; k < k0 + tr.max_terms; ++k) {
        if (k <= K) {
            T r = from<T>(1.0);
            for (int i = k; i < K; ++i) r *= factor(i);
            base = ypow(k) * r;
        } else {
            base = base * yT / factor(k - 1);
        }
        T term = base * w(k);
        sum += term;
        double tm = mag(term);
        if (!std::isfinite(tm)) throw ConvergenceError("series: non-finite term");
        maxterm = std::max(maxterm, tm);
        double tol = (std::is_same_v<T, cdd> ? 1e-33 : tr.tail_tol) * std::max(mag(sum), 1e-300);
        if (tm <= tol) {
            ++quiet;
        } else {
            quiet = 0;
        }
        if (quiet >= 3 && double(step * k) > zabs && k >= K) break;
    }
    if (k >= k0 + tr.max_terms) throw ConvergenceError("series: max_terms reached");
    Outcome out;
    out.value = to_cplx(sum) * G;
    double m = mag(sum);
    out.ratio = (m > 0.0) ? maxterm / m : (maxterm > 0.0 ? INFINITY : 1.0);
    out.terms = k - k0 + 1;
    out.extended = std::is_same_v<T, cdd>;
    return out;
}

}  // namespace detail

inline constexpr double kAutoEscalate = 1e3;

// Weight callback: w(k) -> cdd. Guard policy: strict standard throws,
// nullopt follows the context and escalates to paired-double.
template <class W>
Outcome evaluate(cplx y, cplx B, int step, int k0, W&& w, std::optional<Precision> tier,
                 const char* what) {
    const Context& ctx = context();
    const SeriesTruncation& tr = ctx.series;
    double zabs = std::pow(std::abs(y), 1.0 / step);
    Precision p = tier.value_or(ctx.precision);
    if (p == Precision::standard) {
        auto wd = [&](int k) { return to_cplx(w(k)); };
        Outcome o = detail::run<cplx>(y, B, step, k0, zabs, wd, tr);
        if (tier.has_value()) {
            if (o.ratio <= tr.cancellation_guard) return o;
            throw CancellationError(std::string(what) + ": cancellation guard tripped in standard precision");
        }
        // auto mode escalates well before the guard so the result keeps ~13 digits
        if (o.ratio <= std::min(tr.cancellation_guard, kAutoEscalate)) return o;
    }
    Outcome o = detail::run<cdd>(y, B, step, k0, zabs, w, tr);
    if (o.ratio > tr.extended_guard)
        throw CancellationError(std::string(what) + ": cancellation guard tripped in extended precision");
    return o;
}

inline cdd inv(cplx x) { return cdd(1.0) / cdd(x); }

}  // namespace xlap::series
