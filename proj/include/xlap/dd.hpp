#pragma once

#include <cmath>
#include <complex>

namespace xlap {

// Paired-double real: value = hi + lo with |lo| <= ulp(hi)/2.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double x) : hi(x), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace ddops {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace ddops

inline dd operator+(dd a, dd b) {
    dd s = ddops::two_sum(a.hi, b.hi);
    dd t = ddops::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = ddops::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return ddops::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = ddops::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return ddops::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = ddops::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }
inline dd& operator/=(dd& a, dd b) { return a = a / b; }

inline double to_double(dd a) { return a.hi + a.lo; }
inline double to_double(double a) { return a; }

// Paired-double complex.
struct cdd {
    dd re;
    dd im;

    constexpr cdd() = default;
    cdd(dd r, dd i = dd(0.0)) : re(r), im(i) {}
    cdd(double r) : re(r), im(0.0) {}
    cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    explicit operator std::complex<double>() const { return {to_double(re), to_double(im)}; }
};

inline cdd operator+(const cdd& a, const cdd& b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(const cdd& a, const cdd& b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator-(const cdd& a) { return {-a.re, -a.im}; }
inline cdd operator*(const cdd& a, const cdd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator/(const cdd& a, const cdd& b) {
    dd den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline cdd& operator+=(cdd& a, const cdd& b) { return a = a + b; }
inline cdd& operator*=(cdd& a, const cdd& b) { return a = a * b; }
inline cdd& operator/=(cdd& a, const cdd& b) { return a = a / b; }

inline std::complex<double> to_cplx(const cdd& a) { return static_cast<std::complex<double>>(a); }
inline std::complex<double> to_cplx(const std::complex<double>& a) { return a; }
inline double abs_approx(const cdd& a) { return std::hypot(a.re.hi, a.im.hi); }
inline double abs_approx(const std::complex<double>& a) { return std::abs(a); }

}  // namespace xlap
