#include "xlap/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "xlap/errors.hpp"

namespace xlap::quad {

namespace bq = boost::math::quadrature;

namespace {

template <class Rule, class Call>
Result guarded(Call&& call, double a, double b) {
    Result r;
    r.a = a;
    r.b = b;
    try {
        double l1 = 0.0;
        r.value = call(&r.err, &l1, &r.evals);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("quadrature: ") + e.what());
    }
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
        throw ConvergenceError("quadrature: non-finite result");
    return r;
}

bq::tanh_sinh<double>& ts() {
    thread_local bq::tanh_sinh<double> rule(15);
    return rule;
}

bq::exp_sinh<double>& es() {
    thread_local bq::exp_sinh<double> rule(12);
    return rule;
}

bq::sinh_sinh<double>& ss() {
    thread_local bq::sinh_sinh<double> rule(12);
    return rule;
}

}  // namespace

Result finite(const Fn& f, double a, double b, double tol) {
    return guarded<void>(
        [&](double* err, double* l1, long* n) {
            auto g = [&](double x) { ++*n; return f(x); };
            return ts().integrate(g, a, b, tol, err, l1);
        },
        a, b);
}

Result finite(const Fn2& f, double a, double b, double tol) {
    // Mirror the upper half so the distance to b is exact near b.
    double m = 0.5 * (a + b);
    Result lo = finite([&](double x) { return f(x, a - x); }, a, m, tol);
    Result hi = finite([&](double t) { return f(b - t, t); }, 0.0, b - m, tol);
    Result r;
    r.value = lo.value + hi.value;
    r.err = lo.err + hi.err;
    r.evals = lo.evals + hi.evals;
    r.a = a;
    r.b = b;
    return r;
}

Result halfline(const Fn& f, double a, double tol) {
    return guarded<void>(
        [&](double* err, double* l1, long* n) {
            auto g = [&](double x) { ++*n; return f(a + x); };
            return es().integrate(g, tol, err, l1);
        },
        a, std::numeric_limits<double>::infinity());
}

Result line(const Fn& f, double tol) {
    double inf = std::numeric_limits<double>::infinity();
    return guarded<void>(
        [&](double* err, double* l1, long* n) {
            auto g = [&](double x) { ++*n; return f(x); };
            return ss().integrate(g, tol, err, l1);
        },
        -inf, inf);
}

Result gk(const Fn& f, double a, double b, double tol, unsigned depth) {
    return guarded<void>(
        [&](double* err, double* l1, long* n) {
            auto g = [&](double x) { ++*n; return f(x); };
            return bq::gauss_kronrod<double, 21>::integrate(g, a, b, depth, tol, err, l1);
        },
        a, b);
}

}  // namespace xlap::quad
