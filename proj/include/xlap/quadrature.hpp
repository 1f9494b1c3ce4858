#pragma once

#include <functional>

#include "xlap/config.hpp"

namespace xlap::quad {

struct Result {
    cplx value{};
    double err = 0.0;
    long evals = 0;
    double a = 0.0;
    double b = 0.0;
};

using Fn = std::function<cplx(double)>;
// Second argument: signed distance to the nearest endpoint (b - x or a - x).
using Fn2 = std::function<cplx(double, double)>;

// Double-exponential rule on (a, b); algebraic endpoint singularities allowed.
Result finite(const Fn& f, double a, double b, double tol = 1e-13);
Result finite(const Fn2& f, double a, double b, double tol = 1e-13);

// Double-exponential rule on (a, inf); algebraic or exponential decay.
Result halfline(const Fn& f, double a, double tol = 1e-13);

// Double-exponential rule on the whole real line.
Result line(const Fn& f, double tol = 1e-13);

// Adaptive Gauss-Kronrod (21 points) on [a, b].
Result gk(const Fn& f, double a, double b, double tol = 1e-13, unsigned depth = 18);

}  // namespace xlap::quad
