#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xlap/config.hpp"
#include "xlap/errors.hpp"

namespace xlap::specfun {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

cplx sinpi(cplx z);
cplx cospi(cplx z);

// Principal branch: exp(a log z), with 0^a = 0 for Re a > 0 and 0^0 = 1.
cplx cpow(cplx z, cplx a);

cplx gamma(cplx z);
cplx lgamma(cplx z);
// 1/Γ(z); entire, zero at the nonpositive integers.
cplx rgamma(cplx z);

cplx zeta(cplx s);
// ζ(s) - 1, accurate in the relative sense when Re s is large.
cplx zeta_minus_one(cplx s);
// Σ_{n>=N} n^{-s} for Re s > 1.
cplx hurwitz_tail(cplx s, std::int64_t N);

// B_{2j}/(2j)! for j = 1..30.
const std::vector<double>& bernoulli_scaled();

int mobius(std::int64_t n);
// μ(0..bound) with index 0 unused; rebuilt when the context bound changes.
const std::vector<std::int8_t>& mobius_table();

cplx pochhammer(cplx z, int n);

cplx upper_incomplete_gamma(cplx q, cplx z);
// e^z Γ(q, z) without forming the exponentials separately where the continued fraction applies.
cplx upper_incomplete_gamma_scaled(cplx q, cplx z);

// Explicit Precision::standard is strict (throws on guard trip); nullopt
// follows the context tier and escalates to paired-double when needed.
cplx phi(cplx B, cplx z, std::optional<Precision> tier = std::nullopt);
cplx gamma_star(cplx beta, cplx z, std::optional<Precision> tier = std::nullopt);

enum class KummerTarget { phi, U, zero };

// |z g'' + (B - z) g' - a g| at z by central differences.
// phi: g = φ(B, .) with a = 1;  U: g = e^z Γ(1 - a, z) with B = a.
double kummer_residual(cplx a, cplx B, KummerTarget g, cplx z, double h);

}  // namespace xlap::specfun
