#pragma once

#include <complex>
#include <cstdint>

namespace xlap {

using cplx = std::complex<double>;

enum class Precision { standard, extended };

struct SeriesTruncation {
    int max_terms = 4000;
    double tail_tol = 1e-17;
    double cancellation_guard = 1e8;
    double extended_guard = 1e14;
};

// Process-wide evaluation context. Set before concurrent use.
struct Context {
    Precision precision = Precision::standard;
    std::int64_t sieve_bound = 1000000;
    SeriesTruncation series{};
};

Context& context();

// Reads XLAP_SIEVE_BOUND and XLAP_PRECISION.
void apply_env_overrides();

}  // namespace xlap
