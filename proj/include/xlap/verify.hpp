#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xlap/config.hpp"
#include "xlap/densities.hpp"

namespace xlap::verify {

inline constexpr const char* version = "0.1.0";

enum class QuadKind { two_sided_laplace, mellin_halfline, unit_interval, halfline_decay };

struct QuadratureSpec {
    QuadKind kind = QuadKind::two_sided_laplace;
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    long max_evals = 4000000;
    // Integration range in the density's own variable (y for Laplace, r for
    // Mellin); chosen from the envelope when empty. Tails take precedence.
    std::optional<std::pair<double, double>> window;
};

struct QuadratureResult {
    cplx value{};
    double err_estimate = 0.0;
    long evals = 0;
    std::pair<double, double> window{0.0, 0.0};
};

// Closed-form part of a transform beyond a cut. The callback receives s.
struct Tail {
    double cut = 0.0;
    std::function<cplx(cplx)> value;
};

// Laplace densities are functions of y with |g(y)| <= K g(e^{-y}, j, q);
// `lower` covers (-inf, cut] and `upper` covers [cut, inf) in y.
// Mellin densities are functions of r = 1/v with |T(r)| <= K g(r, j, q);
// `lower` covers (0, cut] and `upper` covers [cut, inf) in r.
struct Density {
    std::function<cplx(double)> eval;
    densities::EnvelopeSpec env;
    std::optional<Tail> lower;
    std::optional<Tail> upper;
    // kinks of the density, in its own variable; the window is split there
    std::vector<double> breaks;
};

// ∫_R e^{sy} g(y) dy. StripError unless env.j < Re s < env.q.
QuadratureResult integrate_laplace(const Density& g, cplx s, const QuadratureSpec& spec = {});
// ∫_0^∞ v^{s-1} T(1/v) dv, through v = e^{-y}.
QuadratureResult integrate_mellin(const Density& T, cplx s, const QuadratureSpec& spec = {});

// Laplace form g(y) = T(e^{-y}) of a Mellin density; tails are carried over.
Density laplace_form(const Density& T);
// P_{4w}(π r², β) as a Mellin density of (-1)^w f(s, β), with its large-r tail.
Density p4w_mellin_density(cplx beta, int w);

struct IdentityParams {
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::optional<int> n_samples;
    std::optional<cplx> beta;
    std::optional<int> w;
    std::optional<cplx> p;
    // explicit sample points (s, z, u or p depending on the identity)
    std::vector<cplx> points;
};

struct Sample {
    std::string label;
    cplx point{};
    cplx beta{};
    int w = 0;
    double residual = 0.0;
};

struct CatalogEntry {
    std::string id;
    std::string anchor;
    std::string description;
    std::string domain;
    double tolerance = 0.0;
};

struct IdentityCheck {
    CatalogEntry entry;
    double tolerance = 0.0;
    std::vector<Sample> samples;
    double max_residual = 0.0;
    bool pass = false;
    std::string error;  // set when evaluation raised
};

const std::vector<CatalogEntry>& catalog();
IdentityCheck run_identity(const std::string& id, const IdentityParams& params = {});
// Runs in parallel up to `jobs` threads; results keep the order of `ids`.
std::vector<IdentityCheck> run_suite(const std::vector<std::string>& ids, const IdentityParams& params, int jobs = 1);
// "all" or a comma separated list; UnknownIdentityError on bad ids.
std::vector<std::string> parse_suite(const std::string& spec);

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    bool log = false;
    std::vector<double> points() const;
};

struct ScanResult {
    std::string target;
    std::string kind;
    Grid grid;
    double min = 0.0;
    double max = 0.0;
    int sign_changes = 0;
    bool monotone = false;
    std::optional<double> exponent;
};

using RealFn = std::function<double(double)>;

ScanResult scan_positivity(const std::string& target, const RealFn& f, const Grid& grid);
ScanResult scan_monotone(const std::string& target, const RealFn& f, const Grid& grid);
// Least-squares slope of log|f| against log r over the grid.
ScanResult fit_growth(const std::string& target, const RealFn& f, const Grid& grid);
// Slope of log(|f(x+it)| |t|^{7/4+x/2} / (log t)^7) against log t on [e, 200].
ScanResult decay_scan(double x, double beta, int count = 400);

struct MetricResult {
    double x = 0.0;
    double beta = 0.0;
    int n_samples = 0;
    std::uint64_t seed = 0;
    double m0 = 0.0;
    double symmetry_max = 0.0;
    double worst_slack = 0.0;  // max of d13 - d12 - d23
    int violations = 0;        // slack > 1e-10
    bool positive = true;      // m(t) > 0 at every sampled t != 0
    bool pass = false;
};

MetricResult metric_check(double x, double beta, int n_samples, std::uint64_t seed);

// |K(1,1+β) φ(1+β,·)| and |K(a,a) e^z Γ(1-a,z)| by central differences at
// `count` seeded points; returns the worst residual of each kind. The default
// step suits the five-point stencil: rounding grows like ε|g|/h^2.
struct KummerResult {
    double phi_max = 0.0;
    double U_max = 0.0;
    int count = 0;
};
KummerResult kummer_scan(int count, std::uint64_t seed, double h = 2e-3);

struct FnParams {
    cplx beta = 0.25;
    int w = 0;
    int k = 0;
    int m = 2;
    cplx p = 0.5;
    cplx u = 1.0;
};

using Evaluator = std::function<cplx(cplx, const FnParams&)>;
// Every evaluator exposed by name to the CLI and the scanners.
const std::map<std::string, Evaluator>& registry();
RealFn real_target(const std::string& fn, const FnParams& p);

}  // namespace xlap::verify
