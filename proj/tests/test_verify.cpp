#include <cmath>
#include <complex>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "xlap/densities.hpp"
#include "xlap/errors.hpp"
#include "xlap/verify.hpp"
#include "xlap/xicore.hpp"

using namespace xlap;
using namespace xlap::verify;
using oracle::rel;

namespace {

const double PI = oracle::pi;

// ξ(s) = ½ π^{-s/2} 2Γ(1+s/2)(s-1)ζ(s)
double xi_oracle(double s) { return std::pow(PI, -0.5 * s) * std::tgamma(1.0 + 0.5 * s) * (s - 1.0) * oracle::zeta_borwein(s).real(); }

Density logistic() {
    Density g;
    g.eval = [](double y) { return cplx(1.0 / (1.0 + std::exp(y))); };
    g.env = {0.0, 1.0, 1.0, std::nullopt};
    return g;
}

IdentityParams at(std::initializer_list<cplx> pts) {
    IdentityParams p;
    p.points = pts;
    return p;
}

}  // namespace

TEST_CASE("laplace engine: logistic density gives pi at s = 1/2") {
    auto r = integrate_laplace(logistic(), 0.5);
    CHECK(std::abs(r.value - PI) < 1e-9);
    CHECK(r.err_estimate >= 0.0);
    CHECK(r.window.first < 0.0);
    CHECK(r.window.second > 0.0);
    // away from the centre: π/sin(πs)
    cplx s(0.3, 0.7);
    CHECK(rel(integrate_laplace(logistic(), s).value, PI / std::sin(PI * s)) < 1e-9);
}

TEST_CASE("laplace engine: l_0 integrates to one") {
    for (double b : {0.5, -1.0, 2.0}) {
        Density g;
        g.eval = [b](double y) { return cplx(densities::eval_lk(0, y, b)); };
        g.env = {-1.0, 1.0, 10.0, std::nullopt};
        CHECK(std::abs(integrate_laplace(g, 0.0).value - 1.0) < 1e-9);
    }
}

TEST_CASE("laplace engine: halving the tolerance stays within the error estimate") {
    cplx s(0.4, 1.5);
    QuadratureSpec a;
    a.abs_tol = a.rel_tol = 1e-8;
    QuadratureSpec b = a;
    b.abs_tol = b.rel_tol = 0.5e-8;
    auto ra = integrate_laplace(logistic(), s, a);
    auto rb = integrate_laplace(logistic(), s, b);
    CHECK(std::abs(ra.value - rb.value) <= std::max(ra.err_estimate, 1e-15));
}

TEST_CASE("laplace engine: P0(pi e^{-2y}) at s = 2 is f(2)") {
    auto g = laplace_form(p4w_mellin_density(0.25, 0));
    cplx lhs = integrate_laplace(g, 2.0).value;
    double f2 = 1.0 / (std::sin(PI / 2.0) * 2.0 * xi_oracle(2.5));
    CHECK(rel(lhs, f2) < 1e-6);
    CHECK(rel(xicore::f_fn(2.0, 0.25), f2) < 1e-9);
}

TEST_CASE("laplace engine: points outside the strip raise StripError") {
    CHECK_THROWS_AS(integrate_laplace(logistic(), 1.1), StripError);
    CHECK_THROWS_AS(integrate_laplace(logistic(), -0.1), StripError);
    auto T = p4w_mellin_density(0.25, 0);
    double lo = T.env.j;
    CHECK_NOTHROW(integrate_mellin(T, lo + 0.1));
    CHECK_THROWS_AS(integrate_mellin(T, lo - 0.1), StripError);
}

TEST_CASE("mellin engine: J at u = 1/2 gives 2 sqrt(pi)") {
    Density T;
    T.eval = [](double r) { return densities::eval_J(1.0 / r); };
    T.env = {0.0, 1.0, 1.0, std::nullopt};
    CHECK(rel(integrate_mellin(T, 0.5).value, 2.0 * std::sqrt(PI)) < 1e-8);
    // -Γ(u-1) = Γ(u)/(1-u) away from the real axis, Γ from a 200-panel oracle
    cplx u(0.3, 0.8);
    cplx g = oracle::integrate_line([&](double x) { return std::exp(u * x - std::exp(x)); }, -150.0, 5.0, 400);
    CHECK(rel(integrate_mellin(T, u).value, g / (1.0 - u)) < 1e-8);
}

TEST_CASE("mellin engine: H(1/v, 1/4) and H(1/v, 1/4, 2)") {
    IdentityParams p = at({1.0});
    p.beta = 0.25;
    p.w = 0;
    auto a = run_identity("ID-18", p);
    REQUIRE(a.samples.size() == 1);
    CHECK(a.max_residual <= 1e-7);
    p = at({3.0});
    p.beta = 0.25;
    p.w = 1;
    auto b = run_identity("ID-18", p);
    REQUIRE(b.samples.size() == 1);
    CHECK(b.max_residual <= 1e-7);
}

TEST_CASE("run_identity: pinned examples") {
    IdentityParams p16 = at({cplx(1.3, 0.2)});
    p16.beta = 0.25;
    auto r16 = run_identity("ID-16", p16);
    CHECK(r16.pass);
    CHECK(r16.max_residual <= 1e-9);

    IdentityParams p14 = at({cplx(1.0, 1.0)});
    p14.p = 0.6;
    auto r14 = run_identity("ID-14", p14);
    CHECK(r14.pass);
    CHECK(r14.max_residual <= 1e-9);

    IdentityParams p21 = at({2.0});
    p21.beta = 0.25;
    p21.w = 0;
    auto r21 = run_identity("ID-21", p21);
    CHECK(r21.pass);
    CHECK(r21.max_residual <= 1e-6);
}

TEST_CASE("run_identity: a point outside the strip is reported, not computed") {
    IdentityParams p = at({-0.2});
    p.beta = 0.25;
    p.w = 0;
    auto r = run_identity("ID-21", p);
    CHECK_FALSE(r.pass);
    CHECK(r.error.find("strip") != std::string::npos);
}

TEST_CASE("catalog: 25 entries with anchors and unknown ids rejected") {
    const auto& c = catalog();
    CHECK(c.size() == 25);
    std::set<std::string> ids;
    for (const auto& e : c) {
        CHECK_FALSE(e.anchor.empty());
        CHECK(e.tolerance > 0.0);
        ids.insert(e.id);
    }
    CHECK(ids.size() == 25);
    CHECK_THROWS_AS(run_identity("ID-99"), UnknownIdentityError);
    CHECK_THROWS_AS(parse_suite("ID-01,ID-2"), UnknownIdentityError);
    CHECK(parse_suite("all").size() == 25);
    CHECK(parse_suite("ID-14,ID-15").size() == 2);
}

TEST_CASE("run_suite: order kept and results repeatable across thread counts") {
    auto ids = parse_suite("ID-08,ID-09,ID-14,ID-16");
    IdentityParams p;
    auto a = run_suite(ids, p, 1);
    auto b = run_suite(ids, p, 4);
    REQUIRE(a.size() == ids.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].entry.id == ids[i]);
        CHECK(b[i].entry.id == ids[i]);
        REQUIRE(a[i].samples.size() == b[i].samples.size());
        for (size_t k = 0; k < a[i].samples.size(); ++k) CHECK(a[i].samples[k].residual == b[i].samples[k].residual);
    }
    p.seed = 7;
    auto c = run_suite({"ID-16"}, p, 1);
    CHECK(c[0].samples[0].point != a[3].samples[0].point);
}

TEST_CASE("scan: positivity of P4w and sign of l_2") {
    FnParams fp;
    fp.beta = 0.25;
    fp.w = 1;
    auto r = scan_positivity("P4w", real_target("P4w", fp), Grid{1e-3, 50.0, 1000, true});
    CHECK(r.min > 0.0);
    CHECK(r.sign_changes == 0);

    FnParams l2;
    l2.k = 2;
    l2.beta = PI / 2.0;
    auto s = scan_positivity("lk", real_target("lk", l2), Grid{-10.0, 10.0, 400, false});
    CHECK(s.max < 0.0);
    CHECK(s.sign_changes == 0);
}

TEST_CASE("scan: H(., 0) at the zeros of 1 - cos r") {
    FnParams fp;
    fp.beta = 0.0;
    auto r = scan_positivity("H", real_target("H", fp), Grid{2.0 * PI, 20.0 * PI, 10, false});
    CHECK(r.min == 0.0);
    CHECK(r.sign_changes == 0);
}

TEST_CASE("scan: monotone targets and the decreasing probe") {
    FnParams p0;
    p0.beta = 0.25;
    CHECK(scan_monotone("P0", real_target("P0", p0), Grid{0.0, PI, 1000, false}).monotone);
    FnParams h;
    h.beta = 0.5;
    h.w = 1;
    CHECK(scan_monotone("Hshift", real_target("Hshift", h), Grid{0.0, 1.0, 1000, false}).monotone);
    CHECK_FALSE(scan_monotone("negprobe", real_target("negprobe", {}), Grid{0.0, 1.0, 100, false}).monotone);
}

TEST_CASE("scan: growth fit recovers r^2") {
    auto r = fit_growth("r2probe", real_target("r2probe", {}), Grid{1.0, 10.0, 50, true});
    REQUIRE(r.exponent.has_value());
    CHECK(std::fabs(*r.exponent - 2.0) < 1e-6);
}

TEST_CASE("scan: grids validate their shape") {
    CHECK_THROWS(Grid{0.0, 1.0, 1, false}.points());
    CHECK_THROWS(Grid{1.0, 0.0, 10, false}.points());
    CHECK_THROWS(Grid{0.0, 1.0, 10, true}.points());
    auto g = Grid{1.0, 100.0, 3, true}.points();
    REQUIRE(g.size() == 3);
    CHECK(std::fabs(g[1] - 10.0) < 1e-12);
    CHECK_THROWS_AS(real_target("nope", {}), DomainError);
}

TEST_CASE("metric: axioms at the sampled points") {
    auto a = metric_check(5.0, 0.25, 200, 7);
    CHECK(a.m0 == 0.0);
    CHECK(a.symmetry_max <= 1e-12);
    CHECK(a.positive);

    auto b = metric_check(6.0, 0.0, 10000, 42);
    CHECK(b.violations == 0);
    CHECK(b.pass);
    CHECK(b.n_samples == 10000);

    CHECK_THROWS_AS(metric_check(4.0, 0.25, 10, 1), DomainError);
    CHECK_THROWS_AS(metric_check(8.0, 0.0, 10, 1), DomainError);
    CHECK_THROWS_AS(metric_check(3.0, 0.0, 10, 1), DomainError);
}

TEST_CASE("metric: reflection of m at a fixed t") {
    // m(t) = |1 - n(x)/n(x+it)|^{1/2}; n(x - it) = conj n(x + it)
    double x = 5.0, t = 3.7;
    cplx nx = xicore::n_fn(x, 0.25);
    double mp = std::sqrt(std::abs(1.0 - nx / xicore::n_fn(cplx(x, t), 0.25)));
    double mm = std::sqrt(std::abs(1.0 - nx / xicore::n_fn(cplx(x, -t), 0.25)));
    CHECK(std::fabs(mp - mm) <= 1e-12);
}

TEST_CASE("kummer residuals at seeded points") {
    auto k = kummer_scan(20, 42);
    CHECK(k.count == 20);
    CHECK(k.phi_max <= 1e-6);
    CHECK(k.U_max <= 1e-6);
}

TEST_CASE("decay scan has no growth trend") {
    for (double x : {1.0, 2.5}) {
        auto r = decay_scan(x, 0.25);
        REQUIRE(r.exponent.has_value());
        CHECK(*r.exponent <= 0.05);
    }
}
