#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parmax/quadrature.hpp"

using namespace parmax;

TEST_CASE("exponential on the half line") {
    QuadResult r = integrate_to_inf([](double t) { return std::exp(-t); }, 0.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 1.0) <= 1e-12);
    CHECK(std::fabs(r.value - 1.0) <= r.err_est + 5e-15);
}

TEST_CASE("gamma-type integrand with cube decay") {
    // int_0^inf t exp(-t^3/3) dt = Gamma(2/3) / 3^{1/3}
    double ref = std::tgamma(2.0 / 3.0) / std::cbrt(3.0);
    QuadResult r = integrate_to_inf(
        [](double t) { return t * std::exp(-t * t * t / 3.0); }, 0.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - ref) <= 1e-12);
}

TEST_CASE("finite interval polynomial is exact") {
    QuadResult r = integrate([](double x) { return x * x * x - 2.0 * x; },
                             -1.0, 3.0);
    CHECK(std::fabs(r.value - 12.0) <= 1e-12);
    CHECK(r.converged);
}

TEST_CASE("adaptive refinement resolves a sharp peak") {
    // int_0^1 dx / sqrt(x + 1e-6)
    double ref = 2.0 * (std::sqrt(1.0 + 1e-6) - 1e-3);
    QuadResult r =
        integrate([](double x) { return 1.0 / std::sqrt(x + 1e-6); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.subdivisions > 1);
    CHECK(std::fabs(r.value - ref) <= 1e-10);
}

TEST_CASE("oscillatory integrand with a zero total") {
    QuadResult r = integrate([](double x) { return std::sin(x); }, 0.0,
                             10.0 * 3.14159265358979323846);
    CHECK(std::fabs(r.value) <= 1e-11);
}

TEST_CASE("error estimate covers the true error") {
    QuadResult r = integrate_to_inf(
        [](double t) { return std::exp(-0.5 * t) * std::cos(3.0 * t); }, 0.0);
    // closed form a/(a^2+b^2) with a = 1/2, b = 3
    double ref = 0.5 / (0.25 + 9.0);
    CHECK(std::fabs(r.value - ref) <= r.err_est + 5e-15);
    CHECK(r.converged);
}

TEST_CASE("tail_bound is folded into the error estimate") {
    QuadratureSpec spec;
    spec.tail_bound = 1e-3;
    QuadResult r =
        integrate([](double x) { return std::exp(-x); }, 0.0, 5.0, spec);
    CHECK(r.err_est >= 1e-3);
}

TEST_CASE("tight budget on a hard integrand reports non-convergence") {
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-13;
    spec.max_subdivisions = 2;
    QuadResult r = integrate(
        [](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.317) + 1e-9); },
        0.0, 1.0, spec);
    CHECK(!r.converged);
    CHECK(r.err_est > spec.abs_tol);
}
