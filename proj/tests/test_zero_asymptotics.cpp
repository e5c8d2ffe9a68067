#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <stdexcept>

#include "parmax/summation.hpp"
#include "parmax/zero_asymptotics.hpp"
#include "parmax/zeros.hpp"

using namespace parmax;

TEST_CASE("closed-form zeros match the refined ones from k = 150 up") {
    for (int k : {150, 200, 500, 1000, 5000, 20000}) {
        double exact = airy_zero(k).a;
        CHECK(std::fabs(zero_closed_form(k) - exact) <=
              4e-16 * std::fabs(exact));
    }
}

TEST_CASE("negative-axis expansions track the direct evaluations") {
    for (double y : {25.0, 30.0, 50.0, 100.0, 1000.0}) {
        NegAxisAiry r = airy_negative_asym(y);
        double env = 0.5642 / std::pow(y, 0.25);
        CHECK(std::fabs(r.ai - boost::math::airy_ai(-y)) <= 1e-11 * env);
        CHECK(std::fabs(r.aip - boost::math::airy_ai_prime(-y)) <=
              1e-11 * 0.5642 * std::pow(y, 0.25));
    }
}

TEST_CASE("tail records agree with the exact ones") {
    for (int k : {200, 500, 1000, 5000}) {
        ZeroRecord r = airy_zero(k);
        TailZero t = tail_zero(k);
        CHECK(std::fabs(t.a - r.a) <= 1e-15 * std::fabs(r.a));
        CHECK(std::fabs(t.aip / r.aip - 1.0) <= 5e-15);
        CHECK(std::fabs(t.phi / r.phi - 1.0) <= 5e-15);
        CHECK(std::fabs(t.bi / r.bi - 1.0) <= 5e-15);
        CHECK(std::fabs(t.hi / r.hi - 1.0) <= 5e-15);
    }
}

TEST_CASE("tail record internal identities") {
    constexpr double pi = 3.14159265358979323846;
    for (int k : {200, 1000, 40000}) {
        TailZero t = tail_zero(k);
        CHECK(std::fabs(t.bi * (pi * t.aip) + 1.0) <= 1e-14);
        CHECK(std::fabs((t.phi - 1.0 / t.a) / pi - t.hi) <= 1e-15);
    }
}

TEST_CASE("memoized records reproduce the direct ones") {
    for (int k : {1, 17, 200, 6951, 41000}) {
        TailZero direct = tail_zero(k);
        TailZero cached = tail_zero_cached(k);
        CHECK(cached.a == direct.a);
        CHECK(cached.aip == direct.aip);
        CHECK(cached.bi == direct.bi);
        CHECK(cached.phi == direct.phi);
        CHECK(cached.hi == direct.hi);
    }
    CHECK_THROWS_AS(tail_zero_cached(0), std::domain_error);
}

TEST_CASE("power tail estimate against direct summation") {
    for (double p : {3.0, 8.0 / 3.0, 10.0 / 3.0}) {
        Accumulator direct;
        for (int k = 3000000; k >= 100; --k)
            direct.add(std::pow(double(k), -p));
        // close the far end with the midpoint-corrected integral
        double far = std::pow(3000000.5, 1.0 - p) / (p - 1.0);
        double ref = direct.value() + far;
        CHECK(std::fabs(power_tail_sum(p, 100.0) - ref) <= 1e-11);
    }
}

TEST_CASE("power tail estimate at a close-in start") {
    Accumulator direct;
    for (int k = 3000000; k >= 20; --k) direct.add(std::pow(double(k), -3.0));
    double ref = direct.value() + std::pow(3000000.5, -2.0) / 2.0;
    // truncating the Euler-Maclaurin series after the B2 term costs ~1.3e-9
    CHECK(std::fabs(power_tail_sum(3.0, 20.0) - ref) <= 3e-9);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(airy_negative_asym(0.0), std::domain_error);
    CHECK_THROWS_AS(airy_negative_asym(-2.0), std::domain_error);
}
