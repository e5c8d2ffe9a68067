#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parmax/dist.hpp"

using namespace parmax;

TEST_CASE("conditional-mean sums land within a part in a thousand") {
    MomentSet ms = moments();
    auto tm = mean_via_tmean();
    CHECK(std::fabs(tm.first - ms.en.value) <= 1e-3);
    CHECK(std::fabs(tm.second - ms.em.value) <= 1e-3);
}

TEST_CASE("frozen values across summation horizons") {
    SeriesConfig c;
    c.K = 4001;
    auto t1 = mean_via_tmean(c);
    CHECK(std::fabs(t1.first - 6.95721458227040e-01) <= 1e-6);
    CHECK(std::fabs(t1.second - 9.96577937349553e-01) <= 1e-6);
    c.K = 10000;
    auto t2 = mean_via_tmean(c);
    CHECK(std::fabs(t2.first - 6.95618698760577e-01) <= 1e-6);
    CHECK(std::fabs(t2.second - 9.96372418406216e-01) <= 1e-6);
    c.K = 20000;
    auto t3 = mean_via_tmean(c);
    CHECK(std::fabs(t3.first - 6.95579344140101e-01) <= 1e-6);
    CHECK(std::fabs(t3.second - 9.96293709164148e-01) <= 1e-6);
}

TEST_CASE("residual shrinks with the horizon like K^{-5/6}") {
    MomentSet ms = moments();
    SeriesConfig c;
    c.K = 4001;
    double r1 = mean_via_tmean(c).first - ms.en.value;
    c.K = 20000;
    double r2 = mean_via_tmean(c).first - ms.en.value;
    CHECK(r1 > 0.0);
    CHECK(r2 > 0.0);
    double ratio = r1 / r2;
    double expect = std::pow(20000.0 / 4001.0, 5.0 / 6.0);
    CHECK(ratio / expect > 0.85);
    CHECK(ratio / expect < 1.15);
}

TEST_CASE("squared tail probability integral, quadrature vs series") {
    auto gp = gparseval_check();
    CHECK(std::fabs(gp.first - gp.second) <= 1e-9);
    CHECK(std::fabs(gp.second - 0.394864979117) <= 1e-9);
}

TEST_CASE("mean identity em = 2 en - int G^2") {
    MomentSet ms = moments();
    auto gp = gparseval_check();
    CHECK(std::fabs(ms.em.value - (2.0 * ms.en.value - gp.second)) <= 1e-9);
}
