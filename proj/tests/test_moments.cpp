#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parmax/dist.hpp"
#include "parmax/quadrature.hpp"

using namespace parmax;

TEST_CASE("frozen moment values at the default configuration") {
    MomentSet ms = moments();
    CHECK(std::fabs(ms.en.value - 0.695528999522347) <= 1e-10);
    CHECK(std::fabs(ms.em.value - 0.9961930199283628) <= 1e-10);
    CHECK(std::fabs(ms.en2.value - 0.7966334517174053) <= 1e-9);
    CHECK(std::fabs(ms.em2.value - 1.3258225695989794) <= 1e-9);
    CHECK(std::fabs(ms.var_n.value - 0.3128728625408483) <= 1e-9);
    CHECK(std::fabs(ms.var_m.value - 0.3334220366449878) <= 1e-9);
}

TEST_CASE("variance assembly is consistent") {
    MomentSet ms = moments();
    CHECK(std::fabs(ms.var_n.value -
                    (ms.en2.value - ms.en.value * ms.en.value)) <= 1e-15);
    CHECK(std::fabs(ms.var_m.value -
                    (ms.em2.value - ms.em.value * ms.em.value)) <= 1e-15);
}

TEST_CASE("series moments match direct density quadrature") {
    MomentSet ms = moments();
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    auto momk = [&qs](int k, bool paired) {
        return integrate(
                   [k, paired](double x) {
                       double f = paired ? density_fM(x) : density_fN(x);
                       for (int j = 0; j < k; ++j) f *= x;
                       return f;
                   },
                   1e-12, 8.0, qs)
            .value;
    };
    CHECK(std::fabs(momk(0, false) - 1.0) <= 1e-8);
    CHECK(std::fabs(momk(0, true) - 1.0) <= 1e-8);
    CHECK(std::fabs(momk(1, false) - ms.en.value) <= 1e-8);
    CHECK(std::fabs(momk(1, true) - ms.em.value) <= 1e-8);
    CHECK(std::fabs(momk(2, false) - ms.en2.value) <= 1e-8);
    CHECK(std::fabs(momk(2, true) - ms.em2.value) <= 2e-8);
}

TEST_CASE("error estimates cover the cross-route gaps") {
    MomentSet ms = moments();
    QuadratureSpec qs;
    qs.abs_tol = 1e-11;
    double en_q =
        integrate([](double x) { return x * density_fN(x); }, 1e-12, 8.0, qs)
            .value;
    CHECK(std::fabs(ms.en.value - en_q) <= ms.en.err_est + 1e-9);
    CHECK(ms.en.err_est <= 1e-8);
    CHECK(ms.em2.err_est <= 1e-8);
}

TEST_CASE("truncated mode stays inside its own error estimate") {
    SeriesConfig rough;
    rough.K = 2000;
    rough.tail_mode = SeriesConfig::TailMode::none;
    MomentSet base = moments();
    MomentSet cut = moments(rough);
    CHECK(std::fabs(cut.en.value - base.en.value) <= cut.en.err_est);
    CHECK(std::fabs(cut.em2.value - base.em2.value) <= cut.em2.err_est);
    // dropping the tail correction must widen the reported uncertainty
    CHECK(cut.en.err_est > base.en.err_est);
}

TEST_CASE("pair grouping of the alternating sums is optional") {
    SeriesConfig flat;
    flat.pairing = false;
    MomentSet a = moments(flat);
    MomentSet b = moments();
    CHECK(std::fabs(a.en.value - b.en.value) <= 1e-9);
    CHECK(std::fabs(a.em.value - b.em.value) <= 1e-9);
    CHECK(std::fabs(a.en2.value - b.en2.value) <= 1e-9);
    CHECK(std::fabs(a.em2.value - b.em2.value) <= 1e-9);
}

TEST_CASE("larger direct window keeps the values stable") {
    SeriesConfig wide;
    wide.K = 1000;
    MomentSet a = moments(wide);
    MomentSet b = moments();
    CHECK(std::fabs(a.en.value - b.en.value) <= 1e-9);
    CHECK(std::fabs(a.em2.value - b.em2.value) <= 1e-8);
}
