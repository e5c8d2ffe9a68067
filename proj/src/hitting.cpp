#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/airy.hpp>

#include "parmax/airy.hpp"
#include "parmax/hitting.hpp"
#include "parmax/quadrature.hpp"
#include "parmax/summation.hpp"
#include "parmax/zero_asymptotics.hpp"
#include "parmax/zeros.hpp"

namespace parmax {
namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double split = 5e-3;        // series/analytic changeover in t
constexpr double exp_floor = -46.0;   // e^{-46} ~ 1e-20 ends the series
constexpr int weight_cap = 200000;    // series depth; residual ~1e-17 at split

double inv_c3() { return std::pow(2.0, -1.0 / 3.0); }

double shifted_ai(double arg) {
    if (arg <= -25.0) return airy_negative_asym(-arg).ai;
    return boost::math::airy_ai(arg);
}

// First-passage density of drifting Brownian motion across the moving
// barrier, exact for short times up to the curvature correction.
double analytic_f(double x, double t) {
    return x / std::sqrt(2.0 * pi * t * t * t) *
           std::exp(-x * x / (2.0 * t) - 0.5 * x * t - t * t * t / 8.0);
}

double analytic_h(double x, double t) {
    return x / std::sqrt(2.0 * pi * t * t * t) *
           std::exp(-x * x / (2.0 * t) - 0.5 * x * t + t * t * t / 24.0);
}

}  // namespace

HittingEval::HittingEval(double x, const SeriesConfig& cfg) : x_(x) {
    validate(cfg);
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("HittingEval: barrier must be positive");
    const auto& tab = zero_table(weight_cap);
    w_.resize(weight_cap);
    a_.resize(weight_cap);
    double shift = cbrt2 * x;
    for (int k = 0; k < weight_cap; ++k) {
        const ZeroRecord& r = tab[k];
        a_[k] = r.a;
        w_[k] = shifted_ai(r.a + shift) / r.aip;
    }
}

double HittingEval::series_h(double t) const {
    double rate = inv_c3() * t;
    Accumulator acc;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        double e = rate * a_[k];
        if (e < exp_floor) break;
        acc.add(std::exp(e) * w_[k]);
    }
    return inv_c3() * acc.value();
}

double HittingEval::density(double t) const {
    if (!std::isfinite(t) || t < 0.0)
        throw std::domain_error("HittingEval::density: t must be >= 0");
    if (t < 1e-8) return 0.0;
    if (t < split) return analytic_f(x_, t);
    double v = std::exp(-t * t * t / 6.0) * series_h(t);
    return v < 0.0 ? 0.0 : v;
}

double HittingEval::h(double t) const {
    if (!std::isfinite(t) || t < 0.0)
        throw std::domain_error("HittingEval::h: t must be >= 0");
    if (t < 1e-8) return 0.0;
    if (t < split) return analytic_h(x_, t);
    double v = series_h(t);
    return v < 0.0 ? 0.0 : v;
}

double hitting_density(double x, double t, const SeriesConfig& cfg) {
    return HittingEval(x, cfg).density(t);
}

double hitting_defect_integral(double x, const SeriesConfig& cfg) {
    HittingEval ev(x, cfg);
    QuadratureSpec qs;
    qs.abs_tol = 1e-10;
    qs.rel_tol = 1e-9;
    qs.tail_bound = 1e-15;  // e^{-T^3/6} at T = 16 is far below this
    auto f = [&ev](double t) { return ev.density(t); };
    return integrate(f, 0.0, 16.0, qs).value;
}

double hitting_laplace(double x, double z, const SeriesConfig& cfg) {
    if (!std::isfinite(z) || z < 0.0)
        throw std::domain_error("hitting_laplace: z must be >= 0");
    HittingEval ev(x, cfg);
    double rate = inv_c3() * (-airy_zero(1).a) + z;
    double T = 40.0 / rate;
    QuadratureSpec qs;
    qs.abs_tol = 1e-12;
    qs.rel_tol = 1e-10;
    qs.tail_bound = 1e-15;
    auto f = [&ev, z](double t) { return ev.h(t) * std::exp(-z * t); };
    return integrate(f, 0.0, T, qs).value;
}

double hitting_laplace_reference(double x, double z) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("hitting_laplace_reference: x must be > 0");
    if (!std::isfinite(z) || z < 0.0)
        throw std::domain_error("hitting_laplace_reference: z must be >= 0");
    return boost::math::airy_ai(cbrt2 * (z + x)) / boost::math::airy_ai(cbrt2 * z);
}

}
