#include "parmax/airy.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <stdexcept>

#include "parmax/quadrature.hpp"

namespace parmax {
namespace {

constexpr double domain_limit = 1e4;
constexpr double sqrt_pi = 1.7724538509055160273;

// Scaled asymptotic series for x above this use fewer than 10 terms to reach
// machine precision; below it the unscaled product route is exactly
// representable.
constexpr double scaled_series_cut = 60.0;

bool bi_would_overflow(double x) {
    return x > 0 && (2.0 / 3.0) * x * std::sqrt(x) > 708.0;
}

// u_k, v_k from the standard large-argument expansions:
//   Ai(x)  ~  e^{-zeta}/(2 sqrt(pi) x^{1/4}) * sum (-1)^k u_k zeta^{-k}
//   Bi(x)  ~  e^{+zeta}/(  sqrt(pi) x^{1/4}) * sum        u_k zeta^{-k}
//   Ai'(x) ~ -x^{1/4} e^{-zeta}/(2 sqrt(pi)) * sum (-1)^k v_k zeta^{-k}
//   Bi'(x) ~  x^{1/4} e^{+zeta}/(  sqrt(pi)) * sum        v_k zeta^{-k}
// u_0 = v_0 = 1, u_{k+1}/u_k = (6k+1)(6k+3)(6k+5)/(216 (k+1)(2k+1)),
// v_k = u_k (6k+1)/(1-6k).
void asym_sums(double zeta, double& s_ai, double& s_bi, double& s_aip,
               double& s_bip) {
    s_ai = 1.0;
    s_bi = 1.0;
    s_aip = 1.0;
    s_bip = 1.0;
    double u = 1.0;
    double invz = 1.0 / zeta;
    double zpow = 1.0;
    double prev = 1e300;
    for (int k = 0; k < 60; ++k) {
        double kk = k;
        u *= (6 * kk + 1) * (6 * kk + 3) * (6 * kk + 5) /
             (216.0 * (kk + 1) * (2 * kk + 1));
        zpow *= invz;
        double tu = u * zpow;
        if (std::fabs(tu) > prev) break;
        prev = std::fabs(tu);
        double tv = tu * (6 * (kk + 1) + 1) / (1 - 6 * (kk + 1));
        double sgn = ((k + 1) % 2 == 0) ? 1.0 : -1.0;
        s_ai += sgn * tu;
        s_bi += tu;
        s_aip += sgn * tv;
        s_bip += tv;
        if (std::fabs(tu) < 1e-18) break;
    }
}

ScaledAiryValues scaled_by_series(double x) {
    double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double s_ai, s_bi, s_aip, s_bip;
    asym_sums(zeta, s_ai, s_bi, s_aip, s_bip);
    double q = std::pow(x, 0.25);
    ScaledAiryValues r;
    r.x = x;
    r.ai_scaled = s_ai / (2.0 * sqrt_pi * q);
    r.bi_scaled = s_bi / (sqrt_pi * q);
    r.aip_scaled = -q * s_aip / (2.0 * sqrt_pi);
    r.bip_scaled = q * s_bip / sqrt_pi;
    return r;
}

}  // namespace

AiryValues airy_eval(double x) {
    if (!std::isfinite(x)) throw std::domain_error("airy_eval: non-finite x");
    if (std::fabs(x) > domain_limit)
        throw std::domain_error("airy_eval: |x| > 1e4");
    if (bi_would_overflow(x))
        throw std::overflow_error(
            "airy_eval: Bi overflow, use airy_eval_scaled");
    AiryValues v;
    v.x = x;
    v.ai = boost::math::airy_ai(x);
    v.bi = boost::math::airy_bi(x);
    v.aip = boost::math::airy_ai_prime(x);
    v.bip = boost::math::airy_bi_prime(x);
    return v;
}

ScaledAiryValues airy_eval_scaled(double x) {
    if (!std::isfinite(x) || x < 0)
        throw std::domain_error("airy_eval_scaled: need x >= 0");
    if (x > domain_limit) throw std::domain_error("airy_eval_scaled: x > 1e4");
    if (x <= scaled_series_cut) {
        double zeta = (2.0 / 3.0) * x * std::sqrt(x);
        double ez = std::exp(zeta);
        AiryValues v = airy_eval(x);
        ScaledAiryValues r;
        r.x = x;
        r.ai_scaled = v.ai * ez;
        r.bi_scaled = v.bi / ez;
        r.aip_scaled = v.aip * ez;
        r.bip_scaled = v.bip / ez;
        return r;
    }
    return scaled_by_series(x);
}

double ai_primitive(double x) {
    if (!std::isfinite(x)) throw std::domain_error("ai_primitive: non-finite");
    if (x == 0.0) return 1.0 / 3.0;
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-12;
    auto f = [](double t) { return boost::math::airy_ai(t); };
    double lo = std::min(0.0, x);
    double hi = std::max(0.0, x);
    QuadResult q = integrate(f, lo, hi, spec);
    double integral = (x > 0) ? q.value : -q.value;
    return 1.0 / 3.0 - integral;
}

}
