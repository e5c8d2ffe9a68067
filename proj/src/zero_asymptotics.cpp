#include "parmax/zero_asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "parmax/scorer.hpp"

namespace parmax {
namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double inv_sqrt_pi = 0.56418958354775628695;

// u_k from the Airy asymptotic series, v_k = u_k (6k+1)/(1-6k)
constexpr double u1 = 5.0 / 72.0;
constexpr double u2 = 385.0 / 10368.0;
constexpr double u3 = 85085.0 / 2239488.0;
constexpr double u4 = 37182145.0 / 644972544.0;
constexpr double u5 = 5391411025.0 / 46438023168.0;
constexpr double v1 = -7.0 / 72.0;           // u1 * 7/(-5)
constexpr double v2 = u2 * 13.0 / (-11.0);
constexpr double v3 = u3 * 19.0 / (-17.0);
constexpr double v4 = u4 * 25.0 / (-23.0);
constexpr double v5 = u5 * 31.0 / (-29.0);

}  // namespace

NegAxisAiry airy_negative_asym(double y) {
    if (!(y > 0)) throw std::domain_error("airy_negative_asym: need y > 0");
    double xi = (2.0 / 3.0) * y * std::sqrt(y);
    double w = xi + 0.25 * pi;
    double s = std::sin(w);
    double c = std::cos(w);
    double iz = 1.0 / xi;
    double iz2 = iz * iz;
    // cos-coefficient sums use the even-index terms, sin-coefficient sums the
    // odd-index terms, with alternating signs
    double even_u = 1.0 - u2 * iz2 + u4 * iz2 * iz2;
    double odd_u = iz * (u1 - u3 * iz2 + u5 * iz2 * iz2);
    double even_v = 1.0 - v2 * iz2 + v4 * iz2 * iz2;
    double odd_v = iz * (v1 - v3 * iz2 + v5 * iz2 * iz2);
    double q = std::sqrt(std::sqrt(y));
    NegAxisAiry r;
    r.ai = inv_sqrt_pi / q * (s * even_u - c * odd_u);
    r.aip = -inv_sqrt_pi * q * (c * even_v + s * odd_v);
    return r;
}

double zero_closed_form(int k) {
    double t = 3.0 * pi * (4.0 * k - 1.0) / 8.0;
    double u = 1.0 / (t * t);
    double corr =
        1.0 +
        u * (5.0 / 48.0 +
             u * (-5.0 / 36.0 +
                  u * (77125.0 / 82944.0 + u * (-108056875.0 / 6967296.0))));
    return -std::cbrt(t * t) * corr;
}

TailZero tail_zero(int k) {
    TailZero z;
    z.a = zero_closed_form(k);
    z.aip = airy_negative_asym(-z.a).aip;
    z.bi = -1.0 / (pi * z.aip);
    z.phi = phi_asymptotic(z.a);
    z.hi = (z.phi - 1.0 / z.a) / pi;
    return z;
}

const TailZero& tail_zero_cached(int k) {
    if (k < 1) throw std::domain_error("tail_zero_cached: need k >= 1");
    static std::vector<TailZero> tab;
    if (k > int(tab.size())) {
        int grow = std::max(k, int(tab.size()) + 4096);
        tab.reserve(grow);
        for (int j = int(tab.size()) + 1; j <= grow; ++j)
            tab.push_back(tail_zero(j));
    }
    return tab[k - 1];
}

double power_tail_sum(double p, double kstart) {
    double kp = std::pow(kstart, -p);
    return kp * kstart / (p - 1.0) + 0.5 * kp + (p / 12.0) * kp / kstart;
}

}
