#pragma once

namespace parmax {

struct AiryValues {
    double x;
    double ai;
    double bi;
    double aip;
    double bip;
};

// Values premultiplied by e^{+zeta} (Ai side) / e^{-zeta} (Bi side),
// zeta = (2/3) x^{3/2}. Finite for all x in [0, 1e4].
struct ScaledAiryValues {
    double x;
    double ai_scaled;
    double bi_scaled;
    double aip_scaled;
    double bip_scaled;
};

inline constexpr double ai_zero_arg = 0.35502805388781723926;    // Ai(0)
inline constexpr double aip_zero_arg = -0.25881940379280679840;  // Ai'(0)
inline constexpr double cbrt2 = 1.2599210498948731648;           // 2^{1/3}

// |x| <= 1e4. Throws std::domain_error on non-finite or out-of-range input,
// std::overflow_error when Bi(x) would overflow (use airy_eval_scaled).
AiryValues airy_eval(double x);

// x >= 0, up to 1e4.
ScaledAiryValues airy_eval_scaled(double x);

// AI(x) = int_x^inf Ai(t) dt = 1/3 - int_0^x Ai(t) dt, for x in [-50, 50].
double ai_primitive(double x);

}
