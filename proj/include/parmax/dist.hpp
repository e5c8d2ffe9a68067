#pragma once

#include <utility>

namespace parmax {

struct SeriesConfig {
    enum class TailMode { none, asymptotic };
    int K = 200;                       // direct summation stops below K
    TailMode tail_mode = TailMode::asymptotic;
    bool pairing = true;               // group k = 2j with 2j+1 in Bi-bearing sums
    bool compensated_summation = true;
};

// Throws std::invalid_argument on K < 2 or asymptotic tails with K < 200.
void validate(const SeriesConfig& cfg);

struct MomentEntry {
    double value;
    double err_est;  // absolute
};

struct MomentSet {
    MomentEntry en, em, en2, em2, var_n, var_m;
};

struct EvalPoint {
    double x;
    double g;      // G(x) = P(N > x)
    double f_n;
    double f_m;    // = 2 (1-g) f_n
    double cdf_n;  // = 1 - g
    double cdf_m;  // = cdf_n^2
};

// G(x) = Ai(2^{1/3}x)/Ai(0) + sum_k phi(k)/Ai'(a_k) Ai(a_k + 2^{1/3}x),
// clamped to [0, 1]. Absolute error <= 1e-9 on [0, 4] at defaults.
double tail_probability_G(double x, const SeriesConfig& cfg = {});

// f_N(x) = -2^{1/3} Ai'(2^{1/3}x)/Ai(0)
//          - 2^{1/3} sum_k phi(k)/Ai'(a_k) Ai'(a_k + 2^{1/3}x), x > 0.
double density_fN(double x, const SeriesConfig& cfg = {});

// f_M(x) = 2 (1 - G(x)) f_N(x).
double density_fM(double x, const SeriesConfig& cfg = {});

// x >= 0; at x = 0 the density fields carry their continuous extensions
// (f_m -> 0, f_n -> the x->0+ limit).
EvalPoint eval_point(double x, const SeriesConfig& cfg = {});

// lim_{x->0+} f_N(x) = -2^{1/3} (Ai'(0)/Ai(0) + sum_k phi(k)).
double fN_limit_at_zero(const SeriesConfig& cfg = {});

// Moment set: E N from the Gi form, E M from its Bi/phi^2 form, E N^2 and
// E M^2 from their series (E M^2 includes the j < k double sum). Tail
// handling per cfg.tail_mode.
MomentSet moments(const SeriesConfig& cfg = {});

// (E N, E M) from the conditionally convergent hitting-time sums
// 2^{-1/3} pi^2 sum Hi(a_k)(Hi(a_k) - Bi(a_k)) and
// 2^{-1/3} pi^2 sum Hi(a_k)(Hi(a_k) - 2 Bi(a_k)).
// Pair grouping is forced; target accuracy 1e-3 only.
std::pair<double, double> mean_via_tmean(const SeriesConfig& cfg = {});

// (integral of G^2 by quadrature, 2^{-1/3} pi^2 sum Hi(a_k)^2 with tail).
std::pair<double, double> gparseval_check(const SeriesConfig& cfg = {});

// Diagnostic counter for [0,1]/nonnegativity clamp events.
long clamp_event_count();
void reset_clamp_event_count();

}
