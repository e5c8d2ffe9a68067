#pragma once

namespace parmax {

// Signed Ai(-y), Ai'(-y) from the standard oscillatory expansions on the
// negative axis. Machine-accurate for y >= 25 (relative to the envelope).
struct NegAxisAiry {
    double ai;
    double aip;
};
NegAxisAiry airy_negative_asym(double y);

// k-th Ai zero from the closed-form expansion in t = 3 pi (4k - 1)/8.
// Machine-accurate for k >= 150 (and used as the Newton seed everywhere).
double zero_closed_form(int k);

// Tail record built entirely from expansions, no special-function calls:
// a and aip from the closed forms above, bi = -1/(pi aip), phi from its
// asymptotic series, hi = (phi - 1/a)/pi.
struct TailZero {
    double a;
    double aip;
    double bi;
    double phi;
    double hi;
};
TailZero tail_zero(int k);

// Memoized tail_zero. The record is x-independent, so the deep tail loops in
// the density and distribution sums reuse one table instead of re-deriving
// every record per evaluation. Grows on demand, never shrinks.
const TailZero& tail_zero_cached(int k);

// Euler-Maclaurin estimate of sum_{k >= kstart} k^{-p}, p > 1.
double power_tail_sum(double p, double kstart);

}
