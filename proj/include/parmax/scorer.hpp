#pragma once

namespace parmax {

// Hi(x) = pi^{-1} int_0^inf exp(-t^3/3 + x t) dt, nonpositive axis only.
// Quadrature of the defining integral above the crossover, asymptotic series
// below it. Absolute accuracy 1e-13.
double scorer_hi(double x);

// Gi(x) = Bi(x) - Hi(x) on the same domain.
double scorer_gi(double x);

// phi(k) = pi*Hi(a_k) + 1/a_k, evaluated without cancellation:
// integral route  int_0^inf (e^{-t^3/3} - 1) e^{a_k t} dt  for small k,
// asymptotic tail -sum_{l>=1} (3l)!/(3^l l!) a_k^{-3l-1}   for large k.
double phi_of_k(int k, double a_k);

// Both routes exposed for crossover-consistency checks.
double phi_integral(double a);
double phi_asymptotic(double a);
double scorer_hi_quadrature(double x);
double scorer_hi_asymptotic(double x);

}
