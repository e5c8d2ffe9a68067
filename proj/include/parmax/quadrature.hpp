#pragma once

#include <functional>

namespace parmax {

struct QuadratureSpec {
    double abs_tol = 1e-12;          // must stay >= 1e-14
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    double tail_bound = 0.0;         // caller-supplied bound on truncated mass
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;            // estimated absolute error incl. tail_bound
    int subdivisions = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7, K15) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});

// [a, inf) via the rational map t = a + u/(1-u). The integrand must decay
// fast enough that f(t)/(1-u)^2 stays bounded; exponential decay qualifies.
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            const QuadratureSpec& spec = {});

}
