#pragma once

#include "parmax/dist.hpp"

#include <vector>

namespace parmax {

// Series evaluator for the hitting-time density at fixed barrier x > 0:
//   f_tau(t) = 2^{-1/3} sum_k e^{2^{-1/3} a_k t - t^3/6} Ai(a_k + 2^{1/3}x)/Ai'(a_k)
// with the analytic short-time form below the series/analytic split.
// Weights are cached per instance, so grids over t are cheap.
class HittingEval {
public:
    HittingEval(double x, const SeriesConfig& cfg = {});
    double density(double t) const;  // f_tau(t), clamped nonnegative
    double h(double t) const;        // e^{t^3/6} f_tau(t), no damping factor
    double x() const { return x_; }

private:
    double series_h(double t) const;
    double x_;
    std::vector<double> a_;          // zero locations
    std::vector<double> w_;          // Ai(a_k + 2^{1/3}x)/Ai'(a_k)
};

double hitting_density(double x, double t, const SeriesConfig& cfg = {});

// int_0^inf f_tau dt; equals G(x) up to the quadrature budget.
double hitting_defect_integral(double x, const SeriesConfig& cfg = {});

// int_0^inf e^{t^3/6} f_tau(t) e^{-z t} dt, z >= 0.
double hitting_laplace(double x, double z, const SeriesConfig& cfg = {});

// Closed form Ai(2^{1/3}(z+x))/Ai(2^{1/3}z) for the identity checks.
double hitting_laplace_reference(double x, double z);

}
