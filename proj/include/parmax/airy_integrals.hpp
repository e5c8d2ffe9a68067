#pragma once

#include <string>
#include <vector>

#include "parmax/quadrature.hpp"

namespace parmax {

struct IdentityReport {
    std::string name;
    double lhs;      // closed form
    double rhs;      // quadrature (or extrapolation)
    double abs_gap;
    bool pass;
};

// Real-axis integral routes for E M. All three are provably equal; they
// differ in integrand algebra and quadrature path, which makes them useful
// cross-checks. ratio: (Ai^2 + sqrt3 Ai Bi)/(Ai^2 + Bi^2); t_weighted: the
// t-weighted squared-modulus form; complex_split: Re[(1+i sqrt3) int Ai/(Ai+iBi)]
// assembled from two real quadratures.
enum class EmForm { ratio, t_weighted, complex_split };

double em_via_integral(EmForm form, const QuadratureSpec& spec = {});

// Quadrature of int e^{zt} Ai(t) dt over [-T_neg, T_pos] against e^{z^3/3},
// z > 0. Cutoffs come from the decay envelopes and spec.abs_tol;
// t_neg_override forces the oscillatory-side cutoff (0 = automatic), used to
// demonstrate the cutoff actually matters.
IdentityReport laplace_airy_check(double z, const QuadratureSpec& spec = {},
                                  double t_neg_override = 0.0);

// Closed-form integral identities for products of shifted Airy functions
// checked against direct quadrature: orthogonality and normalization over
// zero shifts k, l <= k_max, x-weighted variants, cross terms with the
// unshifted function, a general two-point case, the cubic-moment recursion,
// and the merge limit of the two-point formula.
std::vector<IdentityReport> airy_identity_suite(const QuadratureSpec& spec = {},
                                                int k_max = 4);

// sum_k a_k^{-2} with closed-form tail completion vs (Ai'(0)/Ai(0))^2.
IdentityReport parseval_sum(int k_max);

}
