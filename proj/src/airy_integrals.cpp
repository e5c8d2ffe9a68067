#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/airy.hpp>

#include "parmax/airy.hpp"
#include "parmax/airy_integrals.hpp"
#include "parmax/summation.hpp"
#include "parmax/zero_asymptotics.hpp"
#include "parmax/zeros.hpp"

namespace parmax {
namespace {

constexpr double sqrt3 = 1.7320508075688772935;

double ai(double x) { return boost::math::airy_ai(x); }
double aip(double x) { return boost::math::airy_ai_prime(x); }
double bi(double x) { return boost::math::airy_bi(x); }

// Ai(t)/Bi(t) without overflow: the raw ratio is ~ (1/2) e^{-(4/3) t^{3/2}}.
double ai_bi_ratio_scaled(double t) {
    ScaledAiryValues s = airy_eval_scaled(t);
    double zeta = (2.0 / 3.0) * t * std::sqrt(t);
    return s.ai_scaled / s.bi_scaled * std::exp(-2.0 * zeta);
}

double ai_bi_ratio(double t) {
    return t > 6.0 ? ai_bi_ratio_scaled(t) : ai(t) / bi(t);
}

double em_tail_cut(double abs_tol) {
    // integrands decay like e^{-(4/3) t^{3/2}}; pick T with the envelope
    // integral below abs_tol/10
    double want = std::log(100.0 / std::max(abs_tol, 1e-300));
    return std::max(11.0, std::pow(0.75 * want, 2.0 / 3.0));
}

std::string fmt_name(const char* base, double v) {
    std::ostringstream os;
    os << base << v;
    return os.str();
}

std::string fmt_name2(const char* base, int k, int l) {
    std::ostringstream os;
    os << base << " k=" << k << " l=" << l;
    return os.str();
}

IdentityReport make_report(std::string name, double lhs, double rhs,
                           double tol) {
    double gap = std::fabs(lhs - rhs);
    return {std::move(name), lhs, rhs, gap, gap <= tol};
}

double combined_tol(const QuadratureSpec& qs, double lhs) {
    return std::max(1e-11, 10.0 * qs.abs_tol + qs.rel_tol * std::fabs(lhs));
}

QuadResult run(const std::function<double(double)>& f, double a, double b,
               QuadratureSpec qs, const char* what) {
    QuadResult q = integrate(f, a, b, qs);
    if (!q.converged)
        throw std::runtime_error(std::string("quadrature did not converge: ") +
                                 what);
    return q;
}

}  // namespace

double em_via_integral(EmForm form, const QuadratureSpec& spec) {
    QuadratureSpec qs = spec;
    double T = em_tail_cut(qs.abs_tol);
    qs.tail_bound = std::exp(-(4.0 / 3.0) * T * std::sqrt(T));
    const double c = std::pow(2.0, 2.0 / 3.0);
    switch (form) {
        case EmForm::ratio: {
            auto f = [](double t) {
                double r = ai_bi_ratio(t);
                return (r * r + sqrt3 * r) / (r * r + 1.0);
            };
            return c * run(f, 0.0, T, qs, "em ratio form").value;
        }
        case EmForm::t_weighted: {
            auto f = [](double t) {
                if (t > 6.0) {
                    ScaledAiryValues s = airy_eval_scaled(t);
                    double zeta = (2.0 / 3.0) * t * std::sqrt(t);
                    double r = ai_bi_ratio_scaled(t);
                    double inv_bi2 =
                        std::exp(-2.0 * zeta) / (s.bi_scaled * s.bi_scaled);
                    double num = sqrt3 * (1.0 - r * r) + 2.0 * r;
                    double den = (1.0 + r * r) * (1.0 + r * r);
                    return t * num * inv_bi2 / den;
                }
                double A = ai(t), B = bi(t);
                double num = sqrt3 * (B * B - A * A) + 2.0 * A * B;
                double den = (A * A + B * B) * (A * A + B * B);
                return t * num / den;
            };
            constexpr double pi = 3.14159265358979323846;
            return c / pi * run(f, 0.0, T, qs, "em t-weighted form").value;
        }
        case EmForm::complex_split: {
            // int Ai/(Ai + i Bi) = R + i Q with real integrands; the result
            // is Re[(1 + i sqrt3)(R + i Q)] = R - sqrt3 Q
            auto fr = [](double t) {
                double r = ai_bi_ratio(t);
                return r * r / (1.0 + r * r);
            };
            auto fq = [](double t) {
                double r = ai_bi_ratio(t);
                return -r / (1.0 + r * r);
            };
            double R = run(fr, 0.0, T, qs, "em complex form, real part").value;
            double Q = run(fq, 0.0, T, qs, "em complex form, imag part").value;
            return c * (R - sqrt3 * Q);
        }
    }
    throw std::invalid_argument("em_via_integral: unknown form");
}

IdentityReport laplace_airy_check(double z, const QuadratureSpec& spec,
                                  double t_neg_override) {
    if (!std::isfinite(z) || z <= 0.0)
        throw std::domain_error("laplace_airy_check: z must be > 0");
    double tol_target = std::max(spec.abs_tol / 10.0, 1e-300);

    // positive side: e^{zt} Ai(t) ~ e^{zt - (2/3) t^{3/2}}
    double Tp = 10.0;
    for (int i = 0; i < 12; ++i)
        Tp = std::pow(1.5 * (std::log(1.0 / tol_target) + z * Tp), 2.0 / 3.0);
    // oscillatory side: |Ai(-x)| = O(x^{-1/4}), envelope e^{-zx}
    double Tn = (std::log(1.0 / tol_target) + 2.0) / z;
    if (t_neg_override > 0.0) Tn = t_neg_override;

    auto f = [z](double t) { return std::exp(z * t) * ai(t); };
    QuadratureSpec qs = spec;
    qs.tail_bound =
        0.6 * std::pow(Tn, -0.25) * std::exp(-z * Tn) / z + tol_target;
    QuadResult qneg = run(f, -Tn, 0.0, qs, "exp-weighted transform, t < 0");
    qs.tail_bound = tol_target;
    QuadResult qpos = run(f, 0.0, Tp, qs, "exp-weighted transform, t > 0");

    double lhs = std::exp(z * z * z / 3.0);
    double rhs = qneg.value + qpos.value;
    return make_report(fmt_name("exp_weighted_transform z=", z), lhs, rhs,
                       combined_tol(spec, lhs));
}

std::vector<IdentityReport> airy_identity_suite(const QuadratureSpec& spec,
                                                int k_max) {
    if (k_max < 2 || k_max > 50)
        throw std::invalid_argument("airy_identity_suite: need 2 <= k_max <= 50");
    const auto& tab = zero_table(k_max);
    std::vector<IdentityReport> out;

    auto cut = [&](int k, int l) { return -tab[std::max(k, l) - 1].a + 12.0; };
    QuadratureSpec qs = spec;
    qs.tail_bound = 1e-14;

    for (int k = 1; k <= k_max; ++k) {
        double ak = tab[k - 1].a;
        double akp = tab[k - 1].aip;

        auto sq = [ak](double x) {
            double v = ai(x + ak);
            return v * v;
        };
        double rhs = run(sq, 0.0, cut(k, k), qs, "normalization").value;
        out.push_back(make_report(fmt_name("normalization k=", k), akp * akp,
                                  rhs, combined_tol(spec, akp * akp)));

        auto xsq = [ak](double x) {
            double v = ai(x + ak);
            return x * v * v;
        };
        double lhs = -(2.0 / 3.0) * ak * akp * akp;
        rhs = run(xsq, 0.0, cut(k, k), qs, "x-weight normalization").value;
        out.push_back(make_report(fmt_name("x_weight k=", k), lhs, rhs,
                                  combined_tol(spec, lhs)));

        auto cross = [ak](double x) { return ai(x) * ai(x + ak); };
        lhs = -ai_zero_arg * akp / ak;
        rhs = run(cross, 0.0, cut(k, k), qs, "cross term at zero shift").value;
        out.push_back(make_report(fmt_name("cross_zero k=", k), lhs, rhs,
                                  combined_tol(spec, lhs)));

        auto xcross = [ak](double x) { return x * ai(x) * ai(x + ak); };
        lhs = -2.0 * aip_zero_arg * akp / (ak * ak) -
              2.0 * ai_zero_arg * akp / (ak * ak * ak);
        rhs = run(xcross, 0.0, cut(k, k), qs, "x-weighted cross term").value;
        out.push_back(make_report(fmt_name("cross_zero_x_weight k=", k), lhs,
                                  rhs, combined_tol(spec, lhs)));

        for (int l = 1; l < k; ++l) {
            double al = tab[l - 1].a;
            double alp = tab[l - 1].aip;
            auto orth = [ak, al](double x) { return ai(x + ak) * ai(x + al); };
            rhs = run(orth, 0.0, cut(k, l), qs, "orthogonality").value;
            out.push_back(make_report(fmt_name2("orthogonality", k, l), 0.0,
                                      rhs, combined_tol(spec, 0.0)));

            auto xorth = [ak, al](double x) {
                return x * ai(x + ak) * ai(x + al);
            };
            double d = ak - al;
            lhs = -2.0 * akp * alp / (d * d);
            rhs = run(xorth, 0.0, cut(k, l), qs, "x-weighted two-zero").value;
            out.push_back(make_report(fmt_name2("two_zero_x_weight", k, l),
                                      lhs, rhs, combined_tol(spec, lhs)));
        }
    }

    {
        // general two-point formula away from the zeros
        double a = 0.3, b = -1.1;
        auto f = [a, b](double x) { return ai(x + a) * ai(x + b); };
        double lhs = (ai(a) * aip(b) - aip(a) * ai(b)) / (a - b);
        double rhs = run(f, 0.0, 14.0, qs, "general two-point").value;
        out.push_back(make_report("two_point a=0.3 b=-1.1", lhs, rhs,
                                  combined_tol(spec, lhs)));
    }

    {
        // merge limit of the two-point formula: no quadrature, Richardson
        // extrapolation of the a != b closed form onto the diagonal
        double b = -1.1;
        auto Q = [](double u, double v) {
            return (ai(u) * aip(v) - aip(u) * ai(v)) / (u - v);
        };
        auto sym = [&](double eps) {
            return 0.5 * (Q(b + eps, b) + Q(b - eps, b));
        };
        double e = 1e-4;
        double rhs = (4.0 * sym(e / 2.0) - sym(e)) / 3.0;
        double lhs = aip(b) * aip(b) - b * ai(b) * ai(b);
        out.push_back(
            make_report("two_point_merge_limit b=-1.1", lhs, rhs, 1e-10));
    }

    {
        // cubic moment over (a_1, oo) via the power-weight recursion
        double a1 = tab[0].a, a1p = tab[0].aip;
        auto f = [](double x) {
            double v = ai(x);
            return x * x * x * v * v;
        };
        double lhs = a1p * a1p * (a1 * a1 * a1 + 3.0) / 7.0;
        double rhs = run(f, a1, 12.0, qs, "cubic moment recursion").value;
        out.push_back(make_report("cubic_moment_recursion k=1", lhs, rhs,
                                  combined_tol(spec, lhs)));
    }

    for (int k = 1; k <= std::min(k_max, 2); ++k) {
        // first moment of a single shifted function, needs the primitive
        double ak = tab[k - 1].a, akp = tab[k - 1].aip;
        auto f = [ak](double x) { return x * ai(x + ak); };
        double lhs = -akp - ak * ai_primitive(ak);
        double rhs = run(f, 0.0, cut(k, k), qs, "single-function x weight").value;
        out.push_back(make_report(fmt_name("x_weight_single k=", k), lhs, rhs,
                                  combined_tol(spec, lhs)));
    }

    return out;
}

IdentityReport parseval_sum(int k_max) {
    if (k_max < 1 || k_max > 200000)
        throw std::invalid_argument("parseval_sum: need 1 <= k_max <= 200000");
    const auto& tab = zero_table(k_max);
    Accumulator s;
    for (int k = 1; k <= k_max; ++k) s.add(1.0 / (tab[k - 1].a * tab[k - 1].a));

    // tail: explicit closed-form zeros out to the horizon, then an
    // Euler-Maclaurin remainder in u = k - 1/4, the natural variable of
    // the zero asymptotics (terms decay like u^{-4/3})
    int J = std::max(20000, k_max + 1);
    const auto& small = zero_table(std::min(k_max + 160, 200000));
    Accumulator t;
    for (int k = k_max + 1; k < J; ++k) {
        double a = k <= int(small.size()) ? small[k - 1].a
                                          : zero_closed_form(k);
        t.add(1.0 / (a * a));
    }
    double aJ = zero_closed_form(J);
    double fJ = 1.0 / (aJ * aJ);
    double u = J - 0.25;
    t.add(fJ * (u * 3.0 + 0.5 + (1.0 / 9.0) / u));

    double lhs = (aip_zero_arg / ai_zero_arg) * (aip_zero_arg / ai_zero_arg);
    double rhs = s.value() + t.value();
    double gap = std::fabs(lhs - rhs);
    return {"zero_reciprocal_square_sum", lhs, rhs, gap, gap <= 1e-9};
}

}
