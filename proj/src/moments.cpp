#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <utility>

#include "parmax/airy.hpp"
#include "parmax/dist.hpp"
#include "parmax/quadrature.hpp"
#include "parmax/summation.hpp"
#include "parmax/zero_asymptotics.hpp"
#include "parmax/zeros.hpp"

namespace parmax {
namespace {

constexpr double pi = 3.14159265358979323846;
constexpr int tail_horizon = 20000;  // closed-form tail terms run K..horizon
constexpr int dbl_depth = 3000;      // double sum depth, remainder < 1e-13

// Monotone tail sum_{k >= K} f(k) where f decays like k^{-p}: explicit terms
// out to the horizon, then a self-calibrating Euler-Maclaurin remainder
// built from the last computed term.
template <class F>
double monotone_tail(int K, double p, F&& f) {
    int J = std::max(K, tail_horizon);
    Accumulator acc;
    for (int k = K; k < J; ++k) acc.add(f(k));
    double fj = f(J);
    acc.add(fj * (J / (p - 1.0) + 0.5 + p / (12.0 * J)));
    return acc.value();
}

// Alternating tail sum_{k >= K} f(k), consecutive signs opposite. Paired
// grouping gives one-signed pair terms decaying like k^{-q}; without pairing
// the remainder past the horizon is the Abel mean of the first omitted term.
template <class F>
double alternating_tail(int K, double q, bool pairing, F&& f) {
    int J = std::max(K, tail_horizon);
    Accumulator acc;
    if (pairing) {
        int k = K;
        double pair = 0.0;
        bool have_pair = false;
        for (; k + 1 <= J; k += 2) {
            pair = f(k) + f(k + 1);
            acc.add(pair);
            have_pair = true;
        }
        if (have_pair) {
            double j = 0.5 * k;
            acc.add(pair * (j / (q - 1.0) + 0.5));
        } else {
            acc.add(0.5 * f(k));
        }
    } else {
        for (int k = K; k < J; ++k) acc.add(f(k));
        acc.add(0.5 * f(J));
    }
    return acc.value();
}

struct Tails {
    double phi_bi = 0.0;    // sum phi(k) Bi(a_k)
    double phi_hi = 0.0;    // sum phi(k) Hi(a_k)
    double phi2 = 0.0;      // sum phi^2
    double a_phi_bi = 0.0;  // sum a_k phi Bi
    double a_phi2 = 0.0;    // sum a_k phi^2
    double emm_rest = 0.0;  // sum phi (-(2/3) a phi + 2/a^3 + 2 Ai'(0)/(Ai(0) a^2))
    double abs_bound = 0.0; // bound on everything neglected past the horizon
};

Tails asymptotic_tails(int K, bool pairing) {
    Tails t;
    t.phi_bi = alternating_tail(K, 23.0 / 6.0, pairing, [](int k) {
        const TailZero& z = tail_zero_cached(k);
        return z.phi * z.bi;
    });
    t.a_phi_bi = alternating_tail(K, 19.0 / 6.0, pairing, [](int k) {
        const TailZero& z = tail_zero_cached(k);
        return z.a * z.phi * z.bi;
    });
    t.phi_hi = monotone_tail(K, 10.0 / 3.0, [](int k) {
        const TailZero& z = tail_zero_cached(k);
        return z.phi * z.hi;
    });
    t.phi2 = monotone_tail(K, 16.0 / 3.0, [](int k) {
        const TailZero& z = tail_zero_cached(k);
        return z.phi * z.phi;
    });
    t.a_phi2 = monotone_tail(K, 14.0 / 3.0, [](int k) {
        const TailZero& z = tail_zero_cached(k);
        return z.a * z.phi * z.phi;
    });
    t.emm_rest = monotone_tail(K, 4.0, [](int k) {
        const TailZero& z = tail_zero_cached(k);
        return z.phi * (-(2.0 / 3.0) * z.a * z.phi + 2.0 / (z.a * z.a * z.a) +
                        2.0 * aip_zero_arg / (ai_zero_arg * z.a * z.a));
    });
    t.abs_bound = 1e-11;
    return t;
}

}  // namespace

MomentSet moments(const SeriesConfig& cfg) {
    validate(cfg);
    const bool comp = cfg.compensated_summation;
    const bool asym = cfg.tail_mode == SeriesConfig::TailMode::asymptotic;
    const int K = cfg.K;
    const int KD = asym ? dbl_depth : std::min(K - 1, dbl_depth);
    const int cached = std::min(std::max(K - 1, KD), 200000);
    const auto& tab = zero_table(cached);

    Accumulator s_phi_gi, s_split, s_e8, s_enn, s_emm;
    double p_phi_gi = 0, p_split = 0, p_e8 = 0, p_enn = 0, p_emm = 0;
    for (int k = 1; k < K; ++k) {
        ZeroRecord r = (k <= cached) ? tab[k - 1] : airy_zero(k);
        double t_gi = r.phi * r.gi;
        double t_split = r.phi * r.bi - r.phi * r.hi;
        double t_e8 = 2.0 * pi * r.phi * r.bi - r.phi * r.phi;
        double t_enn = pi * r.a * r.phi * r.bi - r.a * r.phi * r.phi;
        double t_emm =
            r.phi * (pi * r.a * r.bi - (2.0 / 3.0) * r.a * r.phi +
                     2.0 / (r.a * r.a * r.a) +
                     2.0 * aip_zero_arg / (ai_zero_arg * r.a * r.a));
        if (comp) {
            s_phi_gi.add(t_gi);
            s_split.add(t_split);
            s_e8.add(t_e8);
            s_enn.add(t_enn);
            s_emm.add(t_emm);
        } else {
            p_phi_gi += t_gi;
            p_split += t_split;
            p_e8 += t_e8;
            p_enn += t_enn;
            p_emm += t_emm;
        }
    }
    double S_phi_gi = comp ? s_phi_gi.value() : p_phi_gi;
    double S_split = comp ? s_split.value() : p_split;
    double S_e8 = comp ? s_e8.value() : p_e8;
    double S_enn = comp ? s_enn.value() : p_enn;
    double S_emm = comp ? s_emm.value() : p_emm;

    // the Gi route and the Bi - Hi split route are algebraically identical
    if (std::fabs(S_phi_gi - S_split) > 1e-10 * (1.0 + std::fabs(S_phi_gi)))
        throw std::logic_error("moments: Gi route vs Bi-Hi route disagree");

    // double sum over zero pairs j < k
    Accumulator dbl;
    for (int k = 2; k <= KD; ++k) {
        const ZeroRecord& rk = tab[k - 1];
        Accumulator inner;
        for (int j = 1; j < k; ++j) {
            const ZeroRecord& rj = tab[j - 1];
            double d = rk.a - rj.a;
            inner.add(rk.phi * rj.phi / (d * d));
        }
        dbl.add(inner.value());
    }
    double S_dbl = dbl.value();
    double dbl_tail_bound = 1.7e-4 * std::pow(double(KD), -3.0);

    Tails t;
    double tail_bound;
    if (asym) {
        t = asymptotic_tails(K, cfg.pairing);
        tail_bound = t.abs_bound;
    } else {
        // omitted true tails, bounded through their leading envelopes
        tail_bound = 3.7e-3 * power_tail_sum(10.0 / 3.0, double(K)) +
                     1.5e-2 * std::pow(double(K), -17.0 / 6.0) +
                     7.0e-1 * std::pow(double(K), -13.0 / 6.0);
    }

    const double c3 = cbrt2;
    double en = 1.0 / (3.0 * c3 * ai_zero_arg) -
                (pi / c3) * (S_phi_gi + t.phi_bi - t.phi_hi);
    double em = std::pow(2.0, 2.0 / 3.0) / (3.0 * ai_zero_arg) -
                aip_zero_arg * aip_zero_arg / (c3 * ai_zero_arg * ai_zero_arg) -
                (1.0 / c3) * (S_e8 + 2.0 * pi * t.phi_bi - t.phi2);
    double en2 = -c3 * aip_zero_arg / ai_zero_arg +
                 c3 * (S_enn + pi * t.a_phi_bi - t.a_phi2);
    double em2 = -c3 * 5.0 * aip_zero_arg / (3.0 * ai_zero_arg) +
                 std::pow(2.0, 4.0 / 3.0) *
                     (S_emm + pi * t.a_phi_bi + t.emm_rest) +
                 std::pow(2.0, 7.0 / 3.0) * S_dbl;

    MomentSet m;
    m.en = {en, 3.0 * tail_bound + 1e-12};
    m.em = {em, 6.0 * tail_bound + 1e-12};
    m.en2 = {en2, 30.0 * tail_bound + 3e-12};
    m.em2 = {em2, 60.0 * tail_bound + dbl_tail_bound + 5e-12};
    m.var_n = {en2 - en * en, m.en2.err_est + 2.0 * std::fabs(en) * m.en.err_est};
    m.var_m = {em2 - em * em, m.em2.err_est + 2.0 * std::fabs(em) * m.em.err_est};
    return m;
}

std::pair<double, double> mean_via_tmean(const SeriesConfig& cfg) {
    validate(cfg);
    // Conditionally convergent sums: force a deep cutoff, odd so the
    // even-first pair grouping closes, and complete the slowly decaying
    // monotone Hi^2 component in closed form.
    int Kinc = std::clamp(cfg.K, 4001, 199999);
    if (Kinc % 2 == 0) ++Kinc;
    const auto& tab = zero_table(Kinc);
    auto term1 = [&](int k) {
        const ZeroRecord& r = tab[k - 1];
        return r.hi * (r.hi - r.bi);
    };
    auto term2 = [&](int k) {
        const ZeroRecord& r = tab[k - 1];
        return r.hi * (r.hi - 2.0 * r.bi);
    };
    Accumulator a1, a2;
    a1.add(term1(1));
    a2.add(term2(1));
    for (int k = 2; k + 1 <= Kinc; k += 2) {
        a1.add(term1(k) + term1(k + 1));
        a2.add(term2(k) + term2(k + 1));
    }
    // closed-form completion of sum_{k > Kinc} Hi(a_k)^2
    double c2 = std::pow(1.5 * pi, -4.0 / 3.0) / (pi * pi);
    double kk = Kinc + 0.75;
    double completion =
        c2 * (3.0 * std::pow(kk, -1.0 / 3.0) + 0.5 * std::pow(kk, -4.0 / 3.0));
    double pref = std::pow(2.0, -1.0 / 3.0) * pi * pi;
    return {pref * (a1.value() + completion), pref * (a2.value() + completion)};
}

std::pair<double, double> gparseval_check(const SeriesConfig& cfg) {
    validate(cfg);
    QuadratureSpec qs;
    qs.abs_tol = 1e-10;
    qs.rel_tol = 1e-9;
    auto g2 = [&cfg](double x) {
        double g = tail_probability_G(x, cfg);
        return g * g;
    };
    QuadResult q = integrate(g2, 0.0, 8.0, qs);  // G(8)^2 < 1e-18

    // the summation horizon is pushed past cfg.K so the closed completion
    // below enters at full accuracy; terms only decay like k^{-4/3}
    const int Kd = std::min(std::max(cfg.K - 1, 20000), 200000);
    const auto& tab = zero_table(Kd);
    Accumulator s;
    for (int k = 1; k <= Kd; ++k) {
        const ZeroRecord& r = tab[k - 1];
        s.add(r.hi * r.hi);
    }
    // tail of sum Hi(a_k)^2 from (pi Hi)^2 = a^{-2} + 4 a^{-5} + O(a^{-8}),
    // Euler-Maclaurin in u = k - 1/4 with the zero-location correction
    // folded into the u^{-10/3} coefficient
    double c2 = std::pow(1.5 * pi, -4.0 / 3.0) / (pi * pi);
    double kk = Kd + 0.75;
    double tail = c2 * (3.0 * std::pow(kk, -1.0 / 3.0) +
                        0.5 * std::pow(kk, -4.0 / 3.0) +
                        (1.0 / 9.0) * std::pow(kk, -7.0 / 3.0));
    tail -= (4.0 + 5.0 / 24.0) * std::pow(1.5 * pi, -10.0 / 3.0) / (pi * pi) *
            power_tail_sum(10.0 / 3.0, kk);
    double pref = std::pow(2.0, -1.0 / 3.0) * pi * pi;
    return {q.value, pref * (s.value() + tail)};
}

}
