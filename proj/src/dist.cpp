#include "parmax/dist.hpp"

#include <atomic>
#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <stdexcept>

#include "parmax/airy.hpp"
#include "parmax/summation.hpp"
#include "parmax/zero_asymptotics.hpp"
#include "parmax/zeros.hpp"

namespace parmax {
namespace {

std::atomic<long> clamp_events{0};

// switch to boost below this |argument| in the shifted tail terms
constexpr double neg_asym_floor = 25.0;

double shifted_ai(double arg) {
    if (arg <= -neg_asym_floor) return airy_negative_asym(-arg).ai;
    return boost::math::airy_ai(arg);
}

double shifted_aip(double arg) {
    if (arg <= -neg_asym_floor) return airy_negative_asym(-arg).aip;
    return boost::math::airy_ai_prime(arg);
}

struct SumEngine {
    explicit SumEngine(bool comp) : comp_(comp) {}
    void add(double t) {
        if (comp_)
            acc_.add(t);
        else
            plain_ += t;
    }
    double value() const { return comp_ ? acc_.value() : plain_; }

private:
    bool comp_;
    Accumulator acc_;
    double plain_ = 0.0;
};

}  // namespace

void validate(const SeriesConfig& cfg) {
    if (cfg.K < 2) throw std::invalid_argument("SeriesConfig: K must be >= 2");
    if (cfg.tail_mode == SeriesConfig::TailMode::asymptotic && cfg.K < 200)
        throw std::invalid_argument(
            "SeriesConfig: asymptotic tails need K >= 200");
}

long clamp_event_count() { return clamp_events.load(); }
void reset_clamp_event_count() { clamp_events.store(0); }

double tail_probability_G(double x, const SeriesConfig& cfg) {
    validate(cfg);
    if (!std::isfinite(x) || x < 0)
        throw std::domain_error("tail_probability_G: need finite x >= 0");
    const double shift = cbrt2 * x;
    SumEngine s(cfg.compensated_summation);
    s.add(boost::math::airy_ai(shift) / ai_zero_arg);
    const auto& tab = zero_table(std::min(cfg.K - 1, 200000));
    for (int k = 1; k < cfg.K; ++k) {
        const ZeroRecord& r =
            (k <= 200000) ? tab[k - 1] : airy_zero(k);
        s.add(r.phi / r.aip * boost::math::airy_ai(r.a + shift));
    }
    if (cfg.tail_mode == SeriesConfig::TailMode::asymptotic) {
        // term envelope ~ 0.0193 k^{-3}; run until the remaining envelope sum
        // 0.0193 k^{-2}/2 drops below 2e-10
        int kstop = std::max(cfg.K, 6951);
        for (int k = cfg.K; k <= kstop; ++k) {
            const TailZero& z = tail_zero_cached(k);
            s.add(z.phi / z.aip * shifted_ai(z.a + shift));
        }
    }
    double g = s.value();
    if (g < 0.0) {
        ++clamp_events;
        g = 0.0;
    } else if (g > 1.0) {
        ++clamp_events;
        g = 1.0;
    }
    return g;
}

double density_fN(double x, const SeriesConfig& cfg) {
    validate(cfg);
    if (!std::isfinite(x) || x <= 0)
        throw std::domain_error("density_fN: need finite x > 0");
    const double shift = cbrt2 * x;
    SumEngine s(cfg.compensated_summation);
    s.add(boost::math::airy_ai_prime(shift) / ai_zero_arg);
    const auto& tab = zero_table(std::min(cfg.K - 1, 200000));
    for (int k = 1; k < cfg.K; ++k) {
        const ZeroRecord& r =
            (k <= 200000) ? tab[k - 1] : airy_zero(k);
        s.add(r.phi / r.aip * boost::math::airy_ai_prime(r.a + shift));
    }
    if (cfg.tail_mode == SeriesConfig::TailMode::asymptotic) {
        // term envelope ~ 0.0404 k^{-8/3}; remaining envelope 0.0242 k^{-5/3}
        // drops below 5e-10 at k ~ 4.1e4
        int kstop = std::max(cfg.K, 41000);
        for (int k = cfg.K; k <= kstop; ++k) {
            const TailZero& z = tail_zero_cached(k);
            s.add(z.phi / z.aip * shifted_aip(z.a + shift));
        }
    }
    double f = -cbrt2 * s.value();
    if (f < 0.0) {
        ++clamp_events;
        f = 0.0;
    }
    return f;
}

double density_fM(double x, const SeriesConfig& cfg) {
    return 2.0 * (1.0 - tail_probability_G(x, cfg)) * density_fN(x, cfg);
}

double fN_limit_at_zero(const SeriesConfig& cfg) {
    validate(cfg);
    SumEngine s(cfg.compensated_summation);
    const auto& tab = zero_table(std::min(cfg.K - 1, 200000));
    for (int k = 1; k < cfg.K; ++k)
        s.add((k <= 200000) ? tab[k - 1].phi : airy_zero(k).phi);
    if (cfg.tail_mode == SeriesConfig::TailMode::asymptotic) {
        int J = std::max(cfg.K, 20000);
        double last = 0.0;
        for (int k = cfg.K; k < J; ++k) {
            last = tail_zero_cached(k).phi;
            s.add(last);
        }
        // self-calibrating Euler-Maclaurin remainder, decay k^{-8/3}
        double fj = tail_zero_cached(J).phi;
        s.add(fj * (J / (8.0 / 3.0 - 1.0) + 0.5 + (8.0 / 3.0) / (12.0 * J)));
    }
    return -cbrt2 * (aip_zero_arg / ai_zero_arg + s.value());
}

EvalPoint eval_point(double x, const SeriesConfig& cfg) {
    if (!std::isfinite(x) || x < 0)
        throw std::domain_error("eval_point: need finite x >= 0");
    EvalPoint p;
    p.x = x;
    p.g = tail_probability_G(x, cfg);
    p.f_n = (x > 0) ? density_fN(x, cfg) : fN_limit_at_zero(cfg);
    p.f_m = 2.0 * (1.0 - p.g) * p.f_n;
    p.cdf_n = 1.0 - p.g;
    p.cdf_m = p.cdf_n * p.cdf_n;
    return p;
}

}
