#include "parmax/zeros.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "parmax/scorer.hpp"

namespace parmax {
namespace {

constexpr double pi = 3.14159265358979323846;
constexpr int table_max = 200000;
constexpr int k_max = 1000000;

double seed_zero(int k) {
    double t = 3.0 * pi * (4.0 * k - 1.0) / 8.0;
    double u = 1.0 / (t * t);
    double corr =
        1.0 +
        u * (5.0 / 48.0 +
             u * (-5.0 / 36.0 +
                  u * (77125.0 / 82944.0 + u * (-108056875.0 / 6967296.0))));
    return -std::cbrt(t * t) * corr;
}

ZeroRecord compute_record(int k) {
    double x = seed_zero(k);
    for (int it = 0; it < 8; ++it) {
        double f = boost::math::airy_ai(x);
        double fp = boost::math::airy_ai_prime(x);
        double dx = f / fp;
        x -= dx;
        if (std::fabs(dx) < 1e-15 * std::fabs(x)) break;
    }
    ZeroRecord r;
    r.k = k;
    r.a = x;
    r.aip = boost::math::airy_ai_prime(x);
    // Wronskian at a zero of Ai gives Bi(a_k) = -1/(pi Ai'(a_k)) exactly
    r.bi = -1.0 / (pi * r.aip);
    r.phi = phi_of_k(k, x);
    r.hi = (r.phi - 1.0 / x) / pi;
    r.gi = r.bi - r.hi;
    return r;
}

std::shared_mutex table_mutex;
std::deque<ZeroRecord> table;

void grow_table_locked(int kmax) {
    for (int k = static_cast<int>(table.size()) + 1; k <= kmax; ++k)
        table.push_back(compute_record(k));
}

}  // namespace

ZeroRecord airy_zero(int k) {
    if (k < 1) throw std::domain_error("airy_zero: k must be >= 1");
    if (k > k_max) throw std::domain_error("airy_zero: k > 1e6");
    if (k > table_max) return compute_record(k);
    {
        std::shared_lock lock(table_mutex);
        if (static_cast<int>(table.size()) >= k) return table[k - 1];
    }
    std::unique_lock lock(table_mutex);
    grow_table_locked(k);
    return table[k - 1];
}

const std::deque<ZeroRecord>& zero_table(int kmax) {
    if (kmax < 1) throw std::domain_error("zero_table: kmax must be >= 1");
    if (kmax > table_max) throw std::domain_error("zero_table: kmax too large");
    {
        std::shared_lock lock(table_mutex);
        if (static_cast<int>(table.size()) >= kmax) return table;
    }
    std::unique_lock lock(table_mutex);
    grow_table_locked(kmax);
    return table;
}

}
