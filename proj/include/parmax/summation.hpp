#pragma once

#include <cmath>
#include <cstddef>

namespace parmax {

// Neumaier variant of compensated summation. Handles terms larger than the
// running sum, which plain Kahan does not.
class Accumulator {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
    void reset() { sum_ = 0.0; comp_ = 0.0; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <class F>
double compensated_sum(std::size_t n, F&& term) {
    Accumulator acc;
    for (std::size_t i = 0; i < n; ++i) acc.add(term(i));
    return acc.value();
}

}
