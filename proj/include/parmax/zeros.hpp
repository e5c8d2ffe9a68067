#pragma once

#include <deque>

namespace parmax {

// Everything the series evaluators need at the k-th negative zero of Ai.
struct ZeroRecord {
    int k;
    double a;    // a_k, k-th zero, a_1 = -2.338107...
    double aip;  // Ai'(a_k)
    double bi;   // Bi(a_k)
    double hi;   // Hi(a_k)
    double gi;   // Gi(a_k) = Bi - Hi
    double phi;  // pi*Hi(a_k) + 1/a_k
};

// 1 <= k <= 1e6. Records up to an internal table bound are cached in memory
// (single writer, concurrent readers); beyond it they are recomputed per call.
// Deterministic: the same k yields a bit-identical record within one build.
ZeroRecord airy_zero(int k);

// Ensures records 1..kmax are cached and returns the table; index k-1.
// References remain valid while the table grows.
const std::deque<ZeroRecord>& zero_table(int kmax);

}
