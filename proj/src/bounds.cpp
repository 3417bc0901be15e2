#include "arbor/decomposition.hpp"

namespace arbor {

BoundsReport bounds_report_m(int m, const BigInt& lambda, const BigInt& k) {
    if (m < 1) throw InvalidParams("bounds_report: tree size must be positive");
    if (lambda < 0 || k < 1)
        throw InvalidParams("bounds_report: lambda must be nonnegative and k positive");
    BoundsReport r;
    r.m = m;
    r.lambda = lambda;
    r.k = k;
    const auto um = static_cast<unsigned long>(m);
    r.bt_exponential = big_pow(m, 5 * um);
    r.new_edge_conn = BigInt(50) * m * m;
    r.new_min_degree = big_pow(m, 200 * um);
    r.new_f = BigInt(m) * m * (lambda + 3);
    r.thm37_l = 2 * big_pow(m, 3) * big_pow(10, 50 * um) +
                2 * big_pow(m, 3) * big_pow(m + 1, um - 1);

    // f_k(m, lambda) = lambda * prod_{i=2..m} (4i)^2
    //                + 24 k * sum_{i=2..m} ( i * prod_{j=i+1..m} (4j)^2 ).
    // Empty products are 1, empty sums 0 (so m = 1 gives just lambda).
    BigInt prod = 1;
    for (int i = 2; i <= m; ++i) prod *= BigInt(4 * i) * (4 * i);
    BigInt sum = 0;
    for (int i = 2; i <= m; ++i) {
        BigInt tail = 1;
        for (int j = i + 1; j <= m; ++j) tail *= BigInt(4 * j) * (4 * j);
        sum += BigInt(i) * tail;
    }
    r.merker_f = lambda * prod + 24 * k * sum;

    if (m >= 2) {
        BigInt low = (lambda + k) * big_pow(m, um);
        BigInt high = (lambda + k) * big_pow(m, 4 * um);
        if (r.merker_f < low || high < r.merker_f)
            throw InternalError("bounds_report: sandwich bound violated at m=" +
                                std::to_string(m));
    }
    return r;
}

BoundsReport bounds_report(const TreePattern& t, const BigInt& lambda, const BigInt& k) {
    return bounds_report_m(t.m(), lambda, k);
}

}  // namespace arbor
