#ifndef ARBOR_BIGINT_HPP
#define ARBOR_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

// Exact big-integer arithmetic for the bounds calculators (m^{200m} and
// friends overflow anything fixed-width).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(BigInt base, unsigned long exp) {
    BigInt out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

}  // namespace arbor

#endif
