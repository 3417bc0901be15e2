#ifndef ARBOR_RATIONAL_HPP
#define ARBOR_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

// Exact nonnegative rational. All degree arithmetic in the toolkit is integer
// or rational; there is no floating point anywhere on a decision path.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0) throw InvalidParams("rational: denominator must be positive");
        if (n < 0) throw InvalidParams("rational: numerator must be nonnegative");
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    bool is_integer() const { return den == 1; }

    // floor(num*k/den) and ceil(num*k/den) for a nonnegative integer k.
    std::int64_t floor_times(std::int64_t k) const { return (num * k) / den; }
    std::int64_t ceil_times(std::int64_t k) const { return (num * k + den - 1) / den; }
    bool times_is_integer(std::int64_t k) const { return (num * k) % den == 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace arbor

#endif
