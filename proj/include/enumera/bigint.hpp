#ifndef ENUMERA_BIGINT_HPP
#define ENUMERA_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace enumera {

using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator, so equality is structural.
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    return Rat(num) / Rat(den);
}

inline Rat make_rat(long long num, long long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

// Integer division that fails loudly on a remainder.
inline BigInt exact_div(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::invalid_argument("exact_div: zero divisor");
    BigInt q = n / d;
    if (q * d != n)
        throw std::logic_error("exact_div: " + n.str() + " not divisible by " + d.str());
    return q;
}

inline long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("to_int64: value out of range: " + v.str());
    return v.convert_to<long long>();
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) r = exact_div(r * (n - k + i), BigInt(i));
    return r;
}

inline BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace enumera

#endif
