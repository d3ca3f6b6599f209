#ifndef FREELOG_NUMERIC_HPP
#define FREELOG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace freelog {

/// Arbitrary-precision signed integer. Counts grow like (2n-1)^m, so fixed
/// width overflows around m ~ 40 already for n = 2.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// base^exp for integer exp of either sign; throws on 0^negative.
inline Rational rational_pow(const Rational& base, int exp) {
    if (exp >= 0) {
        Rational r = 1;
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    }
    if (base == 0) throw std::domain_error("rational_pow: zero base with negative exponent");
    Rational r = 1;
    for (int i = 0; i < -exp; ++i) r /= base;
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step: r is a binomial coefficient
    }
    return r;
}

/// Rising factorial k(k+1)...(k+m-1); empty product for m = 0.
inline Int rising_factorial(const Int& k, unsigned m) {
    Int r = 1;
    for (unsigned i = 0; i < m; ++i) r *= k + i;
    return r;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const Int& x) { return x.convert_to<double>(); }

}  // namespace freelog

#endif
