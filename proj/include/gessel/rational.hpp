#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace gessel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rat pochhammer(const Rat& a, long n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
    Rat r = 1;
    Rat f = a;
    for (long k = 0; k < n; ++k, f += 1) r *= f;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int catalan(long n) { return binomial(2 * n, n) / (n + 1); }

/// Generalized binomial coefficient C(alpha, k) for rational alpha.
inline Rat binomial_rat(const Rat& alpha, long k) {
    Rat r = 1;
    for (long i = 0; i < k; ++i) {
        r *= alpha - i;
        r /= i + 1;
    }
    return r;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace gessel
