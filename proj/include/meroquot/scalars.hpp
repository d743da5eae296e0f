#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace meroquot {

// Exact scalar domains. Int is an arbitrary-precision integer, Rat an
// always-normalized arbitrary-precision rational (gcd-reduced, positive
// denominator). Every computation in the library is exact; there is no
// floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int b = 1;
    for (long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int acc = 1;
    Int b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Exact decimal rendering: integers as-is, rationals as "num/den" when the
// denominator is nontrivial.
inline std::string to_decimal_string(const Int& x) { return x.str(); }

inline std::string to_decimal_string(const Rat& x) {
    if (rat_den(x) == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace meroquot
