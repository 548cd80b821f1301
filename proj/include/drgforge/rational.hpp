#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace drgforge {

// Exact arithmetic used everywhere a verdict depends on a number.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Canonical "p/q" (or "p" when q = 1) rendering.
inline std::string rat_to_string(const Rat& r) {
    if (rat_is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int int_pow(Int base, unsigned exp) {
    Int result = 1;
    while (exp != 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

}  // namespace drgforge
