#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "drlab/errors.hpp"

namespace drlab {

// All height-type quantities are exact rationals (log q = 1 normalization).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw division_by_zero();
        return Rat(num, den);
    } catch (const std::exception&) {
        throw domain_error("malformed rational: " + s);
    }
}

inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_pos(const Rat& a) { return a > 0 ? a : Rat(0); }  // max{0, a}
inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// Smallest integer k with k >= a.
inline Int rat_ceil(const Rat& a) {
    Int n = numerator(a), d = denominator(a);
    Int q = n / d;
    if (q * d < n) ++q;
    return q;
}

inline Int rat_floor(const Rat& a) { return -rat_ceil(-a); }

}  // namespace drlab
