#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace spinq {

using Int      = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// Quotient rounded toward minus infinity.  b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b; // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Remainder in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
    Int r = a - floor_div(a, abs(b)) * abs(b);
    return r;
}

/// Binomial coefficient C(a, 2) = a(a-1)/2, valid for any integer a.
inline Int choose2(const Int& a) {
    return a * (a - 1) / 2;
}

inline bool is_even(const Int& a) { return a % 2 == 0; }
inline bool is_odd(const Int& a) { return a % 2 != 0; }

using IntVector = std::vector<Int>;

inline std::string to_string(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    out += ")";
    return out;
}

} // namespace spinq
