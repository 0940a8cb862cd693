#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ricci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline long double to_long_double(const Rational& q) { return q.template convert_to<long double>(); }

/// "num/den" with the "/den" part omitted for integers.
inline std::string to_string(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

}  // namespace ricci
