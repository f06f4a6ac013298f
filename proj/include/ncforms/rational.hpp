#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncforms {

// Exact arbitrary-precision rational; all coefficient arithmetic goes
// through this type, there is no floating-point mode.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational &q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace ncforms
