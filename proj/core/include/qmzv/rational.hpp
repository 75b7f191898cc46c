#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qmzv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r))
        throw std::domain_error("expected an integer, got " + r.str());
    return numerator(r);
}

// "num/den", denominator omitted when 1. cpp_rational::str() already prints
// this way; the wrapper pins the output format in one place.
inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace qmzv
