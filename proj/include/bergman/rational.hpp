#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bergman/error.hpp"

namespace bergman {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p/q" when q != 1, plain "p" otherwise.
std::string to_string(const Rational& q);

// Accepts optional sign, "p" or "p/q" with q > 0 after normalisation.
// Anything else (floats, empty, infinities) is an input_error.
Rational parse_rational(const std::string& text);

}  // namespace bergman
