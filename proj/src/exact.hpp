#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace geu {

// All counts and formula values are exact signed integers of arbitrary size.
using ExactInt = boost::multiprecision::cpp_int;

// C(n, i); zero when i < 0 or i > n.
ExactInt binomial(long long n, long long i);

// base^exp with the convention 0^0 = 1. exp must be >= 0.
ExactInt ipow(const ExactInt& base, long long exp);

ExactInt factorial(int n);

// Parses an optionally signed decimal string. Throws errc::invalid_argument
// on anything else.
ExactInt parse_exact(const std::string& text);

}  // namespace geu
