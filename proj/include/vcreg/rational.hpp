#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace vcreg {

// Exact arithmetic for every density/fraction verdict.  Floating point is
// confined to the randgen log-space checker and the epsilon schedule.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int binomial(std::int64_t n, std::int64_t k);

// Strict "a/b" (or plain integer "a") parser; decimals are rejected so the
// exact-arithmetic contract stays visible at the CLI boundary.
Rat parse_rational(const std::string& text);

// Canonical "num/den" with positive denominator, gcd-reduced.
std::string rational_str(const Rat& r);

double rat_to_double(const Rat& r);

Rat rat_from_double_dyadic(double x, int bits = 30);

}  // namespace vcreg
