#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace propkit {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts a signed integer or "p/q". Throws ArgumentError otherwise.
Rational parse_rational(const std::string& s);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace propkit
