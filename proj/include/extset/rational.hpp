#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace extset {

// Every verdict in this library is decided with exact integer or rational
// arithmetic; no floating point enters any comparison.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n,r) with the convention C(n,r) = 0 for r < 0 or r > n.
BigInt binomial(int n, int r);

// base^exp for exp >= 0, with 0^0 = 1.
BigInt int_pow(const BigInt& base, int exp);

// Accepts "7", "-7" or "3/4". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Reduced form, "7" or "2/9".
std::string rational_to_string(const Rational& q);

std::string bigint_to_string(const BigInt& v);

}  // namespace extset
