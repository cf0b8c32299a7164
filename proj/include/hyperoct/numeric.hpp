#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperoct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Product of the odd integers in [1, n]; 1 for n <= 0.
BigInt double_factorial_odd(int n);

BigInt int_pow(const BigInt& base, unsigned exp);

/// Exact quotient; throws std::logic_error if the division has a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

std::string rational_string(const Rational& r);

}  // namespace hyperoct
