#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ydk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// (2k-1)!! for k >= 0, with (-1)!! = 1.
BigInt odd_double_factorial(int k);

}  // namespace ydk
