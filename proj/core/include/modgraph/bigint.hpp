// bigint.hpp
// Arbitrary-precision integers. (3N-1)!! overflows 64 bits from N = 12 on,
// and the count identities are asserted exactly, so everything exact goes
// through cpp_int.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace modgraph {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_pow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace modgraph
