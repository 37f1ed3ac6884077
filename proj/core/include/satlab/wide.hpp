#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Fixed-width big integers for the few places 128 bits are not enough: the
// quartic form product F0*F1*F2*F3 reaches ~10^55 at the largest admissible
// seed, and cube-identity sums are of the same order.
using int256 = boost::multiprecision::int256_t;
using uint256 = boost::multiprecision::uint256_t;

// Exact rationals for sieve-weight bookkeeping, where rounding noise would
// contaminate inequality audits.
using rational = boost::multiprecision::cpp_rational;

constexpr u128 abs128(i128 v) {
  return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v);
}

constexpr u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(u128 v);
std::string to_string(i128 v);

// int256 from a 128-bit value (boost converts 64-bit limbs natively).
int256 to_int256(i128 v);

}  // namespace satlab
