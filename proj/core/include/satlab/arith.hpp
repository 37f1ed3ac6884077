#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "satlab/wide.hpp"

namespace satlab::arith {

// One prime-power entry of a factorization.
struct FactorEntry {
  u128 prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

// Factorization of a nonzero integer: sign times the product of the entries,
// primes strictly ascending.  |n| = 1 has an empty entry list.
struct FactorMultiset {
  int sign = 1;
  std::vector<FactorEntry> factors;

  u128 abs_value() const;  // multiply the entries back together
  int big_omega() const;   // sum of exponents
  int little_omega() const { return static_cast<int>(factors.size()); }
};

// Largest input for which the fixed Miller-Rabin witness set used here (the
// first 13 primes) is a proven primality certificate:
// 3'317'044'064'679'887'385'961'981 ~ 3.3e24.  is_prime and factorize reject
// inputs at or beyond this bound rather than silently turning conjectural;
// everything the library itself computes stays far below it.
u128 max_primality_input();

// Deterministic primality for 0 <= n < max_primality_input().
bool is_prime(u128 n);

// Trial division below 1e6, then a deterministic Brent-cycle rho with a fixed
// polynomial sequence, so repeated runs factor identically.  n must be
// nonzero with |n| < max_primality_input().
FactorMultiset factorize(i128 n);

int big_omega(i128 n);      // Omega(|n|), n != 0
int little_omega(i128 n);   // omega(|n|), n != 0
int mobius(i128 n);         // n >= 1
u128 euler_phi(u128 n);     // n >= 1
u128 radical(i128 n);       // squarefree kernel, n >= 1

// All primes p with lo <= p <= hi, ascending.  Segmented odd-only sieve;
// requires 2 <= lo <= hi, hi <= 1e13, and a window of at most 1e8.
// block_odds is the number of odd residues per segment.
std::vector<u64> primes_in_interval(u64 lo, u64 hi,
                                    std::size_t block_odds = std::size_t{1}
                                                             << 20);

// Simple sieve of all primes <= n (n <= 1e8).
std::vector<u64> primes_up_to(u64 n);

}  // namespace satlab::arith
