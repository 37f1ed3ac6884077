#include "satlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "satlab/errors.hpp"

namespace satlab::arith {

namespace {

u128 parse_u128_decimal(const char* s) {
  u128 v = 0;
  for (; *s; ++s) v = v * 10 + static_cast<unsigned>(*s - '0');
  return v;
}

// Proven bound for the first-13-prime Miller-Rabin witness set (~3.3e24).
const u128 kMaxPrimalityInput = parse_u128_decimal("3317044064679887385961981");

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint256 u256_from(u128 v) {
  uint256 r = static_cast<u64>(v >> 64);
  r <<= 64;
  r += static_cast<u64>(v);
  return r;
}

u128 u128_from(const uint256& v) {
  const u64 lo = static_cast<u64>(v & 0xFFFFFFFFFFFFFFFFull);
  const u64 hi = static_cast<u64>((v >> 64) & 0xFFFFFFFFFFFFFFFFull);
  return (static_cast<u128>(hi) << 64) | lo;
}

// Modular multiply for moduli above 2^64; only reached when callers probe
// near the primality bound, so the 256-bit detour is acceptable.
u128 mulmod128(u128 a, u128 b, u128 m) {
  const uint256 r = (u256_from(a) * u256_from(b)) % u256_from(m);
  return u128_from(r);
}

u128 powmod128(u128 a, u128 e, u128 m) {
  u128 r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin64(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

bool miller_rabin128(u128 n) {
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u128 x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mulmod128(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

u64 f_step64(u64 y, u64 c, u64 n) {
  return (mulmod64(y, y, n) + c) % n;
}

// Brent-cycle rho with the fixed polynomial sequence x^2 + c, c = 1, 2, ...
// Deterministic by construction; n must be odd, composite, > 1e12 (all small
// factors already stripped by trial division).
u64 brent_rho64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, ys = 2, d = 1;
    u64 r = 1;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f_step64(y, c, n);
      u64 k = 0;
      while (k < r && d == 1) {
        ys = y;
        u64 q = 1;
        const u64 lim = std::min<u64>(128, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f_step64(y, c, n);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = f_step64(ys, c, n);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

u128 f_step128(u128 y, u128 c, u128 n) {
  u128 r = mulmod128(y, y, n) + c;
  if (r >= n) r -= n;
  return r;
}

u128 brent_rho128(u128 n) {
  for (u128 c = 1;; ++c) {
    u128 x = 2, y = 2, ys = 2, d = 1;
    u64 r = 1;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f_step128(y, c, n);
      u64 k = 0;
      while (k < r && d == 1) {
        ys = y;
        u128 q = 1;
        const u64 lim = std::min<u64>(128, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f_step128(y, c, n);
          q = mulmod128(q, x > y ? x - y : y - x, n);
        }
        d = gcd128(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = f_step128(ys, c, n);
        d = gcd128(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

u128 max_primality_input() { return kMaxPrimalityInput; }

bool is_prime(u128 n) {
  if (n >= kMaxPrimalityInput) {
    throw validation_error(
        "is_prime: input exceeds the proven deterministic range (~3.3e24)");
  }
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n <= std::numeric_limits<u64>::max())
    return miller_rabin64(static_cast<u64>(n));
  return miller_rabin128(n);
}

u128 FactorMultiset::abs_value() const {
  u128 v = 1;
  for (const auto& e : factors)
    for (std::uint32_t i = 0; i < e.exponent; ++i) v *= e.prime;
  return v;
}

int FactorMultiset::big_omega() const {
  int total = 0;
  for (const auto& e : factors) total += static_cast<int>(e.exponent);
  return total;
}

FactorMultiset factorize(i128 n) {
  if (n == 0) throw validation_error("factorize: zero input");
  u128 m = abs128(n);
  if (m >= kMaxPrimalityInput) {
    throw validation_error(
        "factorize: |input| exceeds the proven deterministic range (~3.3e24)");
  }

  FactorMultiset result;
  result.sign = n < 0 ? -1 : 1;
  if (m == 1) return result;

  auto push = [&result](u128 p, std::uint32_t e) {
    result.factors.push_back({p, e});
  };

  for (u64 p : trial_primes()) {
    if (static_cast<u128>(p) * p > m) break;
    if (m % p == 0) {
      std::uint32_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      push(p, e);
    }
  }

  if (m > 1) {
    if (m < static_cast<u128>(kTrialLimit) * kTrialLimit || is_prime(m)) {
      push(m, 1);
    } else {
      // Composite remainder with all prime factors above 1e6: split with rho.
      std::vector<u128> pending{m};
      std::vector<u128> primes;
      while (!pending.empty()) {
        u128 v = pending.back();
        pending.pop_back();
        if (is_prime(v)) {
          primes.push_back(v);
          continue;
        }
        const u128 d = v <= std::numeric_limits<u64>::max()
                           ? brent_rho64(static_cast<u64>(v))
                           : brent_rho128(v);
        pending.push_back(d);
        pending.push_back(v / d);
      }
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        push(primes[i], static_cast<std::uint32_t>(j - i));
        i = j;
      }
    }
  }

  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorEntry& a, const FactorEntry& b) {
              return a.prime < b.prime;
            });
  return result;
}

int big_omega(i128 n) { return factorize(n).big_omega(); }

int little_omega(i128 n) { return factorize(n).little_omega(); }

int mobius(i128 n) {
  if (n < 1) throw validation_error("mobius: input must be >= 1");
  const FactorMultiset f = factorize(n);
  for (const auto& e : f.factors)
    if (e.exponent > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

u128 euler_phi(u128 n) {
  if (n < 1) throw validation_error("euler_phi: input must be >= 1");
  if (n >= kMaxPrimalityInput) {
    throw validation_error(
        "euler_phi: input exceeds the proven deterministic range (~3.3e24)");
  }
  u128 phi = n;
  for (const auto& e : factorize(static_cast<i128>(n)).factors) {
    phi -= phi / e.prime;
  }
  return phi;
}

u128 radical(i128 n) {
  if (n < 1) throw validation_error("radical: input must be >= 1");
  u128 r = 1;
  for (const auto& e : factorize(n).factors) r *= e.prime;
  return r;
}

std::vector<u64> primes_up_to(u64 n) {
  if (n > 100'000'000) throw budget_error("primes_up_to: limit above 1e8");
  std::vector<u64> primes;
  if (n < 2) return primes;
  primes.push_back(2);
  if (n < 3) return primes;

  // Odd-only sieve: bit k represents 2k+3.
  const u64 odds = (n - 1) / 2;  // count of odd numbers in [3, n]
  std::vector<u64> bits((odds + 63) / 64, 0);
  auto is_set = [&bits](u64 k) { return (bits[k >> 6] >> (k & 63)) & 1; };
  auto set = [&bits](u64 k) { bits[k >> 6] |= u64{1} << (k & 63); };

  for (u64 k = 0; k < odds; ++k) {
    if (is_set(k)) continue;
    const u64 p = 2 * k + 3;
    if (p * p > n) break;
    for (u64 m = (p * p - 3) / 2; m < odds; m += p) set(m);
  }
  for (u64 k = 0; k < odds; ++k)
    if (!is_set(k)) primes.push_back(2 * k + 3);
  return primes;
}

std::vector<u64> primes_in_interval(u64 lo, u64 hi, std::size_t block_odds) {
  if (lo < 2) throw validation_error("primes_in_interval: lo must be >= 2");
  if (hi < lo) throw validation_error("primes_in_interval: reversed bounds");
  if (hi > 10'000'000'000'000ull)
    throw budget_error("primes_in_interval: hi above 1e13");
  if (hi - lo > 100'000'000ull)
    throw budget_error("primes_in_interval: window wider than 1e8");
  if (block_odds == 0)
    throw validation_error("primes_in_interval: zero block size");

  std::vector<u64> primes;
  if (lo <= 2 && 2 <= hi) primes.push_back(2);
  u64 start = std::max<u64>(lo, 3);
  if ((start & 1) == 0) ++start;
  if (start > hi) return primes;

  const std::vector<u64> base = primes_up_to(isqrt_u64(hi));

  std::vector<char> composite(block_odds);
  for (u64 seg_lo = start; seg_lo <= hi; seg_lo += 2 * block_odds) {
    const u64 seg_hi = std::min(hi, seg_lo + 2 * (block_odds - 1));
    const u64 seg_count = (seg_hi - seg_lo) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + seg_count, 0);
    for (u64 p : base) {
      if (p == 2) continue;
      if (p * p > seg_hi) break;
      u64 first = std::max(p * p, ((seg_lo + p - 1) / p) * p);
      if ((first & 1) == 0) first += p;
      for (u64 m = first; m <= seg_hi; m += 2 * p)
        composite[(m - seg_lo) / 2] = 1;
    }
    for (u64 k = 0; k < seg_count; ++k)
      if (!composite[k]) primes.push_back(seg_lo + 2 * k);
  }
  return primes;
}

}  // namespace satlab::arith
