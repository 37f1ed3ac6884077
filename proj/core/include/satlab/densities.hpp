#pragma once

#include <array>
#include <vector>

#include "satlab/fermat.hpp"
#include "satlab/wide.hpp"

namespace satlab::densities {

// Exhaustive prime scans cost p^3 form evaluations; keep them under ~3e7.
inline constexpr u64 max_prime_scan = 300;

struct DensityRecord {
  u64 d = 0;
  u64 rho = 0;
  double normalized = 0;      // rho / d^2
  double deligne_excess = 0;  // |rho - 4p^2| / p^{3/2}, prime d only
};

// #{ y mod p : p | F(y) } by exhaustive enumeration; p prime <= 300.
// Results are cached process-wide (the CRT path below hits the same primes
// thousands of times).
u64 rho_prime(u64 p);

// rho(d) for squarefree d with all prime factors <= 300, as the product of
// rho_prime over the prime divisors (CRT).  d <= 1e6 so the count fits u64.
u64 rho_squarefree(u64 d);

// Exact sieve weight rho(p)/p^2; zero for p dividing psi.D (bad primes carry
// no weight).  Enforces the bound weight <= 5 for good primes.
rational omega_weight(u64 p, const fermat::PsiLattice& psi);

// |rho(p) - 4p^2| / p^{3/2}.
double deligne_excess(u64 p);

struct DeligneScan {
  std::vector<DensityRecord> records;  // good primes in [p_lo, p_hi], ascending
  double max_excess = 0;
};

// Scan good primes (those not listed bad) in [p_lo, p_hi], p_hi <= 300.
DeligneScan deligne_scan(u64 p_lo, u64 p_hi,
                         const std::vector<u64>& bad_primes = {});

// Window audit of the sieve dimension: exact sum of weight/p over primes in
// [z1, z), the same window's exact sum of 4/p, the double-log comparison value
// 4*(loglog z - loglog z1), and the excess budget sum_p 20/p^{3/2}.
// Requires threshold <= z1 <= z <= 300 (z1 = z gives empty sums).
struct DimensionAudit {
  rational sum_weight_over_p = 0;
  rational sum_four_over_p = 0;
  double four_loglog_diff = 0;
  double excess_budget = 0;
};
DimensionAudit dimension_sum_audit(u64 z1, u64 z,
                                   const fermat::PsiLattice& psi,
                                   u64 threshold = 53);

// Axis-aligned real box used by the remainder scan.
struct BoxSpec {
  std::array<double, 3> lo{}, hi{};

  double volume() const;
};

struct RemainderRecord {
  u64 d = 0;
  int box_id = 0;
  u64 count = 0;        // lattice points of the box meeting Psi with d | F
  double main_term = 0; // rho(d) * vol / (d^3 D^3)
  double remainder = 0; // count - main_term
};

struct RemainderScanResult {
  std::vector<u64> ds;                    // squarefree d <= Q coprime to D
  std::vector<BoxSpec> boxes;
  std::vector<RemainderRecord> records;   // one per (d, box), d-major order
  std::vector<double> sup_abs_remainder;  // per d, over the box family
  double empirical_L = 0;                 // sum over d of the sups
  double envelope = 0;                    // M^2 sqrt(Q) + M Q + Q^2
};

// Measure the remainder sum over a reproducible family of boxes with sides
// <= M and centers drawn from [-2M, 2M] with the given seed.  M <= 200,
// Q <= 100; the estimated evaluation count must stay within budget.
RemainderScanResult remainder_scan(const fermat::PsiLattice& psi, double M,
                                   u64 Q, int box_family_size = 32,
                                   u64 seed = 12345,
                                   u64 budget = 200'000'000);

}  // namespace satlab::densities
