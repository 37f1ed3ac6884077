#pragma once

#include <array>
#include <vector>

#include "satlab/cayley.hpp"
#include "satlab/wide.hpp"

namespace satlab::solver {

// Inclusive integer interval.
struct Interval {
  i64 lo = 0, hi = -1;

  bool empty() const { return lo > hi; }
  u64 length() const { return empty() ? 0 : static_cast<u64>(hi - lo + 1); }
};

// A prepared sign-decomposed target: eta_j = |c / xi_j| and beta_j the sign
// of c / xi_j, with c the real cube root of xi0 xi1 xi2 xi3, so that
// beta . eta = c * sum(1/xi_j) = 0.  The four prime search intervals are
// [eta_j B^{1/3} - B^{1/3}/log B, eta_j B^{1/3} + B^{1/3}/log B], endpoints
// rounded outward and clamped below at 2.
struct CayleyTarget {
  std::array<double, 4> xi{};
  std::array<double, 4> eta{};
  std::array<int, 4> beta{};
  u64 B = 0;
  std::array<Interval, 4> intervals{};
};

// Decompose xi into (eta, beta).  Requires xi on the surface (reciprocal-sum
// form, relative 1e-9), no zero coordinate, and no vanishing pairing sum
// xi_k + xi_l.
std::pair<std::array<double, 4>, std::array<int, 4>> eta_beta_from_xi(
    const std::array<double, 4>& xi);

CayleyTarget make_target(const std::array<double, 4>& xi, u64 B);

struct PrimeQuad {
  std::array<u64, 4> p{};
  bool distinct = false;  // all four primes pairwise distinct

  friend bool operator==(const PrimeQuad&, const PrimeQuad&) = default;
};

// All quadruples (p0, p1, p2, p3) of primes p_j in interval j with
// beta . p = 0, by meet-in-the-middle over (p0, p1) x (p2, p3); sorted
// lexicographically.  Each interval may hold at most max_primes_per_interval
// primes (budget guard).
std::vector<PrimeQuad> solve_prime_quads(
    const CayleyTarget& t, u64 max_primes_per_interval = 1'000'000);

// R(B): sum over quads of log p0 * log p1 * log p2 * log p3.
double weighted_count(const std::vector<PrimeQuad>& quads);

// Number of quads whose four primes are pairwise distinct.
u64 unweighted_distinct_count(const std::vector<PrimeQuad>& quads);

// J(B): number of integer quadruples m_j in interval j with beta . m = 0,
// by exact convolution over the shared half-sum (no enumeration of tuples).
u128 integer_count(const CayleyTarget& t);

// Truncations of the quadruple singular series:
//   sum_form     = sum_{q <= P} mu^2(q) / phi(q)^3
//   product_form = prod_{p <= P} (1 + 1/(p-1)^3)
//   tail_bound   = rigorous upper bound on sum_{q > P} 1/phi(q)^3, which
//                  dominates |product_form - sum_form|.
// The tail bound is the exact sieved sum up to max(P, 1e6) plus dyadic blocks
// bounded via phi(n) > n / (e^gamma loglog n + 3/loglog n) beyond.
struct SingularSeries {
  double sum_form = 0;
  double product_form = 0;
  double tail_bound = 0;
};
SingularSeries singular_series(u64 P);

// End-to-end comparison R(B) vs J(B) * S.
struct HlReport {
  double R = 0;
  u128 J = 0;
  double S = 0;           // sum_form at the configured truncation
  double ratio = 0;       // R / (J * S); 0 when J = 0
  u64 quads_total = 0;
  u64 quads_distinct = 0;
  std::array<u64, 4> prime_counts{};
  std::array<Interval, 4> intervals{};
};
HlReport hl_compare(const CayleyTarget& t, u64 series_P = 10'000,
                    u64 max_primes_per_interval = 1'000'000);

// Points built from distinct-prime quads: y_j = beta_j p_j and
// x_i = prod_{j != i} y_j.  Every output is primitive, on the surface, off
// the lines, with Omega = 12 and exactly 4 distinct primes.  approx_error is
// max_i |x_i / B - xi_i|.  Quads with repeated primes are rejected.
struct ConstructedPoint {
  cayley::CayleyPoint point;
  double approx_error = 0;
};
std::vector<ConstructedPoint> quads_to_points(
    const std::vector<PrimeQuad>& quads, const CayleyTarget& t);

}  // namespace satlab::solver
