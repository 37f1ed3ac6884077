#include "satlab/prime_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "satlab/arith.hpp"
#include "satlab/errors.hpp"

namespace satlab::solver {

namespace {

// Interval transformed by a sign: {beta * m : m in iv}.
Interval signed_interval(const Interval& iv, int beta) {
  if (beta > 0) return iv;
  return {-iv.hi, -iv.lo};
}

// #{ m in iv : beta * m = v } summed form: count of u in U with u + w = s is
// handled by interval intersection in integer_count below.
u64 overlap_count(const Interval& a, i64 lo, i64 hi) {
  const i64 l = std::max(a.lo, lo), h = std::min(a.hi, hi);
  return h < l ? 0 : static_cast<u64>(h - l + 1);
}

std::array<std::vector<u64>, 4> interval_primes(const CayleyTarget& t,
                                                u64 max_primes_per_interval) {
  std::array<std::vector<u64>, 4> primes;
  for (int j = 0; j < 4; ++j) {
    const Interval& iv = t.intervals[j];
    if (iv.empty()) continue;
    primes[j] = arith::primes_in_interval(static_cast<u64>(iv.lo),
                                          static_cast<u64>(iv.hi));
    if (primes[j].size() > max_primes_per_interval)
      throw budget_error("solve_prime_quads: interval holds more than " +
                         std::to_string(max_primes_per_interval) + " primes");
  }
  return primes;
}

}  // namespace

std::pair<std::array<double, 4>, std::array<int, 4>> eta_beta_from_xi(
    const std::array<double, 4>& xi) {
  double scale = 0;
  for (double v : xi) scale = std::max(scale, std::abs(v));
  if (scale == 0) throw validation_error("eta_beta_from_xi: zero vector");
  for (double v : xi)
    if (v == 0) throw validation_error("eta_beta_from_xi: zero coordinate");

  double recip = 0, recip_abs = 0;
  for (double v : xi) {
    recip += 1 / v;
    recip_abs += std::abs(1 / v);
  }
  if (std::abs(recip) > 1e-9 * recip_abs)
    throw validation_error("eta_beta_from_xi: xi is off the surface");

  const double line_tol = 1e-12 * scale;
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& pr : pairs)
    if (std::abs(xi[pr[0]] + xi[pr[1]]) <= line_tol)
      throw validation_error("eta_beta_from_xi: xi lies on a rational line");

  const double c = std::cbrt(xi[0] * xi[1] * xi[2] * xi[3]);
  std::array<double, 4> eta{};
  std::array<int, 4> beta{};
  for (int j = 0; j < 4; ++j) {
    const double q = c / xi[j];
    eta[j] = std::abs(q);
    beta[j] = q < 0 ? -1 : 1;
  }
  return {eta, beta};
}

CayleyTarget make_target(const std::array<double, 4>& xi, u64 B) {
  if (B < 3) throw validation_error("make_target: B must be at least 3");
  CayleyTarget t;
  t.xi = xi;
  std::tie(t.eta, t.beta) = eta_beta_from_xi(xi);
  t.B = B;

  const double root = std::cbrt(static_cast<double>(B));
  const double width = root / std::log(static_cast<double>(B));
  for (int j = 0; j < 4; ++j) {
    // Outward rounding keeps every real solution of the window inside the
    // integer search range.
    i64 lo = static_cast<i64>(std::floor(t.eta[j] * root - width));
    const i64 hi = static_cast<i64>(std::ceil(t.eta[j] * root + width));
    lo = std::max<i64>(lo, 2);
    t.intervals[j] = {lo, hi};
  }
  return t;
}

std::vector<PrimeQuad> solve_prime_quads(const CayleyTarget& t,
                                         u64 max_primes_per_interval) {
  const auto primes = interval_primes(t, max_primes_per_interval);
  for (int j = 0; j < 4; ++j)
    if (primes[j].empty()) return {};

  constexpr u64 kPairBudget = 10'000'000;
  if (primes[0].size() * primes[1].size() > kPairBudget ||
      primes[2].size() * primes[3].size() > kPairBudget)
    throw budget_error("solve_prime_quads: pair table exceeds 1e7 entries");

  // Meet in the middle on s = beta0 p0 + beta1 p1 = -(beta2 p2 + beta3 p3).
  std::unordered_map<i64, std::vector<std::pair<u64, u64>>> half;
  half.reserve(primes[0].size() * primes[1].size());
  for (u64 p0 : primes[0])
    for (u64 p1 : primes[1]) {
      const i64 s = t.beta[0] * static_cast<i64>(p0) +
                    t.beta[1] * static_cast<i64>(p1);
      half[s].emplace_back(p0, p1);
    }

  std::vector<PrimeQuad> quads;
  for (u64 p2 : primes[2])
    for (u64 p3 : primes[3]) {
      const i64 s = -(t.beta[2] * static_cast<i64>(p2) +
                      t.beta[3] * static_cast<i64>(p3));
      const auto it = half.find(s);
      if (it == half.end()) continue;
      for (const auto& [p0, p1] : it->second) {
        PrimeQuad q;
        q.p = {p0, p1, p2, p3};
        std::array<u64, 4> sorted = q.p;
        std::sort(sorted.begin(), sorted.end());
        q.distinct = std::adjacent_find(sorted.begin(), sorted.end()) ==
                     sorted.end();
        quads.push_back(q);
      }
    }
  std::sort(quads.begin(), quads.end(),
            [](const PrimeQuad& a, const PrimeQuad& b) { return a.p < b.p; });
  return quads;
}

double weighted_count(const std::vector<PrimeQuad>& quads) {
  double sum = 0;
  for (const auto& q : quads) {
    double w = 1;
    for (u64 p : q.p) w *= std::log(static_cast<double>(p));
    sum += w;
  }
  return sum;
}

u64 unweighted_distinct_count(const std::vector<PrimeQuad>& quads) {
  u64 n = 0;
  for (const auto& q : quads) n += q.distinct ? 1 : 0;
  return n;
}

u128 integer_count(const CayleyTarget& t) {
  for (const auto& iv : t.intervals)
    if (iv.empty()) return 0;

  // With U = beta0 I0, V = beta1 I1 the half-sum s = u + v ranges over
  // [U.lo + V.lo, U.hi + V.hi], and the number of representations is the
  // length of U cap (s - V).  Same on the right half with the sign flipped.
  const Interval U = signed_interval(t.intervals[0], t.beta[0]);
  const Interval V = signed_interval(t.intervals[1], t.beta[1]);
  const Interval W = signed_interval(t.intervals[2], t.beta[2]);
  const Interval X = signed_interval(t.intervals[3], t.beta[3]);

  u128 total = 0;
  for (i64 s = U.lo + V.lo; s <= U.hi + V.hi; ++s) {
    const u64 left = overlap_count(U, s - V.hi, s - V.lo);
    if (left == 0) continue;
    const u64 right = overlap_count(W, -s - X.hi, -s - X.lo);
    if (right == 0) continue;
    total += static_cast<u128>(left) * right;
  }
  return total;
}

SingularSeries singular_series(u64 P) {
  if (P < 2) throw validation_error("singular_series: P must be at least 2");
  if (P > 10'000'000)
    throw budget_error("singular_series: truncation above 1e7");

  // Linear sieve for phi and squarefreeness up to L = max(P, 1e6); the exact
  // sum over (P, L] then covers the head of the tail, and dyadic blocks with
  // the explicit totient lower bound phi(n) > n/(e^gamma loglog n + 3/loglog n)
  // cover the rest.
  const u64 L = std::max<u64>(P, 1'000'000);
  std::vector<std::uint32_t> phi(L + 1, 0);
  std::vector<std::uint8_t> squarefree(L + 1, 1);
  std::vector<std::uint32_t> primes;
  phi[1] = 1;
  for (u64 n = 2; n <= L; ++n) {
    if (phi[n] == 0) {
      phi[n] = static_cast<std::uint32_t>(n - 1);
      primes.push_back(static_cast<std::uint32_t>(n));
    }
    for (std::uint32_t p : primes) {
      const u64 m = n * p;
      if (m > L) break;
      if (n % p == 0) {
        phi[m] = phi[n] * p;
        squarefree[m] = 0;
        break;
      }
      phi[m] = phi[n] * (p - 1);
      squarefree[m] = squarefree[n];
    }
  }

  SingularSeries s;
  s.sum_form = 0;
  for (u64 q = 1; q <= P; ++q)
    if (squarefree[q]) {
      const double ph = static_cast<double>(phi[q]);
      s.sum_form += 1.0 / (ph * ph * ph);
    }

  s.product_form = 1;
  for (std::uint32_t p : primes) {
    if (p > P) break;
    const double d = static_cast<double>(p) - 1;
    s.product_form *= 1 + 1.0 / (d * d * d);
  }

  double tail = 0;
  for (u64 q = P + 1; q <= L; ++q) {
    const double ph = static_cast<double>(phi[q]);
    tail += 1.0 / (ph * ph * ph);
  }
  constexpr double kExpGamma = 1.7810724179901979;  // e^gamma
  double A = static_cast<double>(L);
  for (int k = 0; k < 2000; ++k) {
    const double llog = std::log(std::log(2 * A));
    const double g = kExpGamma * llog + 3 / llog;
    const double block = g * g * g / A / A;  // <= A terms, each < (g/A)^3
    tail += block;
    if (block < 1e-30) break;
    A *= 2;
  }
  s.tail_bound = tail;
  return s;
}

HlReport hl_compare(const CayleyTarget& t, u64 series_P,
                    u64 max_primes_per_interval) {
  HlReport report;
  const auto primes = interval_primes(t, max_primes_per_interval);
  for (int j = 0; j < 4; ++j) {
    report.prime_counts[j] = primes[j].size();
    report.intervals[j] = t.intervals[j];
  }
  const std::vector<PrimeQuad> quads =
      solve_prime_quads(t, max_primes_per_interval);
  report.quads_total = quads.size();
  report.quads_distinct = unweighted_distinct_count(quads);
  report.R = weighted_count(quads);
  report.J = integer_count(t);
  report.S = singular_series(series_P).sum_form;
  if (report.J > 0 && report.S > 0)
    report.ratio = report.R / (static_cast<double>(report.J) * report.S);
  return report;
}

std::vector<ConstructedPoint> quads_to_points(const std::vector<PrimeQuad>& quads,
                                              const CayleyTarget& t) {
  std::vector<ConstructedPoint> points;
  for (const auto& q : quads) {
    if (!q.distinct) continue;  // repeated primes never give U2 points

    std::array<i64, 4> y{};
    for (int j = 0; j < 4; ++j)
      y[j] = t.beta[j] * static_cast<i64>(q.p[j]);

    std::array<i64, 4> x{};
    for (int i = 0; i < 4; ++i) {
      i128 prod = 1;
      for (int j = 0; j < 4; ++j)
        if (j != i) prod *= y[j];
      if (prod > std::numeric_limits<i64>::max() ||
          prod < std::numeric_limits<i64>::min())
        throw validation_error("quads_to_points: coordinate exceeds int64");
      x[i] = static_cast<i64>(prod);
    }

    ConstructedPoint cp;
    cp.point = cayley::point_from_coords(x);
    if (!cayley::on_cayley(x) || !cayley::in_U2(x) || !cp.point.primitive ||
        cp.point.omega != 12 || cp.point.distinct_primes != 4)
      throw std::logic_error("quads_to_points: postcondition failed");
    for (int i = 0; i < 4; ++i) {
      const double err =
          std::abs(static_cast<double>(x[i]) / static_cast<double>(t.B) -
                   t.xi[i]);
      cp.approx_error = std::max(cp.approx_error, err);
    }
    points.push_back(cp);
  }
  return points;
}

}  // namespace satlab::solver
