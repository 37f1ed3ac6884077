#include "satlab/densities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "satlab/arith.hpp"
#include "satlab/errors.hpp"

namespace satlab::densities {

namespace {

void check_scan_prime(u64 p) {
  if (p > max_prime_scan)
    throw validation_error("prime density scan limited to p <= 300");
  if (!arith::is_prime(p)) throw validation_error("density scan needs a prime");
}

}  // namespace

u64 rho_prime(u64 p) {
  check_scan_prime(p);
  static std::map<u64, u64> cache;
  static std::mutex lock;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  const u64 rho = fermat::f_zero_count_mod_p(p);
  std::lock_guard<std::mutex> guard(lock);
  cache.emplace(p, rho);
  return rho;
}

u64 rho_squarefree(u64 d) {
  if (d == 0) throw validation_error("rho_squarefree: d must be positive");
  if (d > 1'000'000) throw validation_error("rho_squarefree: d above 1e6");
  u128 rho = 1;
  for (const auto& e : arith::factorize(static_cast<i128>(d)).factors) {
    if (e.exponent > 1)
      throw validation_error("rho_squarefree: d is not squarefree");
    rho *= static_cast<u128>(rho_prime(static_cast<u64>(e.prime)));
  }
  return static_cast<u64>(rho);  // rho(d) <= d^3 <= 1e18 fits
}

rational omega_weight(u64 p, const fermat::PsiLattice& psi) {
  check_scan_prime(p);
  if (psi.D % p == 0) return 0;
  const rational w(rho_prime(p), p * p);
  if (w > 5)
    throw std::logic_error("omega_weight: good prime with weight above 5");
  return w;
}

double deligne_excess(u64 p) {
  check_scan_prime(p);
  const double pd = static_cast<double>(p);
  const double diff = static_cast<double>(rho_prime(p)) - 4.0 * pd * pd;
  return std::abs(diff) / std::pow(pd, 1.5);
}

DeligneScan deligne_scan(u64 p_lo, u64 p_hi, const std::vector<u64>& bad_primes) {
  if (p_lo > p_hi) throw validation_error("deligne_scan: reversed window");
  if (p_hi > max_prime_scan)
    throw validation_error("deligne_scan: window beyond p = 300");
  DeligneScan scan;
  for (u64 p : arith::primes_in_interval(std::max<u64>(p_lo, 2), p_hi)) {
    if (std::find(bad_primes.begin(), bad_primes.end(), p) != bad_primes.end())
      continue;
    DensityRecord rec;
    rec.d = p;
    rec.rho = rho_prime(p);
    rec.normalized =
        static_cast<double>(rec.rho) / (static_cast<double>(p) * static_cast<double>(p));
    rec.deligne_excess = deligne_excess(p);
    scan.max_excess = std::max(scan.max_excess, rec.deligne_excess);
    scan.records.push_back(rec);
  }
  return scan;
}

DimensionAudit dimension_sum_audit(u64 z1, u64 z, const fermat::PsiLattice& psi,
                                   u64 threshold) {
  if (z1 < threshold)
    throw validation_error("dimension_sum_audit: window starts below threshold");
  if (z1 > z) throw validation_error("dimension_sum_audit: reversed window");
  if (z > max_prime_scan)
    throw validation_error("dimension_sum_audit: window beyond p = 300");

  DimensionAudit audit;
  if (z1 == z) return audit;
  for (u64 p : arith::primes_in_interval(z1, z - 1)) {  // window [z1, z)
    if (psi.D % p == 0) continue;
    audit.sum_weight_over_p += omega_weight(p, psi) / p;
    audit.sum_four_over_p += rational(4, p);
    audit.excess_budget += 20.0 / std::pow(static_cast<double>(p), 1.5);
  }
  audit.four_loglog_diff =
      4.0 * (std::log(std::log(static_cast<double>(z))) -
             std::log(std::log(static_cast<double>(z1))));
  return audit;
}

double BoxSpec::volume() const {
  double v = 1;
  for (int j = 0; j < 3; ++j) v *= hi[j] - lo[j];
  return v;
}

RemainderScanResult remainder_scan(const fermat::PsiLattice& psi, double M,
                                   u64 Q, int box_family_size, u64 seed,
                                   u64 budget) {
  if (!(M >= 1) || M > 200)
    throw validation_error("remainder_scan: M must lie in [1, 200]");
  if (Q == 0 || Q > 100)
    throw validation_error("remainder_scan: Q must lie in [1, 100]");
  if (box_family_size < 1)
    throw validation_error("remainder_scan: need at least one box");

  RemainderScanResult result;
  const u64 D = psi.D;

  for (u64 d = 1; d <= Q; ++d)
    if (arith::mobius(static_cast<i128>(d)) != 0 && std::gcd(d, D) == 1)
      result.ds.push_back(d);

  std::vector<u64> primes;
  std::vector<u64> d_mask(result.ds.size(), 0);
  for (u64 p : arith::primes_up_to(Q))
    if (D % p != 0) primes.push_back(p);
  for (size_t i = 0; i < result.ds.size(); ++i)
    for (size_t k = 0; k < primes.size(); ++k)
      if (result.ds[i] % primes[k] == 0) d_mask[i] |= u64{1} << k;

  // Reproducible family: box k consumes exactly six engine draws, so a longer
  // family extends a shorter one drawn from the same seed.
  std::mt19937_64 engine(seed);
  const i64 Mi = static_cast<i64>(M);
  for (int k = 0; k < box_family_size; ++k) {
    BoxSpec box;
    for (int j = 0; j < 3; ++j) {
      const i64 center =
          -2 * Mi + static_cast<i64>(engine() % static_cast<u64>(4 * Mi + 1));
      const i64 side = 1 + static_cast<i64>(engine() % static_cast<u64>(Mi));
      box.lo[j] = static_cast<double>(center) - 0.5 * static_cast<double>(side);
      box.hi[j] = box.lo[j] + static_cast<double>(side);
    }
    result.boxes.push_back(box);
  }

  // Up-front cost estimate: lattice points per box times the per-point work.
  u64 points_est = 0;
  for (const auto& box : result.boxes) {
    u64 pts = 1;
    for (int j = 0; j < 3; ++j)
      pts *= static_cast<u64>((box.hi[j] - box.lo[j]) / static_cast<double>(D)) + 1;
    points_est += pts;
  }
  const u64 ops_est = points_est * (4 * primes.size() + result.ds.size());
  if (ops_est > budget)
    throw budget_error("remainder_scan: estimated " + std::to_string(ops_est) +
                       " operations exceed the budget of " +
                       std::to_string(budget));

  std::vector<std::vector<u64>> counts(result.ds.size(),
                                       std::vector<u64>(result.boxes.size(), 0));
  for (size_t b = 0; b < result.boxes.size(); ++b) {
    const BoxSpec& box = result.boxes[b];
    i64 lo[3], hi[3];
    for (int j = 0; j < 3; ++j) {
      lo[j] = static_cast<i64>(std::ceil(box.lo[j]));
      hi[j] = static_cast<i64>(std::floor(box.hi[j]));
      // Shift lo up to the residue class of the anchor mod D.
      const i64 a = static_cast<i64>(psi.anchor[j]) % static_cast<i64>(D);
      i64 r = ((lo[j] - a) % static_cast<i64>(D) + static_cast<i64>(D)) %
              static_cast<i64>(D);
      if (r != 0) lo[j] += static_cast<i64>(D) - r;
    }
    for (i64 y1 = lo[0]; y1 <= hi[0]; y1 += static_cast<i64>(D))
      for (i64 y2 = lo[1]; y2 <= hi[1]; y2 += static_cast<i64>(D))
        for (i64 y3 = lo[2]; y3 <= hi[2]; y3 += static_cast<i64>(D)) {
          const std::array<i64, 4> f = fermat::f_forms({y1, y2, y3});
          u64 mask = 0;
          for (size_t k = 0; k < primes.size(); ++k) {
            const i64 p = static_cast<i64>(primes[k]);
            if (f[0] % p == 0 || f[1] % p == 0 || f[2] % p == 0 || f[3] % p == 0)
              mask |= u64{1} << k;
          }
          for (size_t i = 0; i < result.ds.size(); ++i)
            if ((mask & d_mask[i]) == d_mask[i]) ++counts[i][b];
        }
  }

  const double D3 = std::pow(static_cast<double>(D), 3.0);
  result.sup_abs_remainder.assign(result.ds.size(), 0.0);
  for (size_t i = 0; i < result.ds.size(); ++i) {
    const u64 d = result.ds[i];
    const double rho = static_cast<double>(rho_squarefree(d));
    const double d3 = std::pow(static_cast<double>(d), 3.0);
    for (size_t b = 0; b < result.boxes.size(); ++b) {
      RemainderRecord rec;
      rec.d = d;
      rec.box_id = static_cast<int>(b);
      rec.count = counts[i][b];
      rec.main_term = rho * result.boxes[b].volume() / (d3 * D3);
      rec.remainder = static_cast<double>(rec.count) - rec.main_term;
      result.sup_abs_remainder[i] =
          std::max(result.sup_abs_remainder[i], std::abs(rec.remainder));
      result.records.push_back(rec);
    }
    result.empirical_L += result.sup_abs_remainder[i];
  }
  result.envelope = M * M * std::sqrt(static_cast<double>(Q)) +
                    M * static_cast<double>(Q) +
                    static_cast<double>(Q) * static_cast<double>(Q);
  return result;
}

}  // namespace satlab::densities
