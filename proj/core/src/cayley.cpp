#include "satlab/cayley.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "satlab/arith.hpp"
#include "satlab/errors.hpp"

namespace satlab::cayley {

namespace {

u64 magnitude(i64 v) { return v < 0 ? u64{0} - static_cast<u64>(v) : static_cast<u64>(v); }

u64 gcd_u(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool coprime(i64 a, i64 b) { return gcd_u(magnitude(a), magnitude(b)) == 1; }

std::string pair_name(int slot) {
  const auto [a, b] = pair_order[slot];
  return std::string("z") + static_cast<char>('0' + a) + static_cast<char>('0' + b);
}

void check_range(const TorsorVars& t) {
  for (i64 v : t.y)
    if (magnitude(v) > static_cast<u64>(max_torsor_coord))
      throw validation_error("torsor variable magnitude above 1e6");
  for (i64 v : t.z)
    if (magnitude(v) > static_cast<u64>(max_torsor_coord))
      throw validation_error("torsor variable magnitude above 1e6");
}

// The four terms of the torsor equation: term i multiplies y_i by the three
// z's whose pair avoids i.
std::array<i128, 4> equation_terms(const TorsorVars& t) {
  std::array<i128, 4> term;
  for (int i = 0; i < 4; ++i) {
    i128 prod = t.y[i];
    for (int s = 0; s < 6; ++s) {
      const auto [a, b] = pair_order[s];
      if (a != i && b != i) prod *= t.z[s];
    }
    term[i] = prod;
  }
  return term;
}

}  // namespace

int pair_slot(int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
    throw validation_error("pair_slot: need two distinct indices in 0..3");
  if (i > j) std::swap(i, j);
  for (int s = 0; s < 6; ++s)
    if (pair_order[s].first == i && pair_order[s].second == j) return s;
  throw std::logic_error("pair_slot: unreachable");
}

TorsorValidation validate_torsor(const TorsorVars& t) {
  check_range(t);
  TorsorValidation result;
  auto fail = [&result](std::string why) {
    result.ok = false;
    result.violation = std::move(why);
    return result;
  };

  // 1. nonvanishing / positivity
  for (int i = 0; i < 4; ++i)
    if (t.y[i] == 0)
      return fail("y" + std::to_string(i) + " is zero");
  for (int s = 0; s < 6; ++s)
    if (t.z[s] <= 0) return fail(pair_name(s) + " is not positive");

  // 2. y's pairwise coprime
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!coprime(t.y[i], t.y[j]))
        return fail("gcd(y" + std::to_string(i) + ", y" + std::to_string(j) +
                    ") != 1");

  // 3. y_i coprime to z_ab for i in {a, b}
  for (int s = 0; s < 6; ++s) {
    const auto [a, b] = pair_order[s];
    for (int i : {a, b})
      if (!coprime(t.y[i], t.z[s]))
        return fail("gcd(y" + std::to_string(i) + ", " + pair_name(s) +
                    ") != 1");
  }

  // 4. z's pairwise coprime
  for (int s = 0; s < 6; ++s)
    for (int u = s + 1; u < 6; ++u)
      if (!coprime(t.z[s], t.z[u]))
        return fail("gcd(" + pair_name(s) + ", " + pair_name(u) + ") != 1");

  // 5. the torsor equation
  const std::array<i128, 4> term = equation_terms(t);
  if (term[0] + term[1] + term[2] + term[3] != 0)
    return fail("torsor equation not satisfied");

  // 6. partial sums with the y0 term
  for (int i = 1; i < 4; ++i)
    if (term[0] + term[i] == 0)
      return fail("partial sum with y" + std::to_string(i) + " vanishes");

  return result;
}

CayleyPoint torsor_to_point(const TorsorVars& t) {
  const TorsorValidation v = validate_torsor(t);
  if (!v.ok) throw validation_error("torsor_to_point: " + v.violation);

  std::array<i64, 4> x{};
  for (int i = 0; i < 4; ++i) {
    // x_i multiplies the z's whose pair contains i by the y's other than y_i.
    i128 prod = 1;
    for (int s = 0; s < 6; ++s) {
      const auto [a, b] = pair_order[s];
      if (a == i || b == i) prod *= t.z[s];
    }
    for (int j = 0; j < 4; ++j)
      if (j != i) prod *= t.y[j];
    if (prod > std::numeric_limits<i64>::max() ||
        prod < std::numeric_limits<i64>::min())
      throw validation_error("torsor_to_point: coordinate exceeds int64");
    x[i] = static_cast<i64>(prod);
  }

  if (!on_cayley(x) || !in_U2(x) || !is_primitive(x))
    throw std::logic_error("torsor_to_point: postcondition failed");
  return point_from_coords(x);
}

VVariables v_variables(const TorsorVars& t) {
  const TorsorValidation check = validate_torsor(t);
  if (!check.ok) throw validation_error("v_variables: " + check.violation);

  VVariables out;
  std::array<i128, 6> raw{};
  for (int s = 0; s < 6; ++s) {
    const auto [a, b] = pair_order[s];
    int c = -1, d = -1;
    for (int i = 0; i < 4; ++i) {
      if (i == a || i == b) continue;
      (c < 0 ? c : d) = i;
    }
    const i128 num = static_cast<i128>(t.z[pair_slot(a, c)]) *
                         t.z[pair_slot(a, d)] * t.y[b] +
                     static_cast<i128>(t.z[pair_slot(b, c)]) *
                         t.z[pair_slot(b, d)] * t.y[a];
    if (num % t.z[s] != 0) {
      out.integral = false;
      continue;
    }
    raw[s] = num / t.z[s];
    out.v[s] = static_cast<i64>(raw[s]);
  }
  if (!out.integral) return out;

  out.complementary = raw[pair_slot(0, 1)] == -raw[pair_slot(2, 3)] &&
                      raw[pair_slot(0, 2)] == -raw[pair_slot(1, 3)] &&
                      raw[pair_slot(0, 3)] == -raw[pair_slot(1, 2)];

  const auto sq = [](i64 z) { return static_cast<i128>(z) * z; };
  out.quadrics[0] =
      raw[pair_slot(0, 1)] * raw[pair_slot(0, 2)] ==
      sq(t.z[pair_slot(0, 3)]) * t.y[1] * t.y[2] -
          sq(t.z[pair_slot(1, 2)]) * t.y[0] * t.y[3];
  out.quadrics[1] =
      raw[pair_slot(0, 1)] * raw[pair_slot(0, 3)] ==
      sq(t.z[pair_slot(0, 2)]) * t.y[1] * t.y[3] -
          sq(t.z[pair_slot(1, 3)]) * t.y[0] * t.y[2];
  out.quadrics[2] =
      raw[pair_slot(0, 2)] * raw[pair_slot(0, 3)] ==
      sq(t.z[pair_slot(0, 1)]) * t.y[2] * t.y[3] -
          sq(t.z[pair_slot(2, 3)]) * t.y[0] * t.y[1];
  return out;
}

bool on_cayley(const std::array<i64, 4>& x) {
  if (x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0)
    throw validation_error("on_cayley: zero vector");
  int256 sum = 0;
  for (int i = 0; i < 4; ++i) {
    int256 prod = 1;
    for (int j = 0; j < 4; ++j)
      if (j != i) prod *= int256(x[j]);
    sum += prod;
  }
  return sum == 0;
}

bool in_U2(const std::array<i64, 4>& x) {
  if (!on_cayley(x)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (x[i] == 0 && x[j] == 0) return false;
  static constexpr int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : pairing)
    if (x[pr[0]] + x[pr[1]] == 0 && x[pr[2]] + x[pr[3]] == 0) return false;
  return true;
}

bool is_primitive(const std::array<i64, 4>& x) {
  u64 g = 0;
  for (i64 v : x) g = gcd_u(g, magnitude(v));
  return g == 1;
}

std::array<i64, 4> normalize_sign(std::array<i64, 4> x) {
  for (i64 v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : x) w = -w;
    break;
  }
  return x;
}

CayleyPoint point_from_coords(const std::array<i64, 4>& x) {
  CayleyPoint pt;
  pt.x = x;
  pt.primitive = is_primitive(x);
  std::set<u128> primes;
  for (i64 v : x) {
    if (v == 0)
      throw validation_error("point_from_coords: zero coordinate");
    const arith::FactorMultiset f = arith::factorize(static_cast<i128>(v));
    for (const auto& e : f.factors) {
      pt.omega += static_cast<int>(e.exponent);
      primes.insert(e.prime);
    }
  }
  pt.distinct_primes = static_cast<int>(primes.size());
  return pt;
}

}  // namespace satlab::cayley
