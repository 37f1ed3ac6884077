#include "satlab/fermat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "satlab/arith.hpp"
#include "satlab/errors.hpp"

namespace satlab::fermat {

namespace {

void check_seed_range(const Seed& y) {
  const i64 m = std::max({std::abs(y.y1), std::abs(y.y2), std::abs(y.y3)});
  if (m > max_seed_coord) {
    throw validation_error(
        "seed coordinate exceeds the exact-arithmetic range (600000)");
  }
}

std::array<i64, 4> fold(const std::array<i64, 4>& h) {
  return {h[0] + h[1] + h[2] + h[3], h[0] + h[1] - h[2] - h[3],
          h[0] - h[1] + h[2] - h[3], h[0] - h[1] - h[2] + h[3]};
}

// ---- symbolic coefficient tables -----------------------------------------

using Terms = std::vector<MonomialTerm>;

Terms canonical(Terms t) {
  std::sort(t.begin(), t.end(), [](const MonomialTerm& a, const MonomialTerm& b) {
    return std::tie(a.e1, a.e2, a.e3) < std::tie(b.e1, b.e2, b.e3);
  });
  Terms out;
  for (const auto& m : t) {
    if (!out.empty() && out.back().e1 == m.e1 && out.back().e2 == m.e2 &&
        out.back().e3 == m.e3) {
      out.back().coef += m.coef;
    } else {
      out.push_back(m);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const MonomialTerm& m) { return m.coef == 0; }),
            out.end());
  return out;
}

Terms add(const Terms& a, const Terms& b, i64 sb = 1) {
  Terms t = a;
  for (auto m : b) {
    m.coef *= sb;
    t.push_back(m);
  }
  return canonical(t);
}

Terms differentiate(const Terms& a, int var) {
  Terms t;
  for (auto m : a) {
    int* e = var == 1 ? &m.e1 : var == 2 ? &m.e2 : &m.e3;
    if (*e == 0) continue;
    m.coef *= *e;
    --*e;
    t.push_back(m);
  }
  return canonical(t);
}

struct FormTables {
  std::array<Terms, 4> h;
  std::array<Terms, 4> f;
  std::array<std::array<Terms, 3>, 4> f_partial;  // [form][var-1]
};

const FormTables& tables() {
  static const FormTables t = [] {
    FormTables ft;
    ft.h[0] = canonical({{1, 1, 1, -6}});
    ft.h[1] = canonical({{3, 0, 0, 1}, {1, 2, 0, 3}, {1, 0, 2, 3}});
    ft.h[2] = canonical({{2, 1, 0, 1}, {0, 3, 0, 3}, {0, 1, 2, 9}});
    ft.h[3] = canonical({{2, 0, 1, 3}, {0, 2, 1, 3}, {0, 0, 3, 9}});
    const i64 sign[4][4] = {
        {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i) {
      Terms f;
      for (int j = 0; j < 4; ++j) f = add(f, ft.h[j], sign[i][j]);
      ft.f[i] = f;
      for (int v = 1; v <= 3; ++v) ft.f_partial[i][v - 1] = differentiate(f, v);
    }
    return ft;
  }();
  return t;
}

u64 eval_terms_mod(const Terms& terms, u64 a, u64 b, u64 c, u64 p) {
  u64 pw1[4], pw2[4], pw3[4];
  pw1[0] = pw2[0] = pw3[0] = 1 % p;
  for (int k = 1; k < 4; ++k) {
    pw1[k] = pw1[k - 1] * a % p;
    pw2[k] = pw2[k - 1] * b % p;
    pw3[k] = pw3[k - 1] * c % p;
  }
  u64 acc = 0;
  for (const auto& m : terms) {
    const u64 coef = static_cast<u64>(((m.coef % static_cast<i64>(p)) +
                                      static_cast<i64>(p))) % p;
    acc = (acc + coef * (pw1[m.e1] * pw2[m.e2] % p) % p * pw3[m.e3]) % p;
  }
  return acc;
}

bool singular_at(int form_index, u64 a, u64 b, u64 c, u64 p) {
  const FormTables& t = tables();
  if (eval_terms_mod(t.f[form_index], a, b, c, p) != 0) return false;
  for (int v = 0; v < 3; ++v)
    if (eval_terms_mod(t.f_partial[form_index][v], a, b, c, p) != 0)
      return false;
  return true;
}

std::array<double, 4> h_eval(double g1, double g2, double g3) {
  return {-6 * g1 * g2 * g3, g1 * (g1 * g1 + 3 * g2 * g2 + 3 * g3 * g3),
          g2 * (g1 * g1 + 3 * g2 * g2 + 9 * g3 * g3),
          3 * g3 * (g1 * g1 + g2 * g2 + 3 * g3 * g3)};
}

}  // namespace

std::array<i64, 4> h_forms(const Seed& y) {
  check_seed_range(y);
  const i64 a = y.y1, b = y.y2, c = y.y3;
  return {-6 * a * b * c, a * (a * a + 3 * b * b + 3 * c * c),
          b * (a * a + 3 * b * b + 9 * c * c),
          3 * c * (a * a + b * b + 3 * c * c)};
}

std::array<i64, 4> f_forms(const Seed& y) {
  const std::array<i64, 4> f = fold(h_forms(y));
  if (cube_sum(f) != 0)
    throw std::logic_error("f_forms: cube identity violated (internal bug)");
  return f;
}

int256 f_product(const Seed& y) {
  const std::array<i64, 4> f = f_forms(y);
  int256 prod = 1;
  for (i64 v : f) prod *= int256(v);
  return prod;
}

int256 cube_sum(const std::array<i64, 4>& f) {
  int256 s = 0;
  for (i64 v : f) {
    const int256 w(v);
    s += w * w * w;
  }
  return s;
}

std::array<double, 4> zeta_from_xi(const std::array<double, 4>& xi) {
  return {0.25 * (xi[0] + xi[1] + xi[2] + xi[3]),
          0.25 * (xi[0] + xi[1] - xi[2] - xi[3]),
          0.25 * (xi[0] - xi[1] + xi[2] - xi[3]),
          0.25 * (xi[0] - xi[1] - xi[2] + xi[3])};
}

std::array<double, 4> xi_from_zeta(const std::array<double, 4>& z) {
  return {z[0] + z[1] + z[2] + z[3], z[0] + z[1] - z[2] - z[3],
          z[0] - z[1] + z[2] - z[3], z[0] - z[1] - z[2] + z[3]};
}

bool xi_in_U1(const std::array<double, 4>& xi) {
  double norm2 = 0, cube = 0, cube_scale = 0;
  for (double v : xi) {
    norm2 += v * v;
    cube += v * v * v;
    cube_scale += std::abs(v * v * v);
  }
  if (norm2 == 0) throw validation_error("xi_in_U1: zero vector");

  if (std::abs(cube) > 1e-9 * cube_scale) return false;  // off the surface

  const double line_tol = 1e-12 * std::sqrt(norm2);
  static constexpr int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : pairing) {
    if (std::abs(xi[pr[0]] + xi[pr[1]]) <= line_tol &&
        std::abs(xi[pr[2]] + xi[pr[3]]) <= line_tol)
      return false;  // on a rational line
  }
  return true;
}

GammaResult gamma_from_zeta(const std::array<double, 4>& z) {
  double scale = 0;
  for (double v : z) scale = std::max(scale, std::abs(v));
  if (scale == 0) throw degenerate_target_error("gamma_from_zeta: zero zeta");

  const double A = z[0] * z[2] + 3 * z[1] * z[3];
  const double Bq = z[2] * z[3] - z[0] * z[1];
  const double Cq = z[0] * z[0] + 3 * z[3] * z[3];

  // Degeneracy thresholds sized by the forward error budget: zeta carries
  // ~1e-16 relative noise, and the cube roots pass on a third of the relative
  // error of each combination, so values below 1e-6 of the natural scale
  // cannot support the 1e-9 anchor postcondition.
  if (std::abs(z[0]) <= 1e-6 * scale)
    throw degenerate_target_error("gamma_from_zeta: zeta0 ~ 0");
  const double tol2 = 1e-6 * scale * scale;
  if (std::abs(A) <= tol2 || std::abs(Bq) <= tol2 || std::abs(Cq) <= tol2)
    throw degenerate_target_error(
        "gamma_from_zeta: vanishing quadratic combination");

  const double g0 = std::cbrt(4.0) / 6.0 * std::cbrt(z[0]) /
                    (std::cbrt(A) * std::cbrt(Bq) * std::cbrt(Cq));
  GammaResult r;
  r.gamma0 = g0;
  r.gamma = {-3 * g0 * A, -3 * g0 * Bq, -g0 * Cq};

  const std::array<double, 4> h = h_eval(r.gamma[0], r.gamma[1], r.gamma[2]);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(h[i] - z[i]) > 1e-9 * scale)
      throw std::logic_error("gamma_from_zeta: anchor check failed");
  }
  return r;
}

FermatTarget make_target(const std::array<double, 4>& xi, double epsilon,
                         u64 B, double delta0) {
  if (!(epsilon > 0)) throw validation_error("make_target: epsilon must be > 0");
  if (B == 0) throw validation_error("make_target: B must be positive");
  if (!(delta0 > 0) || delta0 >= 1)
    throw validation_error("make_target: delta0 must lie in (0, 1)");
  if (!xi_in_U1(xi))
    throw validation_error("make_target: xi rejected (off surface or on a line)");

  FermatTarget t;
  t.xi = xi;
  t.zeta = zeta_from_xi(xi);
  const GammaResult g = gamma_from_zeta(t.zeta);
  t.gamma0 = g.gamma0;
  t.gamma = g.gamma;
  t.epsilon = epsilon;
  t.B = B;

  // Shrink delta until every corner of the cube gamma +- delta stays within
  // epsilon/4 of zeta in every coordinate.  By the quarter-fold this pins the
  // form values within epsilon of xi across the whole box.
  double delta = delta0;
  for (;;) {
    double worst = 0;
    for (int corner = 0; corner < 8; ++corner) {
      const double g1 = t.gamma[0] + ((corner & 1) ? delta : -delta);
      const double g2 = t.gamma[1] + ((corner & 2) ? delta : -delta);
      const double g3 = t.gamma[2] + ((corner & 4) ? delta : -delta);
      const std::array<double, 4> h = h_eval(g1, g2, g3);
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(h[i] - t.zeta[i]));
    }
    if (worst < epsilon / 4) break;
    delta /= 2;
    if (delta < 1e-3)
      throw validation_error("make_target: delta shrink reached the 1e-3 floor");
  }
  t.delta = delta;
  return t;
}

bool SeedBox::empty() const {
  for (int j = 0; j < 3; ++j)
    if (hi[j] < lo[j]) return true;
  return false;
}

u128 SeedBox::volume() const {
  if (empty()) return 0;
  u128 v = 1;
  for (int j = 0; j < 3; ++j) v *= static_cast<u128>(hi[j] - lo[j] + 1);
  return v;
}

SeedBox target_region(const FermatTarget& t) {
  const double root = std::cbrt(static_cast<double>(t.B));
  SeedBox box;
  for (int j = 0; j < 3; ++j) {
    box.lo[j] = static_cast<i64>(std::ceil((t.gamma[j] - t.delta) * root));
    box.hi[j] = static_cast<i64>(std::floor((t.gamma[j] + t.delta) * root));
  }
  if (box.empty())
    throw validation_error("target_region: empty box (B too small)");
  for (int j = 0; j < 3; ++j) {
    if (std::max(std::abs(box.lo[j]), std::abs(box.hi[j])) > max_seed_coord)
      throw validation_error("target_region: box exceeds exact seed range");
  }
  return box;
}

bool is_nonsingular_mod_p(int form_index, u64 p) {
  if (form_index < 0 || form_index > 3)
    throw validation_error("is_nonsingular_mod_p: form index out of range");
  if (p > 10'000)
    throw validation_error("is_nonsingular_mod_p: p beyond the scan bound 1e4");
  if (!arith::is_prime(p))
    throw validation_error("is_nonsingular_mod_p: p must be prime");

  // The singular locus is a cone, so scanning one representative per
  // projective point suffices: (1, b, c), (0, 1, c), (0, 0, 1).
  for (u64 b = 0; b < p; ++b)
    for (u64 c = 0; c < p; ++c)
      if (singular_at(form_index, 1, b, c, p)) return false;
  for (u64 c = 0; c < p; ++c)
    if (singular_at(form_index, 0, 1, c, p)) return false;
  if (singular_at(form_index, 0, 0, 1, p)) return false;
  return true;
}

u64 f_zero_count_mod_p(u64 p) {
  if (p > 1000) throw budget_error("f_zero_count_mod_p: p above 1000");
  if (!arith::is_prime(p))
    throw validation_error("f_zero_count_mod_p: p must be prime");

  // Group the monomials of each form by the exponent of y3, giving a cubic in
  // y3 per (y1, y2) pair; the product vanishes iff some form does.
  const FormTables& t = tables();
  struct Grouped {
    int e1, e2;
    i64 coef;
  };
  std::array<std::array<std::vector<Grouped>, 4>, 4> grouped;  // [form][e3]
  for (int i = 0; i < 4; ++i)
    for (const auto& m : t.f[i])
      grouped[i][m.e3].push_back({m.e1, m.e2, m.coef});

  u64 count = 0;
  for (u64 a = 0; a < p; ++a) {
    u64 pw1[4] = {1 % p, a % p, a * a % p, a * a % p * a % p};
    for (u64 b = 0; b < p; ++b) {
      u64 pw2[4] = {1 % p, b % p, b * b % p, b * b % p * b % p};
      u64 coef[4][4];  // [form][power of y3]
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
          u64 acc = 0;
          for (const auto& g : grouped[i][k]) {
            const u64 cc = static_cast<u64>(((g.coef % static_cast<i64>(p)) +
                                            static_cast<i64>(p))) % p;
            acc = (acc + cc * pw1[g.e1] % p * pw2[g.e2]) % p;
          }
          coef[i][k] = acc;
        }
      for (u64 c = 0; c < p; ++c) {
        bool zero = false;
        for (int i = 0; i < 4 && !zero; ++i) {
          // Horner in y3.
          u64 v = coef[i][3];
          v = (v * c + coef[i][2]) % p;
          v = (v * c + coef[i][1]) % p;
          v = (v * c + coef[i][0]) % p;
          zero = (v == 0);
        }
        if (zero) ++count;
      }
    }
  }
  return count;
}

PsiLattice build_psi(u64 scan_limit, double c_check) {
  if (scan_limit > 1000)
    throw validation_error("build_psi: scan limit above 1000");

  PsiLattice psi;
  u128 D = 1;
  for (u64 p : arith::primes_up_to(scan_limit)) {
    int singular_form = -1;
    for (int i = 0; i < 4 && singular_form < 0; ++i)
      if (!is_nonsingular_mod_p(i, p)) singular_form = i;

    bool bad = singular_form >= 0;
    BadPrimeReason reason = BadPrimeReason::singular_form;
    if (!bad && p <= 300) {
      // Density anomaly check; beyond 300 the p^3 count is out of budget and
      // the singularity test alone decides.
      const u64 rho = f_zero_count_mod_p(p);
      const double expected = 4.0 * static_cast<double>(p) * static_cast<double>(p);
      const double excess = std::abs(static_cast<double>(rho) - expected);
      if (excess > c_check * std::pow(static_cast<double>(p), 1.5)) {
        bad = true;
        reason = BadPrimeReason::density_anomaly;
      }
    }
    if (bad) {
      psi.bad_primes.push_back({p, reason, singular_form});
      D *= p;
      if (D > static_cast<u128>(std::numeric_limits<u64>::max()))
        throw budget_error("build_psi: modulus D overflows 64 bits");
    }
  }
  psi.D = static_cast<u64>(D);
  return psi;
}

std::vector<MonomialTerm> form_terms(int form_index) {
  if (form_index < 0 || form_index > 3)
    throw validation_error("form_terms: form index out of range");
  return tables().f[form_index];
}

std::vector<MonomialTerm> form_partial_terms(int form_index, int var) {
  if (form_index < 0 || form_index > 3)
    throw validation_error("form_partial_terms: form index out of range");
  if (var < 1 || var > 3)
    throw validation_error("form_partial_terms: variable index out of range");
  return tables().f_partial[form_index][var - 1];
}

}  // namespace satlab::fermat
