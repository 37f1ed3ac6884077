#pragma once

#include <array>
#include <vector>

#include "satlab/wide.hpp"

namespace satlab::fermat {

// Integer seed of the cubic parametrisation.
struct Seed {
  i64 y1 = 0, y2 = 0, y3 = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// Largest |y_j| kept exact in int64: each form value is bounded by
// 41*max|y|^3, and 41 * 600000^3 < 2^63.  The 256-bit quartic product then
// always fits.
inline constexpr i64 max_seed_coord = 600'000;

// The four auxiliary cubics
//   H0 = -6 y1 y2 y3
//   H1 = y1 (y1^2 + 3 y2^2 + 3 y3^2)
//   H2 = y2 (y1^2 + 3 y2^2 + 9 y3^2)
//   H3 = 3 y3 (y1^2 + y2^2 + 3 y3^2)
std::array<i64, 4> h_forms(const Seed& y);

// The +/- fold of the H's:
//   F0 = H0+H1+H2+H3, F1 = H0+H1-H2-H3, F2 = H0-H1+H2-H3, F3 = H0-H1-H2+H3.
// Satisfies F0^3+F1^3+F2^3+F3^3 = 0 identically (checked in exact arithmetic
// on every call).
std::array<i64, 4> f_forms(const Seed& y);

// F0*F1*F2*F3, exact.
int256 f_product(const Seed& y);

// Sum of cubes of an arbitrary 4-vector, exact; zero for any f_forms output.
int256 cube_sum(const std::array<i64, 4>& f);

// Quarter-fold between window coordinates: zeta_i = (1/4) (+-xi) combinations,
// chosen so that zeta(F(y)) = H(y).  xi_from_zeta is the inverse fold (the
// fold matrix M satisfies M^2 = 4*I).
std::array<double, 4> zeta_from_xi(const std::array<double, 4>& xi);
std::array<double, 4> xi_from_zeta(const std::array<double, 4>& zeta);

// True iff xi lies on the cubic surface (relative 1e-9) and on none of the
// three real rational lines xi_i + xi_j = xi_k + xi_l = 0 (tolerance
// 1e-12 * |xi|).  Rejects the zero vector.
bool xi_in_U1(const std::array<double, 4>& xi);

// Anchor of the search region: gamma0 from the three quadratic combinations
//   A = z0 z2 + 3 z1 z3,  Bq = z2 z3 - z0 z1,  Cq = z0^2 + 3 z3^2,
// all required nonzero, via real cube roots; then
//   gamma1 = -3 gamma0 A,  gamma2 = -3 gamma0 Bq,  gamma3 = -gamma0 Cq.
// Postcondition H(gamma) = zeta is re-checked to relative 1e-9.
// Throws degenerate_target_error when z0 or any of A, Bq, Cq is (near) zero.
struct GammaResult {
  double gamma0 = 0;
  std::array<double, 3> gamma{};
};
GammaResult gamma_from_zeta(const std::array<double, 4>& zeta);

// A fully constructed scan target: window vector, its fold, region anchor,
// half-width delta chosen by the shrink loop, window width epsilon, and the
// height parameter B.
struct FermatTarget {
  std::array<double, 4> xi{};
  std::array<double, 4> zeta{};
  double gamma0 = 0;
  std::array<double, 3> gamma{};
  double delta = 0;
  double epsilon = 0;
  u64 B = 0;
};

// Validates xi (xi_in_U1), builds the anchor, then shrinks delta: starting
// from delta0, halve until every corner of the cube gamma +- delta satisfies
// max_i |H_i(corner) - zeta_i| < epsilon/4, stopping with an error at the
// 1e-3 floor.
FermatTarget make_target(const std::array<double, 4>& xi, double epsilon,
                         u64 B, double delta0 = 0.25);

// Inclusive integer seed box.
struct SeedBox {
  std::array<i64, 3> lo{}, hi{};

  bool empty() const;
  u128 volume() const;  // 0 if empty
};

// The integer box prod_j [ceil((gamma_j - delta) B^{1/3}),
//                         floor((gamma_j + delta) B^{1/3})].
// Throws validation_error when empty (B too small for the chosen delta).
SeedBox target_region(const FermatTarget& t);

enum class BadPrimeReason { singular_form, density_anomaly };

struct BadPrime {
  u64 p = 0;
  BadPrimeReason reason = BadPrimeReason::singular_form;
  int form_index = -1;  // which form was singular; -1 for density anomalies
};

// Congruence class y = (1,0,0) mod D.  Every form value at the anchor is +-1,
// so gcd(F_i(y), D) = 1 automatically on the class.
struct PsiLattice {
  u64 D = 1;
  std::array<i64, 3> anchor{1, 0, 0};
  std::vector<BadPrime> bad_primes;
};

// True iff no nonzero point of F_p^3 has F_i = 0 with all three partials = 0.
// Checked over a projective point set (the singular locus is a cone), cost
// O(p^2); p must be a prime <= 1e4.
bool is_nonsingular_mod_p(int form_index, u64 p);

// #{ y mod p : F0 F1 F2 F3 = 0 mod p }, by exhaustive p^3 enumeration.
// Guarded at p <= 1000.
u64 f_zero_count_mod_p(u64 p);

// Bad-prime detector: p <= scan_limit is bad when some F_i is singular mod p,
// or (for p <= 300, where the p^3 count is affordable) when
// |rho(p) - 4p^2| > c_check * p^{3/2}.  D = product of bad primes.
// scan_limit <= 1000.
PsiLattice build_psi(u64 scan_limit = 50, double c_check = 20.0);

// Coefficient views of the forms, for the mod-p scans and for independent
// verification in tests: the list of monomials of F_i, or of dF_i/dy_var
// (var in {1,2,3}).
struct MonomialTerm {
  int e1 = 0, e2 = 0, e3 = 0;
  i64 coef = 0;

  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};
std::vector<MonomialTerm> form_terms(int form_index);
std::vector<MonomialTerm> form_partial_terms(int form_index, int var);

}  // namespace satlab::fermat
