#include <doctest.h>

#include <cmath>
#include <random>

#include <satlab/errors.hpp>
#include <satlab/fermat.hpp>

#include "support/oracles.hpp"

using namespace satlab;
using namespace satlab::fermat;

namespace {

i64 eval_terms(const std::vector<MonomialTerm>& terms, i64 y1, i64 y2, i64 y3) {
  i64 sum = 0;
  for (const auto& t : terms) {
    i64 m = t.coef;
    for (int k = 0; k < t.e1; ++k) m *= y1;
    for (int k = 0; k < t.e2; ++k) m *= y2;
    for (int k = 0; k < t.e3; ++k) m *= y3;
    sum += m;
  }
  return sum;
}

}  // namespace

TEST_SUITE_BEGIN("fermat");

TEST_CASE("worked form values") {
  CHECK(h_forms({1, 1, 1}) == std::array<i64, 4>{-6, 7, 13, 15});
  CHECK(f_forms({1, 1, 1}) == std::array<i64, 4>{29, -27, -15, -11});
  CHECK(f_product({1, 1, 1}) == -129195);
  CHECK(f_forms({1, 0, 0}) == std::array<i64, 4>{1, 1, -1, -1});
  CHECK(f_product({0, 1, 0}) == 81);
  CHECK(cube_sum({29, -27, -15, -11}) == 0);
  CHECK(cube_sum({1, 1, 1, 1}) == 4);
}

TEST_CASE("forms match the longhand oracle") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const i64 y1 = static_cast<i64>(rng() % 2001) - 1000;
    const i64 y2 = static_cast<i64>(rng() % 2001) - 1000;
    const i64 y3 = static_cast<i64>(rng() % 2001) - 1000;
    CHECK(f_forms({y1, y2, y3}) == oracle::fermat_forms(y1, y2, y3));
  }
}

TEST_CASE("cube identity holds exactly on random seeds") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 2000; ++i) {
    const i64 y1 = static_cast<i64>(rng() % 20001) - 10000;
    const i64 y2 = static_cast<i64>(rng() % 20001) - 10000;
    const i64 y3 = static_cast<i64>(rng() % 20001) - 10000;
    CHECK(cube_sum(f_forms({y1, y2, y3})) == 0);
  }
}

TEST_CASE("forms are homogeneous of degree three") {
  const Seed y{7, -3, 11};
  const auto f = f_forms(y);
  for (i64 t : {2, -3, 5}) {
    const auto ft = f_forms({t * y.y1, t * y.y2, t * y.y3});
    for (int i = 0; i < 4; ++i) CHECK(ft[i] == t * t * t * f[i]);
  }
}

TEST_CASE("seed magnitudes are capped") {
  CHECK_NOTHROW((void)f_forms({max_seed_coord, 0, 0}));
  CHECK_THROWS_AS((void)f_forms({max_seed_coord + 1, 0, 0}), validation_error);
  CHECK_THROWS_AS((void)h_forms({0, -max_seed_coord - 1, 0}), validation_error);
}

TEST_CASE("term tables reproduce the forms") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 4; ++i) {
    const auto terms = form_terms(i);
    for (int rep = 0; rep < 50; ++rep) {
      const i64 y1 = static_cast<i64>(rng() % 201) - 100;
      const i64 y2 = static_cast<i64>(rng() % 201) - 100;
      const i64 y3 = static_cast<i64>(rng() % 201) - 100;
      CHECK(eval_terms(terms, y1, y2, y3) == f_forms({y1, y2, y3})[i]);
    }
  }
}

TEST_CASE("partial tables carry the hand-computed derivatives") {
  // dF0/dy1 at (1,1,1) and dF0/dy2 at (1,2,3), differentiated by hand.
  CHECK(eval_terms(form_partial_terms(0, 1), 1, 1, 1) == 11);
  CHECK(eval_terms(form_partial_terms(0, 2), 1, 2, 3) == 148);
}

TEST_CASE("partial tables differentiate the term tables") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4; ++i)
    for (int var = 1; var <= 3; ++var) {
      // Differentiate the monomial list here, then compare by evaluation.
      std::vector<MonomialTerm> diff;
      for (auto t : form_terms(i)) {
        int& e = var == 1 ? t.e1 : var == 2 ? t.e2 : t.e3;
        if (e == 0) continue;
        t.coef *= e;
        --e;
        diff.push_back(t);
      }
      for (int rep = 0; rep < 20; ++rep) {
        const i64 y1 = static_cast<i64>(rng() % 41) - 20;
        const i64 y2 = static_cast<i64>(rng() % 41) - 20;
        const i64 y3 = static_cast<i64>(rng() % 41) - 20;
        CHECK(eval_terms(diff, y1, y2, y3) ==
              eval_terms(form_partial_terms(i, var), y1, y2, y3));
      }
    }
}

TEST_CASE("window fold and its inverse") {
  const std::array<double, 4> xi{29, -27, -15, -11};
  const auto zeta = zeta_from_xi(xi);
  CHECK(zeta[0] == doctest::Approx(-6).epsilon(1e-14));
  CHECK(zeta[1] == doctest::Approx(7).epsilon(1e-14));
  CHECK(zeta[2] == doctest::Approx(13).epsilon(1e-14));
  CHECK(zeta[3] == doctest::Approx(15).epsilon(1e-14));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(-10, 10);
  for (int rep = 0; rep < 100; ++rep) {
    std::array<double, 4> v{unit(rng), unit(rng), unit(rng), unit(rng)};
    const auto round = xi_from_zeta(zeta_from_xi(v));
    for (int i = 0; i < 4; ++i)
      CHECK(round[i] == doctest::Approx(v[i]).epsilon(1e-12));
  }
}

TEST_CASE("surface window membership") {
  CHECK(xi_in_U1({29.0 / 29, -27.0 / 29, -15.0 / 29, -11.0 / 29}));
  CHECK_FALSE(xi_in_U1({1, 1, 1, 1}));         // off the surface
  CHECK_FALSE(xi_in_U1({2, -2, 1, -1}));       // on a line
  CHECK_THROWS_AS((void)xi_in_U1({0, 0, 0, 0}), validation_error);
}

TEST_CASE("region anchor hand case") {
  const std::array<double, 4> zeta{-6, 7, 13, 15};
  const auto r = gamma_from_zeta(zeta);
  CHECK(r.gamma0 == doctest::Approx(-1.0 / 711).epsilon(1e-12));
  for (int j = 0; j < 3; ++j)
    CHECK(r.gamma[j] == doctest::Approx(1.0).epsilon(1e-9));
  // gamma1 = -3 gamma0 A with A = 237 here.
  CHECK(-3.0 * 237.0 * r.gamma0 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("region anchor rejects degenerate targets") {
  CHECK_THROWS_AS((void)gamma_from_zeta({0, 1, 1, 1}), degenerate_target_error);
  // A = z0 z2 + 3 z1 z3 = 0 for (1, 1, 3, -1).
  CHECK_THROWS_AS((void)gamma_from_zeta({1, 1, 3, -1}), degenerate_target_error);
}

TEST_CASE("target construction and shrink loop") {
  const std::array<double, 4> xi{29.0 / 29, -27.0 / 29, -15.0 / 29, -11.0 / 29};
  const FermatTarget t = make_target(xi, 0.5, 1'000'000);
  CHECK(t.delta == doctest::Approx(0.015625).epsilon(1e-15));
  for (int j = 0; j < 3; ++j)
    CHECK(t.gamma[j] == doctest::Approx(0.3254872647376676).epsilon(1e-12));

  // Every corner of the shrunk cube satisfies the quarter-window bound.
  for (int corner = 0; corner < 8; ++corner) {
    std::array<double, 3> g{};
    for (int j = 0; j < 3; ++j)
      g[j] = t.gamma[j] + ((corner >> j) & 1 ? t.delta : -t.delta);
    const double h0 = -6 * g[0] * g[1] * g[2];
    const double h1 = g[0] * (g[0] * g[0] + 3 * g[1] * g[1] + 3 * g[2] * g[2]);
    const double h2 = g[1] * (g[0] * g[0] + 3 * g[1] * g[1] + 9 * g[2] * g[2]);
    const double h3 = 3 * g[2] * (g[0] * g[0] + g[1] * g[1] + 3 * g[2] * g[2]);
    const std::array<double, 4> h{h0, h1, h2, h3};
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(h[i] - t.zeta[i]) < 0.5 / 4);
  }

  CHECK_THROWS_AS((void)make_target(xi, 0.0, 1'000'000), validation_error);
  // Unreachable window: the shrink loop bottoms out at its floor.
  CHECK_THROWS_AS((void)make_target(xi, 1e-9, 1'000'000), validation_error);
}

TEST_CASE("seed box of the worked target") {
  const std::array<double, 4> xi{29.0 / 29, -27.0 / 29, -15.0 / 29, -11.0 / 29};
  const FermatTarget t = make_target(xi, 0.5, 1'000'000);
  const SeedBox box = target_region(t);
  CHECK(box.lo == std::array<i64, 3>{31, 31, 31});
  CHECK(box.hi == std::array<i64, 3>{34, 34, 34});
  CHECK(box.volume() == 64);
  CHECK_FALSE(box.empty());

  // Too small a height leaves no integer seeds.
  FermatTarget tiny = t;
  tiny.B = 100;
  CHECK_THROWS_AS((void)target_region(tiny), validation_error);
}

TEST_CASE("nonsingularity mod p") {
  for (int i = 0; i < 4; ++i) {
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL})
      CHECK(is_nonsingular_mod_p(i, p) == !oracle::fermat_form_singular(i, p));
  }
  CHECK_FALSE(is_nonsingular_mod_p(0, 2));
  CHECK_FALSE(is_nonsingular_mod_p(0, 3));
  CHECK(is_nonsingular_mod_p(0, 5));
  CHECK_THROWS_AS((void)is_nonsingular_mod_p(0, 4), validation_error);
  CHECK_THROWS_AS((void)is_nonsingular_mod_p(4, 5), validation_error);
  CHECK_THROWS_AS((void)is_nonsingular_mod_p(0, 10'007), validation_error);
}

TEST_CASE("mod-p zero counts match the full scan oracle") {
  CHECK(f_zero_count_mod_p(2) == 4);
  CHECK(f_zero_count_mod_p(3) == 21);
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 23ULL})
    CHECK(f_zero_count_mod_p(p) == oracle::fermat_zero_count_naive(p));
  CHECK_THROWS_AS((void)f_zero_count_mod_p(6), validation_error);
  CHECK_THROWS_AS((void)f_zero_count_mod_p(1009), budget_error);
}

TEST_CASE("bad prime detection") {
  const PsiLattice psi = build_psi(50);
  CHECK(psi.D == 6);
  CHECK(psi.anchor == std::array<i64, 3>{1, 0, 0});
  REQUIRE(psi.bad_primes.size() == 2);
  CHECK(psi.bad_primes[0].p == 2);
  CHECK(psi.bad_primes[0].reason == BadPrimeReason::singular_form);
  CHECK(psi.bad_primes[1].p == 3);
  CHECK(psi.bad_primes[1].reason == BadPrimeReason::singular_form);

  // A drastic anomaly threshold flags well-behaved primes by their counts.
  const PsiLattice strict = build_psi(10, 0.1);
  CHECK(strict.D == 210);  // 5 and 7 join as density anomalies
  bool saw_anomaly = false;
  for (const auto& bp : strict.bad_primes)
    saw_anomaly = saw_anomaly || bp.reason == BadPrimeReason::density_anomaly;
  CHECK(saw_anomaly);

  CHECK_THROWS_AS((void)build_psi(1001), validation_error);
}

TEST_SUITE_END();
