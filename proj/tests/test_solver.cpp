#include <doctest.h>

#include <cmath>
#include <set>

#include <satlab/errors.hpp>
#include <satlab/prime_solver.hpp>

#include "support/oracles.hpp"

using namespace satlab;
using namespace satlab::solver;

namespace {

// Quick target builder for synthetic interval tests.
CayleyTarget synthetic(std::array<Interval, 4> iv, std::array<int, 4> beta) {
  CayleyTarget t;
  t.intervals = iv;
  t.beta = beta;
  t.B = 1000;
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("sign decomposition of the reference direction") {
  const auto [eta, beta] = eta_beta_from_xi({3, 3, 3, -1});
  CHECK(eta[0] == doctest::Approx(1.0));
  CHECK(eta[1] == doctest::Approx(1.0));
  CHECK(eta[2] == doctest::Approx(1.0));
  CHECK(eta[3] == doctest::Approx(3.0));
  CHECK(beta == std::array<int, 4>{-1, -1, -1, 1});

  // beta . eta = c sum 1/xi_j = 0 on the surface.
  double dot = 0;
  for (int j = 0; j < 4; ++j) dot += beta[j] * eta[j];
  CHECK(dot == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("sign decomposition rejects bad directions") {
  CHECK_THROWS_AS((void)eta_beta_from_xi({0, 1, 1, 1}), validation_error);
  CHECK_THROWS_AS((void)eta_beta_from_xi({1, 2, 3, 4}), validation_error);
  CHECK_THROWS_AS((void)eta_beta_from_xi({2, -2, 3, -3}), validation_error);
  CHECK_THROWS_AS((void)eta_beta_from_xi({0, 0, 0, 0}), validation_error);
}

TEST_CASE("target intervals around the scaled direction") {
  const CayleyTarget t = make_target({3, 3, 3, -1}, 1'000'000);
  for (int j = 0; j < 3; ++j) {
    CHECK(t.intervals[j].lo == 92);
    CHECK(t.intervals[j].hi == 108);
  }
  CHECK(t.intervals[3].lo == 292);
  CHECK(t.intervals[3].hi == 308);

  // Tiny heights clamp the lower endpoints at the first prime.
  const CayleyTarget small = make_target({3, 3, 3, -1}, 3);
  CHECK(small.intervals[0].lo == 2);
  CHECK_THROWS_AS((void)make_target({3, 3, 3, -1}, 2), validation_error);
}

TEST_CASE("prime quadruples match the quadruple-loop oracle") {
  const struct {
    std::array<double, 4> xi;
    u64 B;
  } cases[] = {
      {{3, 3, 3, -1}, 200'000},
      {{3, 3, 3, -1}, 1'000'000},
      {{2, 3, -6, -1.5}, 1'000'000},
      {{-165, 1045, 627, 285}, 8'000},
  };
  for (const auto& c : cases) {
    const CayleyTarget t = make_target(c.xi, c.B);
    const auto got = solve_prime_quads(t);
    const auto want = oracle::quads_by_loops(t);
    CHECK(got == want);
    for (const auto& q : got) {
      i64 dot = 0;
      for (int j = 0; j < 4; ++j)
        dot += t.beta[j] * static_cast<i64>(q.p[j]);
      CHECK(dot == 0);
      std::set<u64> uniq(q.p.begin(), q.p.end());
      CHECK(q.distinct == (uniq.size() == 4));
    }
  }
}

TEST_CASE("per-interval prime budget") {
  const CayleyTarget t = make_target({3, 3, 3, -1}, 1'000'000);
  CHECK_THROWS_AS((void)solve_prime_quads(t, 1), budget_error);
}

TEST_CASE("weighted and distinct counts") {
  std::vector<PrimeQuad> quads;
  PrimeQuad a;
  a.p = {2, 3, 5, 7};
  a.distinct = true;
  PrimeQuad b;
  b.p = {3, 3, 5, 11};
  b.distinct = false;
  quads = {a, b};
  const double expected = std::log(2.0) * std::log(3.0) * std::log(5.0) *
                              std::log(7.0) +
                          std::log(3.0) * std::log(3.0) * std::log(5.0) *
                              std::log(11.0);
  CHECK(weighted_count(quads) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(unweighted_distinct_count(quads) == 1);
  CHECK(weighted_count({}) == 0);
}

TEST_CASE("integer solution counts match the triple-loop oracle") {
  const std::array<Interval, 4> base{
      Interval{5, 30}, Interval{3, 41}, Interval{10, 22}, Interval{2, 55}};

  for (const std::array<int, 4>& beta :
       {std::array<int, 4>{-1, -1, -1, 1}, std::array<int, 4>{1, -1, 1, -1},
        std::array<int, 4>{1, 1, -1, -1}, std::array<int, 4>{-1, 1, 1, 1}}) {
    const CayleyTarget t = synthetic(base, beta);
    CHECK(integer_count(t) == oracle::integer_count_by_loops(t));
  }

  // All signs equal: no cancellation is possible over positive ranges.
  CHECK(integer_count(synthetic(base, {1, 1, 1, 1})) == 0);

  // Empty interval.
  CHECK(integer_count(synthetic(
            {Interval{5, 4}, Interval{3, 41}, Interval{10, 22}, Interval{2, 55}},
            {-1, -1, -1, 1})) == 0);

  // Real targets.
  for (u64 B : {10'000ULL, 300'000ULL}) {
    const CayleyTarget t = make_target({3, 3, 3, -1}, B);
    CHECK(integer_count(t) == oracle::integer_count_by_loops(t));
  }
}

TEST_CASE("singular series truncations") {
  const SingularSeries s = singular_series(10'000);
  CHECK(s.sum_form == doctest::Approx(2.3009615226008364).epsilon(1e-12));
  CHECK(s.product_form == doctest::Approx(2.30096154353549).epsilon(1e-12));
  CHECK(std::abs(s.product_form - s.sum_form) <= s.tail_bound);
  CHECK(s.tail_bound <= 1e-6);
  CHECK(s.sum_form > 2.299);
  CHECK(s.sum_form < 2.302);
}

TEST_CASE("singular series sum and product stay within the tail bound") {
  double prev = 0;
  for (u64 P : {100ULL, 316ULL, 1'000ULL, 3'162ULL, 10'000ULL, 31'623ULL,
                100'000ULL}) {
    const SingularSeries s = singular_series(P);
    CHECK(std::abs(s.product_form - s.sum_form) <= s.tail_bound);
    CHECK(s.sum_form >= prev);  // partial sums of positive terms
    prev = s.sum_form;
  }
}

TEST_CASE("singular series against the trial-division oracle") {
  const SingularSeries s = singular_series(2'000);
  CHECK(s.sum_form ==
        doctest::Approx(oracle::singular_series_by_trial(2'000)).epsilon(1e-12));
}

TEST_CASE("singular series input guards") {
  CHECK_THROWS_AS((void)singular_series(1), validation_error);
  CHECK_THROWS_AS((void)singular_series(10'000'001), budget_error);
}

TEST_CASE("points from quads reproduce the worked quadruple") {
  CayleyTarget t;
  t.beta = {1, -1, -1, -1};
  t.B = 1000;
  t.xi = {-0.165, 1.045, 0.627, 0.285};

  PrimeQuad q;
  q.p = {19, 3, 5, 11};
  q.distinct = true;
  PrimeQuad repeated;
  repeated.p = {3, 3, 5, 11};
  repeated.distinct = false;

  const auto points = quads_to_points({q, repeated}, t);
  REQUIRE(points.size() == 1);  // the repeated-prime quad is dropped
  CHECK(points[0].point.x == std::array<i64, 4>{-165, 1045, 627, 285});
  CHECK(points[0].point.omega == 12);
  CHECK(points[0].point.distinct_primes == 4);
  CHECK(points[0].point.primitive);
  CHECK(points[0].approx_error == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("end-to-end comparison report") {
  const CayleyTarget t = make_target({3, 3, 3, -1}, 1'000'000);
  const HlReport r = hl_compare(t, 10'000);
  const auto quads = oracle::quads_by_loops(t);
  CHECK(r.quads_total == quads.size());
  CHECK(r.quads_distinct == unweighted_distinct_count(quads));
  CHECK(r.J == oracle::integer_count_by_loops(t));
  CHECK(r.R == doctest::Approx(weighted_count(quads)));
  CHECK(r.S == doctest::Approx(2.3009615226008364));
  for (int j = 0; j < 4; ++j) {
    CHECK(r.intervals[j].lo == t.intervals[j].lo);
    CHECK(r.intervals[j].hi == t.intervals[j].hi);
    const auto ps = oracle::primes_between(
        static_cast<u64>(std::max<i64>(t.intervals[j].lo, 2)),
        static_cast<u64>(t.intervals[j].hi));
    CHECK(r.prime_counts[j] == ps.size());
  }
  if (r.J > 0) CHECK(r.ratio == doctest::Approx(r.R / (static_cast<double>(r.J) * r.S)));
}

TEST_SUITE_END();
