#include <doctest.h>

#include <algorithm>
#include <random>

#include <satlab/cayley.hpp>
#include <satlab/errors.hpp>

using namespace satlab;
using namespace satlab::cayley;

TEST_SUITE_BEGIN("cayley");

TEST_CASE("pair slots") {
  CHECK(pair_slot(0, 1) == 0);
  CHECK(pair_slot(1, 0) == 0);
  CHECK(pair_slot(0, 2) == 1);
  CHECK(pair_slot(0, 3) == 2);
  CHECK(pair_slot(1, 2) == 3);
  CHECK(pair_slot(3, 1) == 4);
  CHECK(pair_slot(2, 3) == 5);
  CHECK_THROWS_AS((void)pair_slot(1, 1), validation_error);
  CHECK_THROWS_AS((void)pair_slot(-1, 2), validation_error);
  CHECK_THROWS_AS((void)pair_slot(0, 4), validation_error);
}

TEST_CASE("worked torsor quadruple") {
  TorsorVars t;
  t.y = {19, -3, -5, -11};

  const TorsorValidation val = validate_torsor(t);
  CHECK(val.ok);
  CHECK(val.violation.empty());

  const CayleyPoint pt = torsor_to_point(t);
  CHECK(pt.x == std::array<i64, 4>{-165, 1045, 627, 285});
  CHECK(pt.primitive);
  CHECK(pt.omega == 12);
  CHECK(pt.distinct_primes == 4);
  CHECK(on_cayley(pt.x));
  CHECK(in_U2(pt.x));

  const VVariables v = v_variables(t);
  CHECK(v.integral);
  CHECK(v.v == std::array<i64, 6>{16, 14, 8, -8, -14, -16});
  CHECK(v.complementary);
  CHECK(v.quadrics == std::array<bool, 3>{true, true, true});
}

TEST_CASE("three-prime point from the torsor") {
  TorsorVars t;
  t.y = {1, 1, 1, -3};
  const CayleyPoint pt = torsor_to_point(t);
  CHECK(pt.x == std::array<i64, 4>{-3, -3, -3, 1});
  CHECK(pt.omega == 3);
  CHECK(pt.distinct_primes == 1);
  CHECK(in_U2(pt.x));
}

TEST_CASE("nontrivial z data") {
  TorsorVars t;
  t.y = {1, 1, 1, -1};
  t.z[pair_slot(0, 1)] = 2;
  t.z[pair_slot(0, 2)] = 3;
  CHECK(validate_torsor(t).ok);
  const CayleyPoint pt = torsor_to_point(t);
  CHECK(pt.x == std::array<i64, 4>{-6, -2, -3, 1});
  CHECK(pt.omega == 4);
  CHECK(pt.distinct_primes == 2);

  const VVariables v = v_variables(t);
  CHECK(v.integral);
  CHECK(v.complementary);
  CHECK(v.quadrics == std::array<bool, 3>{true, true, true});
  // The defining relation z_ab v_ab = z_ac z_ad y_b + z_bc z_bd y_a,
  // re-multiplied here without the division.
  for (int s = 0; s < 6; ++s) {
    const auto [a, b] = pair_order[s];
    int c = -1, d = -1;
    for (int i = 0; i < 4; ++i)
      if (i != a && i != b) (c < 0 ? c : d) = i;
    const i128 rhs = static_cast<i128>(t.z[pair_slot(a, c)]) *
                         t.z[pair_slot(a, d)] * t.y[b] +
                     static_cast<i128>(t.z[pair_slot(b, c)]) *
                         t.z[pair_slot(b, d)] * t.y[a];
    CHECK(static_cast<i128>(v.v[s]) * t.z[s] == rhs);
  }
}

TEST_CASE("constraint violations are reported in order") {
  TorsorVars t;

  t.y = {0, 1, 1, 1};
  t.z[0] = -2;  // also bad, but the zero y comes first
  CHECK(validate_torsor(t).violation == "y0 is zero");

  t.y = {1, 1, 1, 1};
  CHECK(validate_torsor(t).violation == "z01 is not positive");

  t = TorsorVars{};
  t.y = {2, 4, 1, -1};
  CHECK(validate_torsor(t).violation == "gcd(y0, y1) != 1");

  t = TorsorVars{};
  t.y = {3, -1, -1, -1};
  t.z[pair_slot(0, 1)] = 3;
  CHECK(validate_torsor(t).violation == "gcd(y0, z01) != 1");

  // The documented coprimality counterexample: equal z's on complementary
  // pairs slip past every y-condition and fail between the z's.
  t = TorsorVars{};
  t.y = {1, -1, 1, -1};
  t.z[pair_slot(0, 3)] = 2;
  t.z[pair_slot(1, 2)] = 2;
  CHECK(validate_torsor(t).violation == "gcd(z03, z12) != 1");

  t = TorsorVars{};
  t.y = {1, 1, 1, 1};
  CHECK(validate_torsor(t).violation == "torsor equation not satisfied");

  t = TorsorVars{};
  t.y = {1, -1, 1, -1};
  CHECK(validate_torsor(t).violation == "partial sum with y1 vanishes");

  t = TorsorVars{};
  t.y = {1'000'001, 1, 1, 1};
  CHECK_THROWS_AS((void)validate_torsor(t), validation_error);
}

TEST_CASE("forward construction rejects invalid data with the violation") {
  TorsorVars t;
  t.y = {1, 1, 1, 1};
  CHECK_THROWS_WITH_AS((void)torsor_to_point(t),
                       "torsor_to_point: torsor equation not satisfied",
                       validation_error);
  CHECK_THROWS_AS((void)v_variables(t), validation_error);
}

TEST_CASE("surface membership") {
  CHECK(on_cayley({3, 3, 3, -1}));
  CHECK(on_cayley({-165, 1045, 627, 285}));
  CHECK(on_cayley({0, 0, 1, -1}));  // two zero coordinates still solve it
  CHECK_FALSE(on_cayley({1, 1, 1, 1}));
  CHECK_THROWS_AS((void)on_cayley({0, 0, 0, 0}), validation_error);
}

TEST_CASE("line avoidance") {
  CHECK(in_U2({3, 3, 3, -1}));
  CHECK(in_U2({-165, 1045, 627, 285}));
  CHECK_FALSE(in_U2({0, 0, 1, -1}));   // coordinate line
  CHECK_FALSE(in_U2({1, 1, -1, -1}));  // pairing line x0+x2 = x1+x3 = 0
  CHECK_FALSE(in_U2({2, -2, 5, -5}));  // pairing line x0+x1 = x2+x3 = 0
  CHECK_FALSE(in_U2({1, 2, 3, 4}));    // not even on the surface
}

TEST_CASE("primitivity and sign normalization") {
  CHECK(is_primitive({3, 3, 3, -1}));
  CHECK_FALSE(is_primitive({2, 4, 6, 8}));
  CHECK(normalize_sign({-1, 2, 3, 4}) == std::array<i64, 4>{1, -2, -3, -4});
  CHECK(normalize_sign({0, -2, 1, 1}) == std::array<i64, 4>{0, 2, -1, -1});
  CHECK(normalize_sign({5, -1, 0, 2}) == std::array<i64, 4>{5, -1, 0, 2});
}

TEST_CASE("coordinate stats") {
  const CayleyPoint pt = point_from_coords({-165, 1045, 627, 285});
  CHECK(pt.omega == 12);
  CHECK(pt.distinct_primes == 4);
  CHECK(pt.primitive);
  CHECK_THROWS_AS((void)point_from_coords({0, 1, 1, 1}), validation_error);
}

TEST_CASE("random zero-sum torsor families satisfy every identity") {
  std::mt19937_64 rng(20260823);
  int built = 0;
  while (built < 200) {
    const i64 y0 = static_cast<i64>(rng() % 200) + 1;
    const i64 y1 = -(static_cast<i64>(rng() % 200) + 1);
    const i64 y2 = static_cast<i64>(rng() % 399) - 199;
    const i64 y3 = -(y0 + y1 + y2);
    TorsorVars t;
    t.y = {y0, y1, y2, y3};
    if (y2 == 0 || y3 == 0) continue;
    if (!validate_torsor(t).ok) continue;  // coprimality or partial sums fail

    const VVariables v = v_variables(t);
    CHECK(v.integral);
    CHECK(v.complementary);
    CHECK(v.quadrics == std::array<bool, 3>{true, true, true});

    const CayleyPoint pt = torsor_to_point(t);
    CHECK(pt.primitive);
    CHECK(on_cayley(pt.x));
    CHECK(in_U2(pt.x));
    // With all z = 1 the coordinate product is (y0 y1 y2 y3)^3.
    CHECK(pt.omega % 3 == 0);
    ++built;
  }
}

TEST_SUITE_END();
