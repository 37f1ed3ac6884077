#pragma once

#include <array>
#include <string>
#include <utility>

#include "satlab/wide.hpp"

namespace satlab::cayley {

// The six unordered coordinate pairs, in the fixed order
// (01, 02, 03, 12, 13, 23) used to index z and v throughout.
inline constexpr std::array<std::pair<int, int>, 6> pair_order{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Slot of pair {i, j} (i != j, order-insensitive) in pair_order.
int pair_slot(int i, int j);

// Magnitude cap on torsor variables: keeps every product below (x0 is a
// product of six variables) inside 128 bits, and the point coordinates
// checkable against int64.
inline constexpr i64 max_torsor_coord = 1'000'000;

// Torsor variables: four nonzero pairwise-coprime y's, six positive z's
// indexed by pairs with the cross-coprimality and equation constraints below.
// Magnitudes above max_torsor_coord are rejected up front.
struct TorsorVars {
  std::array<i64, 4> y{};
  std::array<i64, 6> z{1, 1, 1, 1, 1, 1};
};

// Constraints, checked in this fixed order (the first failure is reported):
//   1. every y_i nonzero, every z_ab positive;
//   2. gcd(y_i, y_j) = 1 for i < j;
//   3. gcd(y_i, z_ab) = 1 whenever i is in {a, b};
//   4. gcd(z_ab, z_cd) = 1 for distinct pairs;
//   5. the torsor equation
//        z12 z13 z23 y0 + z02 z03 z23 y1 + z01 z03 z13 y2 + z01 z02 z12 y3 = 0;
//   6. none of the three partial sums
//        z12 z13 z23 y0 + z02 z03 z23 y1,
//        z12 z13 z23 y0 + z01 z03 z13 y2,
//        z12 z13 z23 y0 + z01 z02 z12 y3   vanishes.
struct TorsorValidation {
  bool ok = true;
  std::string violation;  // empty when ok; names the first failed constraint
};
TorsorValidation validate_torsor(const TorsorVars& t);

// A point of the quartic-symmetric cubic surface with its multiplicity stats.
struct CayleyPoint {
  std::array<i64, 4> x{};
  bool primitive = false;
  int omega = 0;           // Omega(x0 x1 x2 x3)
  int distinct_primes = 0; // distinct primes of the product
};

// The forward point construction
//   x0 = z01 z02 z03 y1 y2 y3,   x1 = z01 z12 z13 y0 y2 y3,
//   x2 = z02 z12 z23 y0 y1 y3,   x3 = z03 z13 z23 y0 y1 y2.
// Valid input yields a primitive point on the surface avoiding all nine
// lines; those postconditions are re-verified.  Throws validation_error
// naming the first violated constraint on invalid input.
CayleyPoint torsor_to_point(const TorsorVars& t);

// v_ab = (z_ac z_ad y_b + z_bc z_bd y_a) / z_ab with {c, d} the complement of
// {a, b}.  For valid data the six values are integral, complementary pairs
// are negatives of each other (v01 = -v23 etc.), and the three quadric
// identities
//   v01 v02 = z03^2 y1 y2 - z12^2 y0 y3
//   v01 v03 = z02^2 y1 y3 - z13^2 y0 y2
//   v02 v03 = z01^2 y2 y3 - z23^2 y0 y1
// hold exactly.  Non-integral v's (torsor data outside the open subvariety)
// are reported via `integral`, never silently rounded.
struct VVariables {
  std::array<i64, 6> v{};
  bool integral = true;
  bool complementary = false;
  std::array<bool, 3> quadrics{};
};
VVariables v_variables(const TorsorVars& t);

// Exact surface membership: x1 x2 x3 + x0 x2 x3 + x0 x1 x3 + x0 x1 x2 = 0.
// Rejects the zero vector.
bool on_cayley(const std::array<i64, 4>& x);

// Surface membership and off all nine lines: the three pairings
// x_i + x_j = x_k + x_l = 0 and the six coordinate pairs x_i = x_j = 0.
bool in_U2(const std::array<i64, 4>& x);

bool is_primitive(const std::array<i64, 4>& x);

// Flip the sign so the first nonzero coordinate is positive.
std::array<i64, 4> normalize_sign(std::array<i64, 4> x);

// Fill the multiplicity stats of a raw coordinate vector (factors each
// coordinate; coordinates must be nonzero).
CayleyPoint point_from_coords(const std::array<i64, 4>& x);

}  // namespace satlab::cayley
