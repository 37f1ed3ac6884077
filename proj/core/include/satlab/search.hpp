#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "satlab/fermat.hpp"
#include "satlab/prime_solver.hpp"
#include "satlab/wide.hpp"

namespace satlab::search {

struct ScanOptions {
  bool use_psi = false;       // restrict seeds to the congruence class
  u64 psi_scan_limit = 50;
  double delta0 = 0.25;
  u64 budget = 1'000'000'000; // hard cap on seed evaluations
  int threads = 1;
  int max_examples = 16;
  std::string checkpoint_path;  // empty: no checkpointing
};

struct PointRecord {
  std::array<i64, 4> x{};
  int omega = 0;
  int distinct_primes = 0;
  double approx_error = 0;           // max_i |x_i/B - xi_i|
  std::array<i64, 3> seed{};         // originating seed (surface scans)
};

struct ScanReport {
  std::string surface;               // "fermat" or "cayley"
  u64 B = 0;
  double epsilon = 0;                // fermat only; cayley windows are 1/log B
  int r_max = 0;
  std::map<int, u64> omega_histogram;
  u64 points_total = 0;              // in-window points (distinct vectors)
  u64 points_within_r = 0;           // those with Omega <= r_max
  std::vector<PointRecord> examples; // best first (smallest Omega, then error)
  double approx_constant = 0;        // max over points of approx_error * log B
  u64 seeds_scanned = 0;
  double elapsed_seconds = 0;
  fermat::FermatTarget target;       // fermat only
  fermat::SeedBox box;               // fermat only
  fermat::PsiLattice psi;            // fermat only (D = 1 when off)
};

// Enumerate the seed box of the target built from (xi, epsilon, B), compute
// the form vector of every seed, divide out the gcd, keep vectors inside the
// epsilon-window, deduplicate exact vectors, and bin by Omega of the
// coordinate product.  Every reported point re-validates: exact cube sum
// zero, primitive, in-window.
ScanReport fermat_scan(const std::array<double, 4>& xi, double epsilon, u64 B,
                       int r_max = 20, const ScanOptions& opt = {});

// Run the prime-quad solver for (xi, B), keep distinct-prime quads, and
// construct surface points (all Omega = 12, 4 distinct primes).
ScanReport cayley_scan(const std::array<double, 4>& xi, u64 B,
                       const ScanOptions& opt = {});

// Exhaustive bounded-height survey of surface points off the lines:
// enumerate primitive (x0, x1, x2) with 1 <= x0 <= height, |x1|, |x2| <=
// height, solve the surface equation for x3 = -x0 x1 x2 / (x1 x2 + x0 x2 +
// x0 x1) when integral with |x3| <= x3_cap (default: height), and keep
// points off all nine lines.  Points are counted up to coordinate
// permutation and global sign (the symmetries of the surface); one
// sign-normalized representative per orbit is kept.
struct MinOmegaResult {
  int min_omega = 0;
  std::array<i64, 4> witness{};            // a representative of minimum Omega
  std::map<int, u64> omega_histogram;      // orbit counts per Omega
  std::vector<std::array<i64, 4>> low_omega_points;  // all orbits, Omega <= 6
  u64 orbits_total = 0;
  u64 triples_scanned = 0;
  // True when some orbit with Omega = 6 matches coordinates
  // {3, 5, 7, 105} up to signs and permutation (the smallest known
  // six-factor point; its all-positive form does not satisfy the surface
  // equation, the sign-corrected variant does).
  bool reference_witness_found = false;
};
MinOmegaResult min_omega_survey(i64 height, i64 x3_cap = 0);

// Checkpoint helpers shared by the scans: a plain-text file, one line per
// completed slab id, each line carrying the slab's histogram so interrupted
// scans resume without rescanning.
struct CheckpointData {
  std::map<std::string, std::map<int, u64>> completed;
};
CheckpointData read_checkpoint(const std::string& path);
void append_checkpoint_line(const std::string& path, const std::string& id,
                            const std::map<int, u64>& histogram);

}  // namespace satlab::search
