#include "satlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "satlab/arith.hpp"
#include "satlab/cayley.hpp"
#include "satlab/errors.hpp"
#include "satlab/parallel.hpp"

namespace satlab::search {

namespace {

struct ArrayHash {
  size_t operator()(const std::array<i64, 4>& a) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (i64 v : a) {
      h ^= static_cast<size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Omega and distinct-prime stats of a nonzero coordinate vector.
std::pair<int, int> omega_stats(const std::array<i64, 4>& x) {
  int omega = 0;
  std::set<u128> primes;
  for (i64 v : x) {
    for (const auto& e : arith::factorize(static_cast<i128>(v)).factors) {
      omega += static_cast<int>(e.exponent);
      primes.insert(e.prime);
    }
  }
  return {omega, static_cast<int>(primes.size())};
}

void sort_examples(std::vector<PointRecord>& ex) {
  std::sort(ex.begin(), ex.end(), [](const PointRecord& a, const PointRecord& b) {
    if (a.omega != b.omega) return a.omega < b.omega;
    if (a.approx_error != b.approx_error) return a.approx_error < b.approx_error;
    return a.x < b.x;
  });
}

// In-window candidate produced by a slab worker, before deduplication.
struct Candidate {
  std::array<i64, 4> x{};
  std::array<i64, 3> seed{};
  double approx_error = 0;
};

}  // namespace

ScanReport fermat_scan(const std::array<double, 4>& xi, double epsilon, u64 B,
                       int r_max, const ScanOptions& opt) {
  if (r_max < 1) throw validation_error("fermat_scan: r_max must be positive");
  const auto start = std::chrono::steady_clock::now();

  ScanReport report;
  report.surface = "fermat";
  report.B = B;
  report.epsilon = epsilon;
  report.r_max = r_max;
  report.target = fermat::make_target(xi, epsilon, B, opt.delta0);
  report.box = fermat::target_region(report.target);
  report.psi = opt.use_psi ? fermat::build_psi(opt.psi_scan_limit)
                           : fermat::PsiLattice{};

  const u128 volume = report.box.volume();
  if (volume > static_cast<u128>(opt.budget))
    throw budget_error("fermat_scan: box holds " + to_string(volume) +
                       " seeds, budget is " + std::to_string(opt.budget));

  const CheckpointData resume = opt.checkpoint_path.empty()
                                    ? CheckpointData{}
                                    : read_checkpoint(opt.checkpoint_path);

  const double lnB = std::log(static_cast<double>(B));
  const i64 D = static_cast<i64>(report.psi.D);
  const auto& anchor = report.psi.anchor;
  std::unordered_set<std::array<i64, 4>, ArrayHash> seen;
  std::vector<PointRecord> examples;
  const size_t example_cap =
      static_cast<size_t>(std::max(opt.max_examples, 1)) * 4;

  // One slab per y1 value; slabs are scanned by the worker pool in batches and
  // merged in slab order, so the report does not depend on the thread count.
  std::vector<i64> slab_y1;
  for (i64 y1 = report.box.lo[0]; y1 <= report.box.hi[0]; ++y1) {
    if (opt.use_psi && ((y1 - anchor[0]) % D + D) % D != 0) continue;
    slab_y1.push_back(y1);
  }

  const int threads = resolve_threads(opt.threads);
  const size_t batch = static_cast<size_t>(threads) * 8;
  std::vector<std::vector<Candidate>> produced(slab_y1.size());
  std::vector<u64> slab_seeds(slab_y1.size(), 0);
  // char, not bool: workers write distinct slots concurrently.
  std::vector<char> skipped(slab_y1.size(), 0);

  for (size_t base = 0; base < slab_y1.size(); base += batch) {
    const size_t count = std::min(batch, slab_y1.size() - base);
    parallel_for_index(count, threads, [&](u64 k) {
      const size_t idx = base + k;
      const i64 y1 = slab_y1[idx];
      if (resume.completed.count("y1=" + std::to_string(y1))) {
        skipped[idx] = true;
        return;
      }
      std::vector<Candidate>& out = produced[idx];
      u64 scanned = 0;
      for (i64 y2 = report.box.lo[1]; y2 <= report.box.hi[1]; ++y2) {
        if (opt.use_psi && ((y2 - anchor[1]) % D + D) % D != 0) continue;
        for (i64 y3 = report.box.lo[2]; y3 <= report.box.hi[2]; ++y3) {
          if (opt.use_psi && ((y3 - anchor[2]) % D + D) % D != 0) continue;
          ++scanned;
          if (y1 == 0 && y2 == 0 && y3 == 0) continue;
          const std::array<i64, 4> f = fermat::f_forms({y1, y2, y3});
          u64 g = 0;
          for (i64 v : f)
            g = std::gcd(g, static_cast<u64>(v < 0 ? -static_cast<u64>(v)
                                                   : static_cast<u64>(v)));
          if (g == 0) continue;  // all four forms vanish only at the origin
          Candidate c;
          c.seed = {y1, y2, y3};
          bool in_window = true;
          for (int i = 0; i < 4; ++i) {
            c.x[i] = f[i] / static_cast<i64>(g);
            const double err =
                std::abs(static_cast<double>(c.x[i]) / static_cast<double>(B) -
                         xi[i]);
            c.approx_error = std::max(c.approx_error, err);
            in_window = in_window && err < epsilon;
          }
          if (in_window) out.push_back(c);
        }
      }
      slab_seeds[idx] = scanned;
    });

    // Serial merge in slab order: dedup, factor, bin, checkpoint.
    for (size_t idx = base; idx < base + count; ++idx) {
      const std::string id = "y1=" + std::to_string(slab_y1[idx]);
      if (skipped[idx]) {
        for (const auto& [omega, n] : resume.completed.at(id)) {
          report.omega_histogram[omega] += n;
          report.points_total += n;
          if (omega <= r_max) report.points_within_r += n;
        }
        continue;
      }
      report.seeds_scanned += slab_seeds[idx];
      std::map<int, u64> slab_hist;
      for (const Candidate& c : produced[idx]) {
        if (!seen.insert(c.x).second) continue;
        if (fermat::cube_sum(c.x) != 0)
          throw std::logic_error("fermat_scan: point off the surface");
        const auto [omega, distinct] = omega_stats(c.x);
        slab_hist[omega] += 1;
        report.omega_histogram[omega] += 1;
        report.points_total += 1;
        if (omega <= r_max) report.points_within_r += 1;
        report.approx_constant =
            std::max(report.approx_constant, c.approx_error * lnB);
        PointRecord rec;
        rec.x = c.x;
        rec.omega = omega;
        rec.distinct_primes = distinct;
        rec.approx_error = c.approx_error;
        rec.seed = c.seed;
        examples.push_back(rec);
        if (examples.size() > example_cap) {
          sort_examples(examples);
          examples.resize(static_cast<size_t>(std::max(opt.max_examples, 1)));
        }
      }
      produced[idx].clear();
      produced[idx].shrink_to_fit();
      if (!opt.checkpoint_path.empty())
        append_checkpoint_line(opt.checkpoint_path, id, slab_hist);
    }
  }

  sort_examples(examples);
  if (examples.size() > static_cast<size_t>(std::max(opt.max_examples, 0)))
    examples.resize(static_cast<size_t>(std::max(opt.max_examples, 0)));
  report.examples = std::move(examples);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

ScanReport cayley_scan(const std::array<double, 4>& xi, u64 B,
                       const ScanOptions& opt) {
  const auto start = std::chrono::steady_clock::now();

  ScanReport report;
  report.surface = "cayley";
  report.B = B;

  const solver::CayleyTarget target = solver::make_target(xi, B);
  report.epsilon = 1 / std::log(static_cast<double>(B));  // window half-width
  report.r_max = 12;  // every constructed point has exactly Omega = 12

  const std::vector<solver::PrimeQuad> quads = solver::solve_prime_quads(target);
  report.seeds_scanned = quads.size();
  const std::vector<solver::ConstructedPoint> points =
      solver::quads_to_points(quads, target);

  const double lnB = std::log(static_cast<double>(B));
  std::unordered_set<std::array<i64, 4>, ArrayHash> seen;
  std::vector<PointRecord> examples;
  for (const auto& cp : points) {
    if (!seen.insert(cp.point.x).second)
      throw std::logic_error("cayley_scan: distinct quads collided");
    report.omega_histogram[cp.point.omega] += 1;
    report.points_total += 1;
    report.points_within_r += 1;
    report.approx_constant =
        std::max(report.approx_constant, cp.approx_error * lnB);
    PointRecord rec;
    rec.x = cp.point.x;
    rec.omega = cp.point.omega;
    rec.distinct_primes = cp.point.distinct_primes;
    rec.approx_error = cp.approx_error;
    examples.push_back(rec);
  }
  sort_examples(examples);
  if (examples.size() > static_cast<size_t>(std::max(opt.max_examples, 0)))
    examples.resize(static_cast<size_t>(std::max(opt.max_examples, 0)));
  report.examples = std::move(examples);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

MinOmegaResult min_omega_survey(i64 height, i64 x3_cap) {
  if (height < 1 || height > 500)
    throw validation_error("min_omega_survey: height must lie in [1, 500]");
  if (x3_cap == 0) x3_cap = height;
  if (x3_cap < 1)
    throw validation_error("min_omega_survey: x3 cap must be positive");

  MinOmegaResult result;
  result.min_omega = -1;
  std::set<std::array<i64, 4>> orbits;

  // Enumerate one positive coordinate plus two signed ones; the fourth is
  // forced by the surface equation.  Every orbit with all coordinates in
  // range appears this way because permutations and the global sign are
  // orbit symmetries.
  for (i64 x0 = 1; x0 <= height; ++x0)
    for (i64 x1 = -height; x1 <= height; ++x1) {
      if (x1 == 0) continue;
      const i64 g01 = std::gcd(x0, x1 < 0 ? -x1 : x1);
      for (i64 x2 = -height; x2 <= height; ++x2) {
        if (x2 == 0) continue;
        ++result.triples_scanned;
        if (std::gcd(g01, x2 < 0 ? -x2 : x2) != 1) continue;
        const i64 q = x1 * x2 + x0 * x2 + x0 * x1;
        if (q == 0) continue;
        const i64 prod = x0 * x1 * x2;
        if (prod % q != 0) continue;
        const i64 x3 = -prod / q;
        if (x3 == 0 || x3 > x3_cap || x3 < -x3_cap) continue;

        const std::array<i64, 4> x{x0, x1, x2, x3};
        if (!cayley::in_U2(x)) continue;

        // Canonical orbit representative: the lexicographically larger of the
        // two sorted sign variants.
        std::array<i64, 4> a = x, b{-x[0], -x[1], -x[2], -x[3]};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        const std::array<i64, 4> canon = std::max(a, b);
        if (!orbits.insert(canon).second) continue;

        const auto [omega, distinct] = omega_stats(canon);
        (void)distinct;
        result.omega_histogram[omega] += 1;
        result.orbits_total += 1;
        if (result.min_omega < 0 || omega < result.min_omega ||
            (omega == result.min_omega && canon < result.witness)) {
          result.min_omega = omega;
          result.witness = canon;
        }
        if (omega <= 6) result.low_omega_points.push_back(canon);

        std::array<i64, 4> mags{};
        for (int i = 0; i < 4; ++i) mags[i] = canon[i] < 0 ? -canon[i] : canon[i];
        std::sort(mags.begin(), mags.end());
        if (mags == std::array<i64, 4>{3, 5, 7, 105})
          result.reference_witness_found = true;
      }
    }

  std::sort(result.low_omega_points.begin(), result.low_omega_points.end());
  if (result.min_omega < 0) result.min_omega = 0;  // no orbit found
  return result;
}

CheckpointData read_checkpoint(const std::string& path) {
  CheckpointData data;
  std::ifstream in(path);
  if (!in) return data;  // a missing file is an empty checkpoint
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string id, payload;
    iss >> id >> payload;
    if (id.empty())
      throw validation_error("checkpoint line " + std::to_string(line_no) +
                             " has no id");
    std::map<int, u64>& hist = data.completed[id];
    if (payload.empty()) continue;
    std::istringstream items(payload);
    std::string item;
    while (std::getline(items, item, ',')) {
      const size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw validation_error("checkpoint line " + std::to_string(line_no) +
                               " is malformed");
      hist[std::stoi(item.substr(0, colon))] +=
          std::stoull(item.substr(colon + 1));
    }
  }
  return data;
}

void append_checkpoint_line(const std::string& path, const std::string& id,
                            const std::map<int, u64>& histogram) {
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw validation_error("checkpoint file not writable: " + path);
  out << id;
  bool first = true;
  for (const auto& [omega, count] : histogram) {
    out << (first ? " " : ",") << omega << ':' << count;
    first = false;
  }
  out << '\n';
}

}  // namespace satlab::search
