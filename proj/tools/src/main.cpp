// satlab: constructing and certifying almost-prime points on two cubic
// surfaces.  Each subcommand maps to one library operation and emits a JSON
// report (plus optional CSV tables); reports carry a "paper_anchor" naming
// the statement the experiment targets.

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/arith.hpp"
#include "satlab/cayley.hpp"
#include "satlab/densities.hpp"
#include "satlab/errors.hpp"
#include "satlab/fermat.hpp"
#include "satlab/parallel.hpp"
#include "satlab/prime_solver.hpp"
#include "satlab/report.hpp"
#include "satlab/search.hpp"
#include "satlab/sieve_constants.hpp"
#include "satlab/wide.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace satlab;

std::array<double, 4> to_xi(const std::vector<double>& v) {
  return {v[0], v[1], v[2], v[3]};
}

// Window vector of a seed: the form values normalized by the first form.
std::array<double, 4> xi_from_seed(const std::vector<i64>& seed) {
  const std::array<i64, 4> f =
      fermat::f_forms({seed[0], seed[1], seed[2]});
  if (f[0] == 0)
    throw validation_error("seed has vanishing first form; cannot normalize");
  std::array<double, 4> xi{};
  for (int i = 0; i < 4; ++i)
    xi[i] = static_cast<double>(f[i]) / static_cast<double>(std::abs(f[0]));
  return xi;
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

template <typename Fn>
void emit_csv(const std::string& path, Fn writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path);
  writer(out);
}

json region_json(const fermat::FermatTarget& t, const fermat::SeedBox& box,
                 const fermat::PsiLattice& psi) {
  json j;
  j["D"] = psi.D;
  json bad = json::array();
  for (const auto& bp : psi.bad_primes) {
    json b;
    b["p"] = bp.p;
    b["reason"] = bp.reason == fermat::BadPrimeReason::singular_form
                      ? "singular_form"
                      : "density_anomaly";
    if (bp.form_index >= 0) b["form"] = bp.form_index;
    bad.push_back(b);
  }
  j["bad_primes"] = bad;
  j["gamma0"] = t.gamma0;
  j["gamma"] = {t.gamma[0], t.gamma[1], t.gamma[2]};
  j["delta"] = t.delta;
  j["box_lo"] = {box.lo[0], box.lo[1], box.lo[2]};
  j["box_hi"] = {box.hi[0], box.hi[1], box.hi[2]};
  return j;
}

json scan_json(const search::ScanReport& r, const std::string& anchor) {
  json j;
  j["paper_anchor"] = anchor;
  j["surface"] = r.surface;
  j["B"] = r.B;
  j["epsilon"] = r.epsilon;
  j["r_max"] = r.r_max;
  json hist = json::object();
  for (const auto& [omega, count] : r.omega_histogram)
    hist[std::to_string(omega)] = count;
  j["omega_histogram"] = hist;
  j["points_total"] = r.points_total;
  j["points_within_r"] = r.points_within_r;
  j["approx_constant"] = r.approx_constant;
  j["seeds_scanned"] = r.seeds_scanned;
  j["elapsed_seconds"] = r.elapsed_seconds;
  json examples = json::array();
  for (const auto& p : r.examples) {
    json e;
    e["x"] = {p.x[0], p.x[1], p.x[2], p.x[3]};
    e["omega"] = p.omega;
    e["distinct_primes"] = p.distinct_primes;
    e["approx_error"] = p.approx_error;
    if (r.surface == "fermat") e["seed"] = {p.seed[0], p.seed[1], p.seed[2]};
    examples.push_back(e);
  }
  j["examples"] = examples;
  if (r.surface == "fermat") j["region"] = region_json(r.target, r.box, r.psi);
  return j;
}

struct CommonFlags {
  std::string out;        // JSON report path; stdout when empty
  bool dry_run = false;
  int threads = 0;        // 0: SATLAB_THREADS, then hardware
};

void attach_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--out", common.out, "Write the JSON report to this file");
  cmd->add_flag("--dry-run", common.dry_run,
                "Print the estimated enumeration cost and exit");
  cmd->add_option("--threads", common.threads,
                  "Worker threads (0: SATLAB_THREADS env, then hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "satlab: almost-prime integral points on the Fermat and Cayley cubic "
      "surfaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value config file; flags override");

  CommonFlags common;

  // sieve-constants
  double beta4 = 9.0722, alpha = 0.45, mu = 9.0;
  CLI::App* sieve = app.add_subcommand(
      "sieve-constants",
      "Minimize the weighted-sieve cost function and audit the level "
      "hypotheses");
  sieve->add_option("--beta4", beta4, "Diamond-Halberstam constant")
      ->capture_default_str();
  sieve->add_option("--alpha", alpha, "Level-of-distribution exponent")
      ->capture_default_str();
  sieve->add_option("--mu", mu, "Moment exponent (must exceed 4/alpha)")
      ->capture_default_str();
  attach_common(sieve, common);

  // fermat-region
  std::vector<double> xi_values;
  std::vector<i64> seed_values;
  double epsilon = 0.5, delta0 = 0.25;
  u64 B = 1'000'000'000;
  bool use_psi = false;
  u64 scan_limit = 50;
  CLI::App* region = app.add_subcommand(
      "fermat-region", "Build the seed box for a window vector on the Fermat "
                       "cubic");
  CLI::Option* region_xi =
      region->add_option("--xi", xi_values, "Window vector (4 reals)")
          ->expected(4);
  CLI::Option* region_seed =
      region
          ->add_option("--from-seed", seed_values,
                       "Derive the window vector from this seed (3 integers)")
          ->expected(3);
  region_xi->excludes(region_seed);
  region->add_option("--epsilon", epsilon, "Window half-width")
      ->capture_default_str();
  region->add_option("-B,--height", B, "Height parameter")
      ->capture_default_str();
  region->add_option("--delta0", delta0, "Initial box half-width")
      ->capture_default_str();
  region->add_flag("--psi", use_psi, "Restrict to the good congruence class");
  region->add_option("--scan-limit", scan_limit, "Bad-prime scan bound")
      ->capture_default_str();
  attach_common(region, common);

  // rho-scan
  u64 p_lo = 2, p_hi = 199;
  bool include_bad = false;
  std::string csv_path;
  CLI::App* rho = app.add_subcommand(
      "rho-scan", "Tabulate local densities and their Deligne-scale excess");
  rho->add_option("--lo", p_lo, "First prime")->capture_default_str();
  rho->add_option("--hi", p_hi, "Last prime (at most 300)")
      ->capture_default_str();
  rho->add_flag("--include-bad", include_bad,
                "Keep the bad primes of the default lattice in the table");
  rho->add_option("--csv", csv_path, "Write the density table to this file");
  attach_common(rho, common);

  // lod-scan
  double M = 50;
  u64 Q = 20;
  int boxes = 32;
  u64 rng_seed = 12345, lod_budget = 200'000'000;
  CLI::App* lod = app.add_subcommand(
      "lod-scan",
      "Measure remainder sums over a random box family (level of "
      "distribution)");
  lod->add_option("--M", M, "Box side bound (at most 200)")
      ->capture_default_str();
  lod->add_option("--Q", Q, "Modulus bound (at most 100)")
      ->capture_default_str();
  lod->add_option("--boxes", boxes, "Box family size")->capture_default_str();
  lod->add_option("--seed", rng_seed, "RNG seed for the box family")
      ->capture_default_str();
  lod->add_option("--budget", lod_budget, "Evaluation budget")
      ->capture_default_str();
  lod->add_option("--scan-limit", scan_limit, "Bad-prime scan bound")
      ->capture_default_str();
  lod->add_option("--csv", csv_path, "Write the remainder table to this file");
  attach_common(lod, common);

  // fermat-scan
  int r_max = 20, max_examples = 16;
  u64 scan_budget = 1'000'000'000;
  std::string checkpoint, points_csv;
  CLI::App* fscan = app.add_subcommand(
      "fermat-scan",
      "Enumerate the seed box and report almost-prime points in the window");
  CLI::Option* fscan_xi =
      fscan->add_option("--xi", xi_values, "Window vector (4 reals)")
          ->expected(4);
  CLI::Option* fscan_seed =
      fscan
          ->add_option("--from-seed", seed_values,
                       "Derive the window vector from this seed (3 integers)")
          ->expected(3);
  fscan_xi->excludes(fscan_seed);
  fscan->add_option("--epsilon", epsilon, "Window half-width")
      ->capture_default_str();
  fscan->add_option("-B,--height", B, "Height parameter")
      ->capture_default_str();
  fscan->add_option("--r-max", r_max, "Almost-prime threshold")
      ->capture_default_str();
  fscan->add_option("--delta0", delta0, "Initial box half-width")
      ->capture_default_str();
  fscan->add_flag("--psi", use_psi, "Restrict to the good congruence class");
  fscan->add_option("--scan-limit", scan_limit, "Bad-prime scan bound")
      ->capture_default_str();
  fscan->add_option("--budget", scan_budget, "Seed evaluation budget")
      ->capture_default_str();
  fscan->add_option("--checkpoint", checkpoint,
                    "Resume file (one line per finished slab)");
  fscan->add_option("--max-examples", max_examples,
                    "Example points kept in the report")
      ->capture_default_str();
  fscan->add_option("--points-csv", points_csv,
                    "Write the example points to this file");
  attach_common(fscan, common);

  // cayley-scan
  std::string quads_csv;
  CLI::App* cscan = app.add_subcommand(
      "cayley-scan",
      "Construct prime-quadruple points near a window vector on the Cayley "
      "cubic");
  cscan->add_option("--xi", xi_values, "Window vector (4 reals)")
      ->expected(4)
      ->required();
  cscan->add_option("-B,--height", B, "Height parameter")
      ->capture_default_str();
  cscan->add_option("--max-examples", max_examples,
                    "Example points kept in the report")
      ->capture_default_str();
  cscan->add_option("--points-csv", points_csv,
                    "Write the example points to this file");
  cscan->add_option("--quads-csv", quads_csv,
                    "Write the full prime-quadruple table to this file");
  attach_common(cscan, common);

  // torsor-verify
  std::vector<i64> y_values{19, -3, -5, -11};
  std::vector<i64> z_values{1, 1, 1, 1, 1, 1};
  CLI::App* torsor = app.add_subcommand(
      "torsor-verify",
      "Check torsor constraints and rebuild the surface point with its "
      "auxiliary variables");
  torsor->add_option("--y", y_values, "Torsor y quadruple")->expected(4);
  torsor
      ->add_option("--z", z_values,
                   "Torsor z sextuple, pair order 01,02,03,12,13,23")
      ->expected(6);
  attach_common(torsor, common);

  // singular-series
  u64 series_P = 10'000;
  CLI::App* series = app.add_subcommand(
      "singular-series",
      "Truncations of the prime-quadruple singular series with a tail bound");
  series->add_option("--P", series_P, "Truncation point")
      ->capture_default_str();
  attach_common(series, common);

  // hl-compare
  u64 max_primes = 1'000'000;
  CLI::App* hl = app.add_subcommand(
      "hl-compare",
      "Compare the weighted prime-quadruple count against its "
      "Hardy-Littlewood prediction");
  hl->add_option("--xi", xi_values, "Window vector (4 reals)")
      ->expected(4)
      ->required();
  hl->add_option("-B,--height", B, "Height parameter")->capture_default_str();
  hl->add_option("--series-P", series_P, "Singular series truncation")
      ->capture_default_str();
  hl->add_option("--max-primes", max_primes, "Per-interval prime budget")
      ->capture_default_str();
  hl->add_option("--quads-csv", quads_csv,
                 "Write the prime-quadruple table to this file");
  attach_common(hl, common);

  // min-omega
  i64 height = 120, x3_cap = 0;
  CLI::App* minom = app.add_subcommand(
      "min-omega",
      "Exhaustive bounded-height survey of the minimum prime-factor count");
  minom->add_option("--height", height, "Coordinate bound (at most 500)")
      ->capture_default_str();
  minom->add_option("--x3-cap", x3_cap, "Bound for the solved coordinate (0: height)")
      ->capture_default_str();
  attach_common(minom, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*sieve) {
      json j;
      j["paper_anchor"] = "Lemma 4";
      j["beta4"] = beta4;
      if (common.dry_run) {
        j["dry_run"] = true;
        j["estimated_cost"] = "O(log(1/tol)) function evaluations";
        emit(j, common.out);
        return 0;
      }
      const auto min = sieve_constants::minimize_m(beta4);
      const auto audit = sieve_constants::level_audit(alpha, mu, beta4);
      j["lambda_star"] = min.lambda_star;
      j["m_star"] = min.m_star;
      j["r"] = sieve_constants::admissible_r(beta4);
      json a;
      a["alpha"] = audit.alpha;
      a["mu"] = audit.mu_exp;
      a["alpha_ok"] = audit.alpha_ok;
      a["mu_ok"] = audit.mu_ok;
      a["uv_ok"] = audit.uv_ok;
      a["u_example"] = audit.u_example;
      a["v_example"] = audit.v_example;
      a["exponents_ok"] = audit.exponents_ok;
      j["audit"] = a;
      emit(j, common.out);
      return 0;
    }

    if (*region) {
      const std::array<double, 4> xi =
          xi_values.empty() ? xi_from_seed(seed_values) : to_xi(xi_values);
      const fermat::FermatTarget t =
          fermat::make_target(xi, epsilon, B, delta0);
      const fermat::SeedBox box = fermat::target_region(t);
      const fermat::PsiLattice psi =
          use_psi ? fermat::build_psi(scan_limit) : fermat::PsiLattice{};
      json j;
      j["paper_anchor"] = "Section 2.4";
      j["xi"] = {xi[0], xi[1], xi[2], xi[3]};
      j["zeta"] = {t.zeta[0], t.zeta[1], t.zeta[2], t.zeta[3]};
      j["epsilon"] = epsilon;
      j["B"] = B;
      j["volume"] = to_string(box.volume());
      j.update(region_json(t, box, psi));
      if (common.dry_run) j["dry_run"] = true;
      emit(j, common.out);
      return 0;
    }

    if (*rho) {
      std::vector<u64> skip;
      if (!include_bad)
        for (const auto& bp : fermat::build_psi(scan_limit).bad_primes)
          skip.push_back(bp.p);
      if (common.dry_run) {
        json j;
        j["paper_anchor"] = "Lemma 2";
        j["dry_run"] = true;
        double cost = 0;
        for (u64 p : arith::primes_in_interval(p_lo, p_hi))
          cost += static_cast<double>(p) * p * p;
        j["estimated_form_evaluations"] = cost;
        emit(j, common.out);
        return 0;
      }
      const densities::DeligneScan scan = densities::deligne_scan(p_lo, p_hi, skip);
      emit_csv(csv_path, [&scan](std::ostream& os) {
        report::write_density_csv(os, scan.records);
      });
      if (!common.out.empty() || !csv_path.empty()) {
        json j;
        j["paper_anchor"] = "Lemma 2";
        j["p_lo"] = p_lo;
        j["p_hi"] = p_hi;
        j["primes"] = scan.records.size();
        j["max_excess"] = scan.max_excess;
        if (!common.out.empty()) emit(j, common.out);
      }
      return 0;
    }

    if (*lod) {
      const fermat::PsiLattice psi = fermat::build_psi(scan_limit);
      if (common.dry_run) {
        json j;
        j["paper_anchor"] = "Lemma 3";
        j["dry_run"] = true;
        const double per_box =
            std::pow(M / static_cast<double>(psi.D) + 1, 3.0);
        j["estimated_lattice_points"] = per_box * boxes;
        j["budget"] = lod_budget;
        emit(j, common.out);
        return 0;
      }
      const densities::RemainderScanResult result =
          densities::remainder_scan(psi, M, Q, boxes, rng_seed, lod_budget);
      emit_csv(csv_path, [&result](std::ostream& os) {
        report::write_remainder_csv(os, result);
      });
      if (!common.out.empty()) {
        json j;
        j["paper_anchor"] = "Lemma 3";
        j["M"] = M;
        j["Q"] = Q;
        j["boxes"] = boxes;
        j["seed"] = rng_seed;
        j["D"] = psi.D;
        j["moduli"] = result.ds.size();
        j["empirical_L"] = result.empirical_L;
        j["envelope"] = result.envelope;
        j["ratio"] = result.empirical_L / result.envelope;
        emit(j, common.out);
      }
      return 0;
    }

    if (*fscan) {
      const std::array<double, 4> xi =
          xi_values.empty() ? xi_from_seed(seed_values) : to_xi(xi_values);
      search::ScanOptions opt;
      opt.use_psi = use_psi;
      opt.psi_scan_limit = scan_limit;
      opt.delta0 = delta0;
      opt.budget = scan_budget;
      opt.threads = common.threads;
      opt.max_examples = max_examples;
      opt.checkpoint_path = checkpoint;
      if (common.dry_run) {
        const fermat::FermatTarget t =
            fermat::make_target(xi, epsilon, B, delta0);
        const fermat::SeedBox box = fermat::target_region(t);
        json j;
        j["paper_anchor"] = "Theorem 1";
        j["dry_run"] = true;
        j["box_volume"] = to_string(box.volume());
        j["budget"] = scan_budget;
        emit(j, common.out);
        return 0;
      }
      const search::ScanReport r = search::fermat_scan(xi, epsilon, B, r_max, opt);
      if (!points_csv.empty())
        emit_csv(points_csv, [&r](std::ostream& os) {
          report::write_points_csv(os, r.examples);
        });
      emit(scan_json(r, "Theorem 1"), common.out);
      return 0;
    }

    if (*cscan) {
      const std::array<double, 4> xi = to_xi(xi_values);
      if (common.dry_run) {
        const solver::CayleyTarget t = solver::make_target(xi, B);
        json j;
        j["paper_anchor"] = "Theorem 2";
        j["dry_run"] = true;
        json iv = json::array();
        u64 width_product = 1;
        for (const auto& interval : t.intervals) {
          iv.push_back({interval.lo, interval.hi});
          width_product *= std::max<u64>(interval.length(), 1);
        }
        j["intervals"] = iv;
        j["interval_cells"] = width_product;
        emit(j, common.out);
        return 0;
      }
      search::ScanOptions opt;
      opt.max_examples = max_examples;
      opt.threads = common.threads;
      const search::ScanReport r = search::cayley_scan(xi, B, opt);
      if (!quads_csv.empty()) {
        const solver::CayleyTarget t = solver::make_target(xi, B);
        const auto quads = solver::solve_prime_quads(t);
        emit_csv(quads_csv, [&quads](std::ostream& os) {
          report::write_quads_csv(os, quads);
        });
      }
      if (!points_csv.empty())
        emit_csv(points_csv, [&r](std::ostream& os) {
          report::write_points_csv(os, r.examples);
        });
      emit(scan_json(r, "Theorem 2"), common.out);
      return 0;
    }

    if (*torsor) {
      cayley::TorsorVars tv;
      for (int i = 0; i < 4; ++i) tv.y[i] = y_values[i];
      for (int s = 0; s < 6; ++s) tv.z[s] = z_values[s];
      const cayley::TorsorValidation check = cayley::validate_torsor(tv);
      json j;
      j["paper_anchor"] = "Lemma 7";
      j["y"] = {tv.y[0], tv.y[1], tv.y[2], tv.y[3]};
      json z = json::object();
      for (int s = 0; s < 6; ++s) {
        const auto [a, b] = cayley::pair_order[s];
        z[std::string() + static_cast<char>('0' + a) +
          static_cast<char>('0' + b)] = tv.z[s];
      }
      j["z"] = z;
      j["valid"] = check.ok;
      if (!check.ok) {
        j["violation"] = check.violation;
        emit(j, common.out);
        return 0;
      }
      const cayley::CayleyPoint pt = cayley::torsor_to_point(tv);
      const cayley::VVariables vv = cayley::v_variables(tv);
      j["x"] = {pt.x[0], pt.x[1], pt.x[2], pt.x[3]};
      json v = json::object();
      for (int s = 0; s < 6; ++s) {
        const auto [a, b] = cayley::pair_order[s];
        v[std::string() + static_cast<char>('0' + a) +
          static_cast<char>('0' + b)] = vv.v[s];
      }
      j["v"] = v;
      j["v_integral"] = vv.integral;
      j["v_complementary"] = vv.complementary;
      j["quadrics"] = {vv.quadrics[0], vv.quadrics[1], vv.quadrics[2]};
      j["omega"] = pt.omega;
      j["distinct_primes"] = pt.distinct_primes;
      j["primitive"] = pt.primitive;
      emit(j, common.out);
      return 0;
    }

    if (*series) {
      json j;
      j["paper_anchor"] = "Lemma 6";
      j["P"] = series_P;
      if (common.dry_run) {
        j["dry_run"] = true;
        j["estimated_sieve_size"] = std::max<u64>(series_P, 1'000'000);
        emit(j, common.out);
        return 0;
      }
      const solver::SingularSeries s = solver::singular_series(series_P);
      j["sum"] = s.sum_form;
      j["product"] = s.product_form;
      j["tail_bound"] = s.tail_bound;
      j["difference"] = std::abs(s.product_form - s.sum_form);
      emit(j, common.out);
      return 0;
    }

    if (*hl) {
      const std::array<double, 4> xi = to_xi(xi_values);
      const solver::CayleyTarget t = solver::make_target(xi, B);
      json j;
      j["paper_anchor"] = "Lemma 6";
      j["B"] = B;
      if (common.dry_run) {
        j["dry_run"] = true;
        json iv = json::array();
        for (const auto& interval : t.intervals)
          iv.push_back({interval.lo, interval.hi});
        j["intervals"] = iv;
        emit(j, common.out);
        return 0;
      }
      const solver::HlReport r = solver::hl_compare(t, series_P, max_primes);
      j["R"] = r.R;
      j["J"] = static_cast<u64>(r.J);
      j["S"] = r.S;
      j["ratio"] = r.ratio;
      j["prime_counts"] = {r.prime_counts[0], r.prime_counts[1],
                           r.prime_counts[2], r.prime_counts[3]};
      j["quads_total"] = r.quads_total;
      j["quads_distinct"] = r.quads_distinct;
      if (!quads_csv.empty()) {
        const auto quads = solver::solve_prime_quads(t, max_primes);
        emit_csv(quads_csv, [&quads](std::ostream& os) {
          report::write_quads_csv(os, quads);
        });
      }
      emit(j, common.out);
      return 0;
    }

    if (*minom) {
      json j;
      j["paper_anchor"] = "Section 1";
      j["height"] = height;
      if (common.dry_run) {
        j["dry_run"] = true;
        j["estimated_triples"] =
            4.0 * static_cast<double>(height) * height * height;
        emit(j, common.out);
        return 0;
      }
      const search::MinOmegaResult r = search::min_omega_survey(height, x3_cap);
      j["min_omega"] = r.min_omega;
      j["witness"] = {r.witness[0], r.witness[1], r.witness[2], r.witness[3]};
      json hist = json::object();
      for (const auto& [omega, count] : r.omega_histogram)
        hist[std::to_string(omega)] = count;
      j["omega_histogram"] = hist;
      j["orbits_total"] = r.orbits_total;
      j["triples_scanned"] = r.triples_scanned;
      j["reference_witness_found"] = r.reference_witness_found;
      json low = json::array();
      for (const auto& x : r.low_omega_points)
        low.push_back({x[0], x[1], x[2], x[3]});
      j["low_omega_points"] = low;
      emit(j, common.out);
      return 0;
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
