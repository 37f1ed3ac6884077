#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

#include <satlab/report.hpp>

using namespace satlab;
using namespace satlab::report;

TEST_SUITE_BEGIN("report");

TEST_CASE("double formatting is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");

  std::mt19937_64 rng(603);
  std::uniform_real_distribution<double> dist(-1e9, 1e9);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng);
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("density table layout") {
  std::vector<densities::DensityRecord> recs(2);
  recs[0] = {5, 73, 73.0 / 25, 2.4};
  recs[1] = {7, 73, 73.0 / 49, 6.6};
  std::ostringstream os;
  write_density_csv(os, recs);
  CHECK(os.str() ==
        "d,rho,normalized,deligne_excess\n"
        "5,73,2.92,2.4\n"
        "7,73," + format_double(73.0 / 49) + ",6.6\n");
}

TEST_CASE("remainder table layout") {
  densities::RemainderScanResult r;
  densities::RemainderRecord rec;
  rec.d = 5;
  rec.box_id = 3;
  rec.count = 17;
  rec.main_term = 16.25;
  rec.remainder = 0.75;
  r.records.push_back(rec);
  std::ostringstream os;
  write_remainder_csv(os, r);
  CHECK(os.str() ==
        "d,box_id,count,main_term,remainder\n"
        "5,3,17,16.25,0.75\n");
}

TEST_CASE("quad table layout") {
  solver::PrimeQuad a;
  a.p = {19, 3, 5, 11};
  a.distinct = true;
  solver::PrimeQuad b;
  b.p = {3, 3, 5, 11};
  b.distinct = false;
  std::ostringstream os;
  write_quads_csv(os, {a, b});
  CHECK(os.str() ==
        "p0,p1,p2,p3,distinct\n"
        "19,3,5,11,1\n"
        "3,3,5,11,0\n");
}

TEST_CASE("point table layout") {
  search::PointRecord p;
  p.x = {-165, 1045, 627, 285};
  p.omega = 12;
  p.distinct_primes = 4;
  p.approx_error = 0.125;
  std::ostringstream os;
  write_points_csv(os, {p});
  CHECK(os.str() ==
        "x0,x1,x2,x3,omega,distinct_primes,approx_error\n"
        "-165,1045,627,285,12,4,0.125\n");
}

TEST_CASE("identical inputs serialize to identical bytes") {
  std::vector<densities::DensityRecord> recs(3);
  recs[0] = {5, 73, 2.92, 2.4149};
  recs[1] = {7, 73, 1.4898, 6.6394};
  recs[2] = {11, 421, 3.479, 1.5905};
  std::ostringstream a, b;
  write_density_csv(a, recs);
  write_density_csv(b, recs);
  CHECK(a.str() == b.str());
}

TEST_SUITE_END();
