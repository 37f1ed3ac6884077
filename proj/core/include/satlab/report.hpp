#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "satlab/densities.hpp"
#include "satlab/prime_solver.hpp"
#include "satlab/search.hpp"

namespace satlab::report {

// Shortest round-trip decimal form of a double, locale-independent, identical
// across runs (the determinism contract for CSV output).
std::string format_double(double v);

// CSV writers.  ASCII, one header row, no quoting; every field numeric.

// Columns: d,rho,normalized,deligne_excess
void write_density_csv(std::ostream& os,
                       const std::vector<densities::DensityRecord>& records);

// Columns: d,box_id,count,main_term,remainder
void write_remainder_csv(std::ostream& os,
                         const densities::RemainderScanResult& result);

// Columns: p0,p1,p2,p3,distinct
void write_quads_csv(std::ostream& os,
                     const std::vector<solver::PrimeQuad>& quads);

// Columns: x0,x1,x2,x3,omega,distinct_primes,approx_error
void write_points_csv(std::ostream& os,
                      const std::vector<search::PointRecord>& points);

}  // namespace satlab::report
