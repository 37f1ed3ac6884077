#include "satlab/report.hpp"

#include <charconv>
#include <cmath>

namespace satlab::report {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;  // 64 bytes always suffice for the shortest form
  return std::string(buf, ptr);
}

void write_density_csv(std::ostream& os,
                       const std::vector<densities::DensityRecord>& records) {
  os << "d,rho,normalized,deligne_excess\n";
  for (const auto& r : records)
    os << r.d << ',' << r.rho << ',' << format_double(r.normalized) << ','
       << format_double(r.deligne_excess) << '\n';
}

void write_remainder_csv(std::ostream& os,
                         const densities::RemainderScanResult& result) {
  os << "d,box_id,count,main_term,remainder\n";
  for (const auto& r : result.records)
    os << r.d << ',' << r.box_id << ',' << r.count << ','
       << format_double(r.main_term) << ',' << format_double(r.remainder)
       << '\n';
}

void write_quads_csv(std::ostream& os,
                     const std::vector<solver::PrimeQuad>& quads) {
  os << "p0,p1,p2,p3,distinct\n";
  for (const auto& q : quads)
    os << q.p[0] << ',' << q.p[1] << ',' << q.p[2] << ',' << q.p[3] << ','
       << (q.distinct ? 1 : 0) << '\n';
}

void write_points_csv(std::ostream& os,
                      const std::vector<search::PointRecord>& points) {
  os << "x0,x1,x2,x3,omega,distinct_primes,approx_error\n";
  for (const auto& p : points)
    os << p.x[0] << ',' << p.x[1] << ',' << p.x[2] << ',' << p.x[3] << ','
       << p.omega << ',' << p.distinct_primes << ','
       << format_double(p.approx_error) << '\n';
}

}  // namespace satlab::report
