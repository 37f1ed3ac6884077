#include "satlab/sieve_constants.hpp"

#include <cmath>

#include "satlab/errors.hpp"

namespace satlab::sieve_constants {

namespace {

void check_beta4(double beta4) {
  if (!(beta4 > 1) || !(beta4 < 100))
    throw validation_error("beta4 outside the plausible range (1, 100)");
}

}  // namespace

double m_lambda(double lambda, double beta4) {
  check_beta4(beta4);
  if (!(lambda > 0) || !(lambda < beta4))
    throw validation_error("m_lambda: lambda must lie in (0, beta4)");
  const double lb = std::log(beta4);
  return (3 + 4 * lb) + (8 - 4 / beta4 + lb) * lambda - 4 * std::log(lambda) -
         lambda * std::log(lambda);
}

double m_lambda_derivative(double lambda, double beta4) {
  check_beta4(beta4);
  if (!(lambda > 0) || !(lambda < beta4))
    throw validation_error("m_lambda_derivative: lambda must lie in (0, beta4)");
  return (8 - 4 / beta4 + std::log(beta4)) - 4 / lambda - std::log(lambda) - 1;
}

MinimizeResult minimize_m(double beta4) {
  check_beta4(beta4);
  // m -> +inf at both ends of (0, beta4) and is unimodal in between, so
  // golden-section bracketing converges to the global minimum.
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = 1e-12, b = beta4 - 1e-12;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = m_lambda(c, beta4), fd = m_lambda(d, beta4);
  while (b - a > 1e-8) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = m_lambda(c, beta4);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = m_lambda(d, beta4);
    }
  }
  MinimizeResult r;
  r.lambda_star = (a + b) / 2;
  r.m_star = m_lambda(r.lambda_star, beta4);
  return r;
}

int admissible_r(double beta4) {
  const MinimizeResult r = minimize_m(beta4);
  return static_cast<int>(std::floor(r.m_star)) + 1;
}

LevelAudit level_audit(double alpha, double mu_exp, double beta4) {
  check_beta4(beta4);
  if (!(alpha > 0)) throw validation_error("level_audit: alpha must be positive");

  LevelAudit audit;
  audit.alpha = alpha;
  audit.mu_exp = mu_exp;
  audit.beta4 = beta4;
  audit.alpha_ok = alpha < 0.5;
  audit.mu_ok = mu_exp > 4 / alpha;

  // Need 1/alpha < u < v with beta4 < alpha v; pick u just above 1/alpha and
  // v comfortably past both constraints.
  audit.u_example = 1 / alpha + 1;
  audit.v_example = std::max(audit.u_example + 1, beta4 / alpha + 1);
  audit.uv_ok = audit.u_example > 1 / alpha &&
                audit.v_example > audit.u_example &&
                beta4 < alpha * audit.v_example;

  audit.exp_half_alpha = alpha / 2 + 2.0 / 3.0;
  audit.exp_alpha_third = alpha + 1.0 / 3.0;
  audit.exp_two_alpha = 2 * alpha;
  audit.exponents_ok = audit.exp_half_alpha < 1 && audit.exp_alpha_third < 1 &&
                       audit.exp_two_alpha < 1;
  return audit;
}

}  // namespace satlab::sieve_constants
