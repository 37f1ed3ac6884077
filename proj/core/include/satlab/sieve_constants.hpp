#pragma once

namespace satlab::sieve_constants {

// The weighted-sieve cost function
//   m(lambda) = (3 + 4 log b) + (8 - 4/b + log b) lambda - 4 log lambda
//               - lambda log lambda
// at sieve dimension 4, where b is the Diamond-Halberstam constant beta_4.
// Domain 0 < lambda < b.
double m_lambda(double lambda, double beta4);

// Closed-form derivative of m_lambda in lambda, used as an independent check
// on the minimizer: (8 - 4/b + log b) - 4/lambda - log lambda - 1.
double m_lambda_derivative(double lambda, double beta4);

struct MinimizeResult {
  double lambda_star = 0;
  double m_star = 0;
};

// Golden-section minimum of m_lambda over (0, beta4), to absolute accuracy
// 1e-8 in lambda.  m is unimodal there: its derivative increases on (0, 4)
// and stays positive afterwards for the beta4 range of interest.
MinimizeResult minimize_m(double beta4);

// Smallest integer strictly greater than the minimum of m; 20 at
// beta4 = 9.0722.
int admissible_r(double beta4);

// Bookkeeping for the level-of-distribution hypotheses: alpha < 1/2,
// mu > 4/alpha, existence of 1/alpha < u < v with beta4 < alpha v, and the
// three exponent checks alpha/2 + 2/3 < 1, alpha + 1/3 < 1, 2 alpha < 1.
struct LevelAudit {
  double alpha = 0;
  double mu_exp = 0;
  double beta4 = 0;
  bool alpha_ok = false;
  bool mu_ok = false;
  bool uv_ok = false;
  double u_example = 0;
  double v_example = 0;
  double exp_half_alpha = 0;  // alpha/2 + 2/3
  double exp_alpha_third = 0; // alpha + 1/3
  double exp_two_alpha = 0;   // 2 alpha
  bool exponents_ok = false;
};
LevelAudit level_audit(double alpha, double mu_exp, double beta4 = 9.0722);

}  // namespace satlab::sieve_constants
