#include <doctest.h>

#include <cmath>

#include <satlab/errors.hpp>
#include <satlab/sieve_constants.hpp>

using namespace satlab;
using namespace satlab::sieve_constants;

namespace {
constexpr double kBeta4 = 9.0722;
}

TEST_SUITE_BEGIN("sieve_constants");

TEST_CASE("cost function at the published minimizer") {
  CHECK(m_lambda(0.4147489, kBeta4) == doctest::Approx(19.7559).epsilon(1e-4));
  CHECK_THROWS_AS((void)m_lambda(0, kBeta4), validation_error);
  CHECK_THROWS_AS((void)m_lambda(kBeta4, kBeta4), validation_error);
  CHECK_THROWS_AS((void)m_lambda(0.5, 0), validation_error);
}

TEST_CASE("golden-section minimum") {
  const MinimizeResult r = minimize_m(kBeta4);
  CHECK(r.lambda_star == doctest::Approx(0.4147489).epsilon(1e-5));
  CHECK(r.m_star == doctest::Approx(19.7559).epsilon(1e-4));
  CHECK(r.m_star == doctest::Approx(m_lambda(r.lambda_star, kBeta4)));

  // Independent optimality checks: flat derivative, and no grid point beats it.
  CHECK(std::abs(m_lambda_derivative(r.lambda_star, kBeta4)) < 1e-5);
  for (int k = 1; k < 1000; ++k) {
    const double lambda = kBeta4 * k / 1000.0;
    CHECK(m_lambda(lambda, kBeta4) >= r.m_star - 1e-12);
  }
}

TEST_CASE("derivative matches a central difference") {
  for (double lambda : {0.1, 0.4147489, 1.0, 3.0, 8.0}) {
    const double h = 1e-6;
    const double fd =
        (m_lambda(lambda + h, kBeta4) - m_lambda(lambda - h, kBeta4)) / (2 * h);
    CHECK(m_lambda_derivative(lambda, kBeta4) ==
          doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("admissible sieve order") {
  CHECK(admissible_r(kBeta4) == 20);
}

TEST_CASE("level-of-distribution audit") {
  const LevelAudit ok = level_audit(0.45, 9);
  CHECK(ok.alpha_ok);
  CHECK(ok.mu_ok);
  CHECK(ok.uv_ok);
  CHECK(ok.exponents_ok);
  CHECK(ok.u_example > 1 / 0.45);
  CHECK(ok.v_example > ok.u_example);
  CHECK(0.45 * ok.v_example > kBeta4);
  CHECK(ok.exp_half_alpha == doctest::Approx(0.45 / 2 + 2.0 / 3));
  CHECK(ok.exp_alpha_third == doctest::Approx(0.45 + 1.0 / 3));
  CHECK(ok.exp_two_alpha == doctest::Approx(0.9));
  CHECK(ok.exp_half_alpha < 1);
  CHECK(ok.exp_alpha_third < 1);
  CHECK(ok.exp_two_alpha < 1);

  CHECK_FALSE(level_audit(0.6, 9).alpha_ok);
  CHECK_FALSE(level_audit(0.6, 9).exponents_ok);
  CHECK_FALSE(level_audit(0.45, 5).mu_ok);  // needs mu > 4/alpha ~ 8.9
  CHECK_THROWS_AS((void)level_audit(0.0, 9), validation_error);
  CHECK_THROWS_AS((void)level_audit(0.45, 9, 0.0), validation_error);
}

TEST_SUITE_END();
