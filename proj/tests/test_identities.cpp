#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hodgeint/identities.hpp"

using namespace hodgeint;

TEST_CASE("even bernoulli magnitudes") {
  CHECK(abs_bernoulli(0) == rat(1));
  CHECK(abs_bernoulli(1) == rat(1, 6));
  CHECK(abs_bernoulli(2) == rat(1, 30));
  CHECK(abs_bernoulli(6) == rat(691, 2730));
}

TEST_CASE("sine reciprocal coefficients") {
  CHECK(b_g(0) == rat(1));
  CHECK(b_g(1) == rat(1, 24));
  CHECK(b_g(2) == rat(7, 5760));
  CHECK(b_g(3) == rat(31, 967680));
}

TEST_CASE("top lambda class against psi powers") {
  CHECK(lambda_g_value(0, {0, 0, 0}) == rat(1));
  CHECK(lambda_g_value(1, {0}) == rat(1, 24));
  CHECK(lambda_g_value(1, {1, 0}) == rat(1, 24));
  CHECK(lambda_g_value(1, {0, 1}) == rat(1, 24));
  CHECK(lambda_g_value(2, {2}) == rat(7, 5760));
  CHECK(lambda_g_value(2, {2, 1}) == rat(7, 1920));

  CHECK_THROWS_AS(lambda_g_value(2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_g_value(0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_g_value(0, {-1, 0}), std::invalid_argument);
}

TEST_CASE("triple product values") {
  CHECK(cubic_lambda(2) == rat(1, 5760));
  CHECK(cubic_lambda(3) == rat(1, 1451520));
  CHECK_THROWS_AS(cubic_lambda(1), std::invalid_argument);
}

TEST_CASE("one point next-to-top values") {
  CHECK(g_minus_1_value(1) == rat(1, 24));
  CHECK(g_minus_1_value(2) == rat(1, 480));
  CHECK_THROWS_AS(g_minus_1_value(0), std::invalid_argument);
}

TEST_CASE("power convolutions") {
  CHECK(power_convolution_direct(1, 1, 4) == rat(10));
  CHECK(power_convolution_direct(0, 1, 3) == rat(5, 2));

  PowerConvolution p01 = power_convolution_polynomial(0, 1);
  CHECK(p01.harmonic_coeff == rat(1));
  for (int d = 2; d <= 9; ++d)
    CHECK(power_convolution_eval(p01, d) == power_convolution_direct(0, 1, d));

  PowerConvolution p12 = power_convolution_polynomial(1, 2);
  CHECK(p12.harmonic_coeff == rat(0));
  CHECK(static_cast<int>(p12.coeffs.size()) == 6);
  for (int d = 2; d <= 9; ++d)
    CHECK(power_convolution_eval(p12, d) == power_convolution_direct(1, 2, d));
}

TEST_CASE("power sum reports") {
  IdentityReport r = power_sum_check(2, 4);
  CHECK(r.pass);
  CHECK(r.left == "14/1");
  CHECK(r.identity == "power-sum-formula");
  for (int m = 1; m <= 5; ++m)
    for (int d = 2; d <= 8; ++d) CHECK(power_sum_check(m, d).pass);
}

TEST_CASE("binomial sum reports") {
  for (int g1 = 1; g1 <= 3; ++g1)
    for (int g2 = g1; g2 <= 3; ++g2) {
      auto reports = binomial_sum_lemmas(g1, g2);
      REQUIRE(reports.size() == 2);
      CHECK(reports[0].identity == "beta-binomial-sum");
      CHECK(reports[0].pass);
      CHECK(reports[1].identity == "alternating-binomial-harmonic");
      CHECK(reports[1].pass);
    }
}

TEST_CASE("bernoulli convolution reports") {
  for (int g = 1; g <= 4; ++g) CHECK(bernoulli_convolution_report(g).pass);
}

TEST_CASE("full convolution coefficient reports") {
  auto reports = power_convolution_reports(0, 1, 6);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.pass);
  auto reports2 = power_convolution_reports(1, 2, 6);
  REQUIRE(reports2.size() == 3);
  for (const auto& r : reports2) CHECK(r.pass);
}
