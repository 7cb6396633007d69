#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hodgeint/bernoulli.hpp"
#include "hodgeint/lambda_series.hpp"
#include "hodgeint/rational.hpp"
#include "hodgeint/tau_polynomial.hpp"

using namespace hodgeint;

TEST_CASE("rational helpers normalize and round-trip") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(rat(3, -6) == rat(-1, 2));
  CHECK(rat_to_string(rat(1)) == "1/1");
  CHECK(rat_to_string(rat(0)) == "0/1");
  CHECK(rat_to_string(rat(-7, 2)) == "-7/2");
  CHECK(rat_from_string("-7/5760") == rat(-7, 5760));
  CHECK(rat_from_string(rat_to_string(rat(355, 113))) == rat(355, 113));
}

TEST_CASE("factorials binomials multinomials harmonic numbers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(7, 0) == 1);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(multinomial({0, 0}) == 1);
  CHECK(harmonic(1) == rat(1));
  CHECK(harmonic(3) == rat(11, 6));
  CHECK(rat_pow(rat(2), 5) == rat(32));
  CHECK(rat_pow(rat(3), 0) == rat(1));
}

TEST_CASE("powers of sqrt(-1) cycle with period four") {
  CHECK(i_pow(0) == GaussRat(Rat(1)));
  CHECK(i_pow(1) == GaussRat(Rat(0), Rat(1)));
  CHECK(i_pow(2) == GaussRat(Rat(-1)));
  CHECK(i_pow(3) == GaussRat(Rat(0), Rat(-1)));
  CHECK(i_pow(7) == i_pow(3));
  CHECK(i_pow(-1) == GaussRat(Rat(0), Rat(-1)));
  CHECK(i_pow(-2) == GaussRat(Rat(-1)));
  CHECK(i_pow(3) * i_pow(1) == GaussRat(Rat(1)));
  GaussRat z(rat(1), rat(2));
  CHECK(z.conj() == GaussRat(rat(1), rat(-2)));
  CHECK((z * z.conj()).is_real());
  CHECK(GaussRat(rat(5)).is_real());
  CHECK(!z.is_real());
}

TEST_CASE("bernoulli numbers by recursion and by series division") {
  CHECK(bernoulli(0) == rat(1));
  CHECK(bernoulli(1) == rat(-1, 2));
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(4) == rat(-1, 30));
  CHECK(bernoulli(12) == rat(-691, 2730));
  for (unsigned m = 3; m <= 19; m += 2) CHECK(bernoulli(m) == 0);

  std::vector<Rat> s = bernoulli_by_series(20);
  REQUIRE(s.size() == 21);
  for (unsigned m = 0; m <= 20; ++m) CHECK(s[m] == bernoulli(m));
}

TEST_CASE("tau polynomials") {
  TauPoly one(GaussRat(Rat(1)));
  TauPoly t = TauPoly::tau();
  CHECK(one.is_constant());
  CHECK(!t.is_constant());
  CHECK(t.degree() == 1);

  TauPoly q = t * t;
  CHECK(q.degree() == 2);
  CHECK(q.coeff(2) == GaussRat(Rat(1)));
  CHECK(q.coeff(1) == GaussRat(Rat(0)));
  CHECK(q.eval(GaussRat(Rat(2))) == GaussRat(Rat(4)));
  CHECK(q.at_zero() == GaussRat(Rat(0)));
  CHECK(q.divisible_by_tau_pow(2));
  CHECK(!q.divisible_by_tau_pow(3));
  CHECK(q.div_tau_pow(1).degree() == 1);
  CHECK_THROWS_AS(q.div_tau_pow(3), std::domain_error);

  TauPoly m = TauPoly::monomial(GaussRat(rat(3)), 2);
  CHECK(m.coeff(2) == GaussRat(rat(3)));
  CHECK((m + q).coeff(2) == GaussRat(rat(4)));
}

TEST_CASE("sine series and reciprocal recover the closed-form coefficients") {
  LambdaSeries s = sin_double_half(1, 5);  // 2 sin(lambda/2)
  CHECK(s.min_exp() == 1);
  CHECK(s.coeff(1).at_zero() == GaussRat(rat(1)));
  CHECK(s.coeff(2).is_zero());
  CHECK(s.coeff(3).at_zero() == GaussRat(rat(-1, 24)));
  CHECK(s.coeff(5).at_zero() == GaussRat(rat(1, 1920)));
  CHECK_THROWS_AS(s.coeff(6), std::out_of_range);

  LambdaSeries s2 = sin_double_half(2, 3);  // 2 sin(lambda)
  CHECK(s2.coeff(1).at_zero() == GaussRat(rat(2)));
  CHECK(s2.coeff(3).at_zero() == GaussRat(rat(-1, 3)));

  // lambda / (2 sin(lambda/2))
  LambdaSeries inv = s.inverted().shifted(1);
  CHECK(inv.coeff(0).at_zero() == GaussRat(rat(1)));
  CHECK(inv.coeff(1).is_zero());
  CHECK(inv.coeff(2).at_zero() == GaussRat(rat(1, 24)));
  CHECK(inv.coeff(4).at_zero() == GaussRat(rat(7, 5760)));
}

TEST_CASE("lambda series algebra: truncation, twist, exp/log") {
  LambdaSeries s = sin_double_half(1, 5);
  CHECK(s.truncated(3).order() == 3);
  CHECK_THROWS_AS(s.truncated(7), std::out_of_range);

  LambdaSeries tw = s.i_twisted();
  CHECK(tw.coeff(1).at_zero() == GaussRat(Rat(0), Rat(1)));
  CHECK(tw.coeff(3).at_zero() == GaussRat(Rat(0), rat(1, 24)));

  LambdaSeries z = LambdaSeries::zero(4);
  CHECK(z.is_zero());
  CHECK(z.min_exp() == LambdaSeries::kInf);
  LambdaSeries zs = z + s;
  CHECK(zs.min_exp() == s.min_exp());
  CHECK(compare_series(zs, s, 4).empty());

  LambdaSeries u = LambdaSeries::monomial(TauPoly(GaussRat(Rat(1))), 1, 6) +
                   LambdaSeries::monomial(TauPoly(GaussRat(rat(1, 2))), 3, 6);
  LambdaSeries e = u.exp_series();
  CHECK(e.coeff(0).at_zero() == GaussRat(rat(1)));
  CHECK(e.coeff(2).at_zero() == GaussRat(rat(1, 2)));  // u^2/2 term
  CHECK(compare_series(e.log_series(), u, 6).empty());
}

TEST_CASE("series exp/log reject series outside their domains") {
  LambdaSeries c = LambdaSeries::one(3);
  CHECK_THROWS_AS(c.exp_series(), std::domain_error);  // constant term present
  LambdaSeries p = LambdaSeries::monomial(TauPoly(GaussRat(Rat(1))), -1, 3);
  CHECK_THROWS_AS(p.log_series(), std::domain_error);  // polar part
  CHECK_THROWS_AS(LambdaSeries::zero(3).inverted(), std::domain_error);
}

TEST_CASE("hyperbolic reciprocal alternates against the sine reciprocal") {
  // 2 sinh(t/2), then t / (2 sinh(t/2)); coefficient at t^{2g} is (-1)^g b_g.
  long order = 6;
  LambdaSeries sh = LambdaSeries::zero(order);
  Rat pow2 = 2;  // 2^{2k+1}
  for (long k = 0; 2 * k + 1 <= order; ++k) {
    sh += LambdaSeries::monomial(
        TauPoly(GaussRat(Rat(2) / (pow2 * Rat(factorial(static_cast<unsigned long>(2 * k + 1)))))),
        2 * k + 1, order);
    pow2 *= 4;
  }
  LambdaSeries f = sh.inverted().shifted(1);
  CHECK(f.coeff(0).at_zero() == GaussRat(rat(1)));
  CHECK(f.coeff(2).at_zero() == GaussRat(rat(-1, 24)));
  CHECK(f.coeff(4).at_zero() == GaussRat(rat(7, 5760)));
}
