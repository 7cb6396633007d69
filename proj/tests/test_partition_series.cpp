#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hodgeint/partition_series.hpp"

using namespace hodgeint;

namespace {

// p_mu with a constant unit coefficient, valid to `order`.
PartitionSeries unit(int bound, const Partition& mu, long order) {
  PartitionSeries f(bound);
  f.set(mu, LambdaSeries::one(order));
  return f;
}

GaussRat const_coeff(const PartitionSeries& f, const Partition& mu, long k) {
  return f.coeff(mu).coeff(k).at_zero();
}

}  // namespace

TEST_CASE("structural zero versus computed zero") {
  PartitionSeries f(3);
  CHECK(f.coeff_ptr(Partition{2}) == nullptr);
  LambdaSeries fallback = f.coeff(Partition{2});
  CHECK(fallback.is_zero());
  CHECK(fallback.order() == LambdaSeries::kInf);

  f.set(Partition{2}, LambdaSeries::zero(4));
  REQUIRE(f.coeff_ptr(Partition{2}) != nullptr);
  CHECK(f.coeff(Partition{2}).order() == 4);
}

TEST_CASE("sums, products, weight truncation") {
  PartitionSeries a = unit(4, Partition{1}, 5);
  PartitionSeries b = unit(4, Partition{2}, 5);
  PartitionSeries s = ps_add(a, b);
  CHECK(const_coeff(s, Partition{1}, 0) == GaussRat(Rat(1)));
  CHECK(const_coeff(s, Partition{2}, 0) == GaussRat(Rat(1)));

  PartitionSeries prod = ps_mul(a, b);  // p_1 * p_2 = p_{2,1}
  CHECK(const_coeff(prod, Partition{2, 1}, 0) == GaussRat(Rat(1)));

  // weight bound 4: p_{2,1} * p_2 would have weight 5 and must be dropped
  PartitionSeries over = ps_mul(prod, b);
  CHECK(over.coeff_ptr(Partition{2, 2, 1}) == nullptr);

  PartitionSeries sq = ps_mul(a, a);  // p_1 * p_1 = p_{1,1}
  CHECK(const_coeff(sq, Partition{1, 1}, 0) == GaussRat(Rat(1)));

  PartitionSeries scaled = ps_scaled(a, GaussRat(rat(3)), 2);
  CHECK(const_coeff(scaled, Partition{1}, 2) == GaussRat(rat(3)));
  CHECK(scaled.coeff(Partition{1}).coeff(0).is_zero());
}

TEST_CASE("partial derivatives use the multiplicity convention") {
  PartitionSeries f = unit(3, Partition{2, 1}, 4);
  CHECK(const_coeff(partial_p(f, 1), Partition{2}, 0) == GaussRat(Rat(1)));
  CHECK(const_coeff(partial_p(f, 2), Partition{1}, 0) == GaussRat(Rat(1)));
  CHECK(partial_p(f, 3).coeff_ptr(Partition{3}) == nullptr);

  PartitionSeries g = unit(3, Partition{1, 1}, 4);
  CHECK(const_coeff(partial_p(g, 1), Partition{1}, 0) == GaussRat(rat(2)));
}

TEST_CASE("cut-and-join on single power sums") {
  // CJ(p_1): only the first-derivative square term contributes: p_2.
  PartitionSeries p1 = unit(2, Partition{1}, 4);
  PartitionSeries cj1 = cut_join_apply(p1);
  CHECK(const_coeff(cj1, Partition{2}, 0) == GaussRat(rat(1)));
  CHECK(cj1.coeff(Partition{1, 1}).is_zero());

  // CJ(p_2) at weight bound 2: the join part 2 p_1 p_1.
  PartitionSeries p2 = unit(2, Partition{2}, 4);
  PartitionSeries cj2 = cut_join_apply(p2);
  CHECK(const_coeff(cj2, Partition{1, 1}, 0) == GaussRat(rat(2)));

  // With room for weight 4 the square term adds 4 p_4.
  PartitionSeries p2w = unit(4, Partition{2}, 4);
  PartitionSeries cj2w = cut_join_apply(p2w);
  CHECK(const_coeff(cj2w, Partition{1, 1}, 0) == GaussRat(rat(2)));
  CHECK(const_coeff(cj2w, Partition{4}, 0) == GaussRat(rat(4)));
}

TEST_CASE("verify_cut_join flags exactly the planted discrepancy") {
  PartitionSeries f = unit(4, Partition{2}, 4);
  PartitionSeries lhs = ps_scaled(cut_join_apply(f), GaussRat(rat(1, 2)), 1);
  CHECK(verify_cut_join(f, lhs, GaussRat(rat(1, 2)), 1, 3).empty());

  PartitionSeries bad = lhs;
  bad.add_to(Partition{1, 1},
             LambdaSeries::monomial(TauPoly(GaussRat(rat(1, 7))), 2, 4));
  std::vector<CutJoinMismatch> ms = verify_cut_join(f, bad, GaussRat(rat(1, 2)), 1, 3);
  REQUIRE(!ms.empty());
  CHECK(ms.front().mu == Partition{1, 1});
  CHECK(ms.front().lambda_exp == 2);
}

TEST_CASE("exp and log are mutually inverse on weight-graded series") {
  PartitionSeries u(3);
  u.set(Partition{1}, LambdaSeries::monomial(TauPoly(GaussRat(Rat(1))), 1, 6));
  u.set(Partition{2}, LambdaSeries::monomial(TauPoly(GaussRat(rat(1, 3))), 2, 6));
  PartitionSeries z = ps_exp(u);
  CHECK(const_coeff(z, Partition{}, 0) == GaussRat(Rat(1)));
  CHECK(const_coeff(z, Partition{1}, 1) == GaussRat(Rat(1)));
  CHECK(const_coeff(z, Partition{1, 1}, 2) == GaussRat(rat(1, 2)));
  CHECK(compare_partition_series(ps_log(z), u, 6).empty());
}

TEST_CASE("tau and lambda calculus on partition series") {
  PartitionSeries f(2);
  f.set(Partition{1},
        LambdaSeries::monomial(TauPoly::monomial(GaussRat(rat(5)), 2), 1, 4));
  PartitionSeries df = ps_tau_derivative(f);
  CHECK(df.coeff(Partition{1}).coeff(1).coeff(1) == GaussRat(rat(10)));
  PartitionSeries f0 = ps_at_tau_zero(f);
  CHECK(f0.coeff(Partition{1}).coeff(1).is_zero());

  PartitionSeries g(2);
  g.set(Partition{2}, LambdaSeries::monomial(TauPoly(GaussRat(rat(3))), 2, 4));
  PartitionSeries gi = ps_lambda_integral(g);
  CHECK(gi.coeff(Partition{2}).coeff(3).at_zero() == GaussRat(rat(1)));
  CHECK(compare_partition_series(ps_lambda_derivative(gi), g, 3).empty());
}
