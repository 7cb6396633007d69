#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hodgeint/hurwitz.hpp"

using namespace hodgeint;

TEST_CASE("branch point counts") {
  CHECK(hurwitz_r(0, Partition{1}) == 0);
  CHECK(hurwitz_r(0, Partition{3}) == 2);
  CHECK(hurwitz_r(0, Partition{1, 1}) == 2);
  CHECK(hurwitz_r(1, Partition{2}) == 3);
  CHECK(hurwitz_r(2, Partition{2}) == 5);
}

TEST_CASE("character expansion of the connected series at low weight") {
  PartitionSeries phi = burnside_phi(2, 5);

  // Degree one: a single unramified sheet, nothing else.
  REQUIRE(phi.coeff_ptr(Partition{1}) != nullptr);
  const LambdaSeries& s1 = *phi.coeff_ptr(Partition{1});
  CHECK(s1.coeff(0).at_zero() == GaussRat(rat(1)));
  for (long k = 1; k <= 5; ++k) CHECK(s1.coeff(k).is_zero());

  // Degree two, one cycle: sinh(lambda)/2.
  REQUIRE(phi.coeff_ptr(Partition{2}) != nullptr);
  const LambdaSeries& s2 = *phi.coeff_ptr(Partition{2});
  CHECK(s2.coeff(1).at_zero() == GaussRat(rat(1, 2)));
  CHECK(s2.coeff(2).is_zero());
  CHECK(s2.coeff(3).at_zero() == GaussRat(rat(1, 12)));
  CHECK(s2.coeff(4).is_zero());
  CHECK(s2.coeff(5).at_zero() == GaussRat(rat(1, 240)));
}

TEST_CASE("hurwitz numbers read off the series") {
  PartitionSeries phi = burnside_phi(3, 8);
  CHECK(hurwitz_from_phi(phi, 0, Partition{1}) == rat(1));
  CHECK(hurwitz_from_phi(phi, 1, Partition{1}) == rat(0));
  CHECK(hurwitz_from_phi(phi, 0, Partition{2}) == rat(1, 2));
  CHECK(hurwitz_from_phi(phi, 1, Partition{2}) == rat(1, 2));
  CHECK(hurwitz_from_phi(phi, 2, Partition{2}) == rat(1, 2));
  CHECK(hurwitz_from_phi(phi, 0, Partition{1, 1}) == rat(1, 2));
  CHECK(hurwitz_from_phi(phi, 0, Partition{3}) == rat(1));
}

TEST_CASE("cut-and-join flow reproduces the character expansion") {
  HurwitzTable a = burnside_hurwitz(3, 2);
  HurwitzTable b = cutjoin_hurwitz(3, 2);
  REQUIRE(a.entries.size() == b.entries.size());
  for (const auto& [key, entry] : a.entries) {
    auto it = b.entries.find(key);
    REQUIRE(it != b.entries.end());
    CHECK(it->second.value == entry.value);
    CHECK(it->second.r == entry.r);
  }
}

TEST_CASE("brute-force count agrees where affordable") {
  CHECK(oracle_hurwitz(0, Partition{1}) == rat(1));
  CHECK(oracle_hurwitz(0, Partition{2}) == rat(1, 2));
  CHECK(oracle_hurwitz(1, Partition{2}) == rat(1, 2));
  CHECK(oracle_hurwitz(0, Partition{3}) == rat(1));
  CHECK(oracle_hurwitz(0, Partition{1, 1}) == rat(1, 2));

  CHECK(oracle_feasible(3, Partition{1}));    // r = 6
  CHECK(!oracle_feasible(4, Partition{1}));   // r = 8
  CHECK_THROWS_AS(oracle_hurwitz(4, Partition{1}), std::invalid_argument);

  HurwitzTable a = burnside_hurwitz(4, 1);
  HurwitzTable o = oracle_hurwitz_table(4, 1);
  CHECK(!o.entries.empty());
  for (const auto& [key, entry] : o.entries) {
    auto it = a.entries.find(key);
    REQUIRE(it != a.entries.end());
    CHECK(it->second.value == entry.value);
  }
}

TEST_CASE("inverting the cover count isolates the linear Hodge integral") {
  // Stable cases.
  LinearHodgeValue v11 = elsv_invert_one(1, Partition{1}, rat(0));
  CHECK(v11.stable);
  CHECK(v11.integral == rat(0));

  LinearHodgeValue v12 = elsv_invert_one(1, Partition{2}, rat(1, 2));
  CHECK(v12.stable);
  CHECK(v12.scaled == rat(1, 12));
  CHECK(v12.integral == rat(1, 24));

  // Unstable genus-zero cases carry |mu|^{length-3}.
  LinearHodgeValue u1 = elsv_invert_one(0, Partition{1}, rat(1));
  CHECK(!u1.stable);
  CHECK(u1.integral == rat(1));
  LinearHodgeValue u2 = elsv_invert_one(0, Partition{2}, rat(1, 2));
  CHECK(!u2.stable);
  CHECK(u2.integral == rat(1, 4));
  LinearHodgeValue u11 = elsv_invert_one(0, Partition{1, 1}, rat(1, 2));
  CHECK(!u11.stable);
  CHECK(u11.integral == rat(1, 2));
}

TEST_CASE("table-level inversion matches the single-entry inversion") {
  HurwitzTable t = burnside_hurwitz(2, 1);
  LinearHodgeTable h = elsv_invert(t);
  REQUIRE(h.entries.size() == t.entries.size());
  for (const auto& [key, entry] : t.entries) {
    auto it = h.entries.find(key);
    REQUIRE(it != h.entries.end());
    LinearHodgeValue direct = elsv_invert_one(key.g, key.mu, entry.value);
    CHECK(it->second.integral == direct.integral);
    CHECK(it->second.scaled == direct.scaled);
    CHECK(it->second.stable == direct.stable);
  }
}
