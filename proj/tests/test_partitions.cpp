#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hodgeint/character.hpp"
#include "hodgeint/partition.hpp"
#include "hodgeint/rational.hpp"

using namespace hodgeint;

TEST_CASE("partition enumeration in canonical order") {
  std::vector<Partition> p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4.back() == Partition{1, 1, 1, 1});

  std::vector<Partition> up3 = partitions_up_to(3);
  REQUIRE(up3.size() == 7);
  CHECK(up3[0] == Partition{});
  CHECK(up3[1] == Partition{1});
  CHECK(up3[2] == Partition{2});
  CHECK(up3[3] == Partition{1, 1});
  CHECK(up3[4] == Partition{3});
  CHECK(up3[5] == Partition{2, 1});
  CHECK(up3[6] == Partition{1, 1, 1});

  PartitionLess less;
  CHECK(less(Partition{3}, Partition{2, 1}));
  CHECK(less(Partition{1, 1}, Partition{3}));
  CHECK(!less(Partition{2, 1}, Partition{3}));
}

TEST_CASE("weights, lengths, canonical keys") {
  CHECK(weight(Partition{3, 1, 1}) == 5);
  CHECK(length(Partition{3, 1, 1}) == 3);
  CHECK(partition_key(Partition{3, 1, 1}) == "3.1.1");
  CHECK(partition_key(Partition{}) == "");
  CHECK(partition_from_key("3.1.1") == Partition{3, 1, 1});
  for (const Partition& p : partitions_up_to(6))
    CHECK(partition_from_key(partition_key(p)) == p);
}

TEST_CASE("partition statistics") {
  PartitionStats s21 = partition_stats(Partition{2, 1});
  CHECK(s21.z == 2);
  CHECK(s21.kappa == 0);
  CHECK(s21.dim == 2);
  CHECK(s21.hooks == std::vector<int>{3, 1, 1});

  PartitionStats s2 = partition_stats(Partition{2});
  CHECK(s2.z == 2);
  CHECK(s2.kappa == 2);
  CHECK(s2.dim == 1);

  PartitionStats s11 = partition_stats(Partition{1, 1});
  CHECK(s11.kappa == -2);
  CHECK(s11.z == 2);

  CHECK(conjugacy_class_size(Partition{2, 1}) == 3);
  CHECK(conjugacy_class_size(Partition{1, 1, 1}) == 1);

  // sum over classes of |C(mu)| equals |S_4|
  Int total = 0;
  for (const Partition& mu : partitions_of(4)) total += conjugacy_class_size(mu);
  CHECK(total == 24);
}

TEST_CASE("conjugation and part surgery") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  for (const Partition& p : partitions_up_to(5))
    CHECK(conjugate(conjugate(p)) == p);
  CHECK(multiplicity(Partition{2, 1, 1}, 1) == 2);
  CHECK(multiplicity(Partition{2, 1, 1}, 3) == 0);
  CHECK(remove_one_part(Partition{2, 1}, 1) == Partition{2});
  CHECK_THROWS(remove_one_part(Partition{2, 1}, 3));
  CHECK(with_part(Partition{2, 1}, 2) == Partition{2, 2, 1});
  CHECK(merged(Partition{2, 1}, Partition{3, 1}) == Partition{3, 2, 1, 1});
  std::map<int, int> mult = part_multiplicities(Partition{3, 1, 1});
  CHECK(mult[1] == 2);
  CHECK(mult[3] == 1);
}

TEST_CASE("symmetric group characters") {
  CHECK(character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(character(Partition{3}, Partition{2, 1}) == 1);        // trivial
  CHECK(character(Partition{1, 1, 1}, Partition{2, 1}) == -1);  // sign
  CHECK(character(Partition{2}, Partition{2}) == 1);
  CHECK(character(Partition{1, 1}, Partition{2}) == -1);

  // chi_nu(identity) is the hook-length dimension
  for (int n = 1; n <= 6; ++n) {
    Partition id(static_cast<size_t>(n), 1);
    for (const Partition& nu : partitions_of(n))
      CHECK(Int(static_cast<long>(character(nu, id))) == partition_stats(nu).dim);
  }
}

TEST_CASE("character columns are orthogonal with norm z_mu") {
  for (int n = 1; n <= 5; ++n) {
    const CharacterTable& tab = character_table(n);
    for (const Partition& mu : partitions_of(n)) {
      for (const Partition& nu : partitions_of(n)) {
        long long dot = 0;
        for (const Partition& row : tab.parts)
          dot += tab.at(row, mu) * tab.at(row, nu);
        if (mu == nu)
          CHECK(Rat(static_cast<long>(dot)) == Rat(partition_stats(mu).z));
        else
          CHECK(dot == 0);
      }
    }
  }
}
