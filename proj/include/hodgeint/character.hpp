#pragma once

#include "hodgeint/partition.hpp"

namespace hodgeint {

// Full character table of S_n, rows and columns in the canonical partition
// order (decreasing lexicographic). chi[i][j] = chi_{nu_i}(C(mu_j)).
struct CharacterTable {
  int n;
  std::vector<Partition> parts;
  std::vector<std::vector<long long>> chi;

  long long at(const Partition& nu, const Partition& mu) const;
  int index_of(const Partition& p) const;  // -1 when absent
};

// Cached per weight; values computed by border-strip removal on beta-sets
// (remove a strip of size mu_1, sign by strip height, recurse on S_{n-mu_1}).
const CharacterTable& character_table(int n);

long long character(const Partition& nu, const Partition& mu);

}  // namespace hodgeint
