#pragma once

#include "hodgeint/rational.hpp"

#include <map>

namespace hodgeint {

// Weakly decreasing positive parts; {} is the empty partition of 0.
using Partition = std::vector<int>;

int weight(const Partition& p);
inline int length(const Partition& p) { return static_cast<int>(p.size()); }

// Canonical order used everywhere (map keys, enumeration, reports):
// by weight ascending, then decreasing lexicographic within a weight,
// e.g. 3 < (3) < (2,1) < (1,1,1) < (4) ...
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

// Partitions of n in decreasing lexicographic order: (n), ..., (1^n).
std::vector<Partition> partitions_of(int n);
// All partitions of weight 0..n in the canonical order.
std::vector<Partition> partitions_up_to(int n);

struct PartitionStats {
  Int z;                   // centralizer order: prod j^{m_j} m_j!
  Int aut;                 // |Aut| = prod m_j!
  long kappa;              // sum nu_i (nu_i - 2i + 1)
  std::vector<int> hooks;  // all |nu| hook lengths, sorted descending
  Int dim;                 // |nu|! / prod hooks
};
PartitionStats partition_stats(const Partition& nu);

Partition conjugate(const Partition& nu);
Int conjugacy_class_size(const Partition& mu);  // |mu|! / z_mu

int multiplicity(const Partition& p, int part);
// Multiset of multiplicities keyed by part value.
std::map<int, int> part_multiplicities(const Partition& p);
Partition remove_one_part(const Partition& p, int part);  // throws if absent
Partition with_part(Partition p, int part);
Partition merged(const Partition& a, const Partition& b);

// "a.b.c" with decreasing parts; "" for the empty partition.
std::string partition_key(const Partition& p);
Partition partition_from_key(const std::string& s);

}  // namespace hodgeint
