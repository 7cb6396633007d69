#pragma once

#include <map>
#include <string>

#include "hodgeint/partition_series.hpp"

namespace hodgeint {

// Number of simple branch points for a connected degree-|mu| genus-g cover
// of the sphere with ramification profile mu over infinity.
long hurwitz_r(int g, const Partition& mu);

// Connected generating function Phi(lambda; p) = sum_{g,mu} H_{g,mu}
// lambda^r / r! * p_mu, assembled as the log of the character expansion
// sum_nu exp(kappa_nu lambda / 2) (dim nu / |nu|!) s_nu rewritten in the
// power-sum basis. Every lambda coefficient is a tau-free rational constant.
PartitionSeries burnside_phi(int weight_bound, long order);

// The same series grown from the flow dPhi/dlambda = (1/2) CJ(Phi) with
// degree-one seed p_1, by repeated integration until the truncation is fixed.
PartitionSeries cutjoin_phi(int weight_bound, long order);

// H_{g,mu} = r! [lambda^r p_mu] phi. Throws if the series cannot see that
// coefficient or if it is not a rational constant.
Rat hurwitz_from_phi(const PartitionSeries& phi, int g, const Partition& mu);

// Direct count of tuples (sigma, t_1, ..., t_r): sigma of cycle type mu,
// each t_k a transposition, t_r ... t_1 sigma = id, the whole collection
// acting transitively; weighted by 1/|mu|!. Exponential cost, hence gated:
// oracle_feasible is |mu| <= 6 and r <= 7, and oracle_hurwitz throws beyond.
bool oracle_feasible(int g, const Partition& mu);
Rat oracle_hurwitz(int g, const Partition& mu);

struct GenusPartition {
  int g = 0;
  Partition mu;
  bool operator<(const GenusPartition& o) const;
  bool operator==(const GenusPartition& o) const;
};

struct HurwitzEntry {
  Rat value;
  long r = 0;
  std::string method;  // "burnside" | "oracle" | "cutjoin"
};

struct HurwitzTable {
  std::map<GenusPartition, HurwitzEntry> entries;
};

// All (g, mu) with 1 <= |mu| <= weight_bound and 0 <= g <= genus_max.
// Zero values are kept; presentation layers may filter them.
HurwitzTable burnside_hurwitz(int weight_bound, int genus_max);
HurwitzTable cutjoin_hurwitz(int weight_bound, int genus_max);
// Only the entries the brute-force counter can afford (see oracle_feasible).
HurwitzTable oracle_hurwitz_table(int weight_bound, int genus_max);

struct LinearHodgeValue {
  Rat scaled;    // H_{g,mu} / r!
  Rat integral;  // value left after peeling the combinatorial factors
  bool stable = false;  // 2g - 2 + length(mu) > 0
};

struct LinearHodgeTable {
  std::map<GenusPartition, LinearHodgeValue> entries;
};

// integral = (H/r!) * |Aut mu| * prod mu_i! / mu_i^{mu_i}. For stable (g,mu)
// this is the linear-Hodge-integral value; for the two unstable genus-zero
// cases it must equal |mu|^(length(mu) - 3).
LinearHodgeValue elsv_invert_one(int g, const Partition& mu, const Rat& h);
LinearHodgeTable elsv_invert(const HurwitzTable& table);

}  // namespace hodgeint
