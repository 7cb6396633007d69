#pragma once

#include "hodgeint/lambda_series.hpp"
#include "hodgeint/partition.hpp"

#include <map>

namespace hodgeint {

// Finite linear combination sum_mu c_mu(lambda, tau) * p_mu truncated to
// p-weight <= weight_bound.
//
// Absence semantics: a key that is absent from `terms` is *structurally*
// zero (exact to every order). A coefficient that was merely computed to be
// zero up to some validity order is stored explicitly as a zero LambdaSeries
// carrying that order; arithmetic never drops computed entries.
struct PartitionSeries {
  int weight_bound = 0;
  std::map<Partition, LambdaSeries, PartitionLess> terms;

  PartitionSeries() = default;
  explicit PartitionSeries(int bound) : weight_bound(bound) {}

  // nullptr means structurally zero.
  const LambdaSeries* coeff_ptr(const Partition& mu) const;
  // Exact-zero fallback (validity kInf) for absent keys.
  LambdaSeries coeff(const Partition& mu) const;

  void set(const Partition& mu, LambdaSeries s);
  void add_to(const Partition& mu, const LambdaSeries& s);
};

PartitionSeries ps_add(const PartitionSeries& a, const PartitionSeries& b);
PartitionSeries ps_sub(const PartitionSeries& a, const PartitionSeries& b);
PartitionSeries ps_mul(const PartitionSeries& a, const PartitionSeries& b);
// Per-entry scale by s * lambda^lambda_pow.
PartitionSeries ps_scaled(const PartitionSeries& a, const GaussRat& s, long lambda_pow = 0);
PartitionSeries ps_tau_derivative(const PartitionSeries& a);
PartitionSeries ps_at_tau_zero(const PartitionSeries& a);
PartitionSeries ps_lambda_derivative(const PartitionSeries& a);
PartitionSeries ps_lambda_integral(const PartitionSeries& a);

// exp(u) with no empty-partition term in u; log(z) with empty-partition
// coefficient exactly 1. Weight grading makes both sums finite.
PartitionSeries ps_exp(const PartitionSeries& u);
PartitionSeries ps_log(const PartitionSeries& z);

// d/dp_i in the plain monomial convention: dp_mu/dp_i = m_i(mu) p_{mu - i}.
PartitionSeries partial_p(const PartitionSeries& f, int i);

// sum_{i,j>=1} [ ij p_{i+j} d2F/dp_i dp_j + ij p_{i+j} (dF/dp_i)(dF/dp_j)
//              + (i+j) p_i p_j dF/dp_{i+j} ],
// truncated to f.weight_bound (the operator preserves the p-weight of each
// contributing monomial / monomial pair).
PartitionSeries cut_join_apply(const PartitionSeries& f);

struct CutJoinMismatch {
  Partition mu;
  long lambda_exp;
  long tau_deg;
  GaussRat lhs, rhs;
};

// Coefficientwise check  lhs == scalar * lambda^lambda_pow * cut_join_apply(f)
// for every partition of weight <= bound and every lambda exponent up to
// compare_order (all tau-degrees). Throws std::invalid_argument on mismatched
// weight bounds and std::out_of_range if a validity order falls short.
std::vector<CutJoinMismatch> verify_cut_join(const PartitionSeries& f,
                                             const PartitionSeries& lhs, const GaussRat& scalar,
                                             long lambda_pow, long compare_order);

// Generic coefficientwise comparison in the same mismatch format.
std::vector<CutJoinMismatch> compare_partition_series(const PartitionSeries& lhs,
                                                      const PartitionSeries& rhs,
                                                      long compare_order);

}  // namespace hodgeint
