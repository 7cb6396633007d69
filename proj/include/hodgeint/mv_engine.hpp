#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hodgeint/partition_series.hpp"

namespace hodgeint {

// 1 / prod_{boxes x of nu} (2 sin(h(x) lambda/2)) as a Laurent series with
// leading exponent -|nu|; hook-length form.
LambdaSeries quantum_dim(const Partition& nu, long order);

// The same function written as the sine double product
//   prod_{a<b} sin((nu_a - nu_b + b - a) l/2) / sin((b - a) l/2)
//   / prod_{i, 1<=v<=nu_i} 2 sin((v - i + len) l/2),
// kept separate so the two can be compared as an internal consistency check.
LambdaSeries quantum_dim_ratio(const Partition& nu, long order);

// The two-parameter character series
//   Z = sum_mu ( sum_{|nu|=|mu|} chi_nu(mu)/z_mu
//               * exp(i (tau + 1/2) kappa_nu lambda / 2) * V_nu(lambda) ) p_mu
// and R = log Z. Entries are built with enough internal slack that every
// lambda-coefficient with exponent <= lambda_order is exact; the stored
// series carry their true (larger) validity.
struct MVSeries {
  int weight_bound = 0;
  long lambda_order = 0;    // guaranteed floor for coefficient reads
  int tau_degree_bound = 0; // largest tau degree present in R
  PartitionSeries Z;
  PartitionSeries R;
};

MVSeries build_R(int weight_bound, long lambda_order);

// -i^{d+1} / (2 d sin(d lambda/2)): the value R_{(d)}(lambda; 0).
LambdaSeries initial_value_series(int d, long order);

// All sqrt(-1) bookkeeping for the tau->0 limits lives here:
// the scale -(prod_j m_j(mu)!) * i^{-(|mu| + length(mu))} applied to R_mu.
// (The factorial ratios in the limit's prefactor cancel at tau = 0.)
GaussRat limit_normalization(const Partition& mu);

// sum_{i+j=d, i,j>=1} -i^{d+1} lambda / (8 sin(i lambda/2) sin(j lambda/2)),
// the expected value of (d/dtau)|_0 R_{(d)}.
LambdaSeries tau_derivative_target(int d, long order);

// Compares the exact tau-derivative of R_{(d)} at tau = 0 against the target
// above, coefficientwise to lambda-order `order`. Empty result = verified.
std::vector<SeriesMismatch> tau_derivative_check(const MVSeries& mv, int d,
                                                 long order);
std::vector<SeriesMismatch> tau_derivative_check(int d, long order);

// The tau->0 limit of lambda^{2-l} (tau(tau+1))^{1-l} * prefactor * R_mu:
// each lambda-coefficient must be divisible by tau^{l-1} (else the limit
// does not exist and a domain_error reports the violation); the quotient is
// evaluated at tau = 0, scaled by limit_normalization, and must be real.
// The result collects lambda exponents k + 2 - l up to `order`.
LambdaSeries limit_lambda_g(const MVSeries& mv, const Partition& mu,
                            long order);
LambdaSeries limit_lambda_g(const Partition& mu, long order);

// d^{n-3} * (d lambda/2) / sin(d lambda/2): the predicted value of the
// limit above for any mu of weight d and length n.
LambdaSeries lambda_g_target(int d, int n, long order);

// The substitution lambda -> lambda tau, tau -> 1/tau, p_k -> (lambda tau)^k p_k
// applied to R: coefficient lambda^k tau^m of R_mu lands at lambda^{k+|mu|}
// tau^{k+|mu|-m}. Asserts no negative tau-powers survive (domain_error
// otherwise) and returns the tau-constant part, which must equal the
// connected Hurwitz series evaluated at i*lambda.
PartitionSeries limit_elsv(const MVSeries& mv, long order);
PartitionSeries limit_elsv(int weight_bound, long order);

// Samples the series
//   -sum_{a<d} 1/a * (d lambda/2)/(d sin(d lambda/2))
//   + sum_{i+j=d} lambda^2 / (8 sin(i lambda/2) sin(j lambda/2))
// at d = 1..d_max; for each g <= g_max the lambda^{2g} coefficient is a
// polynomial in d of degree <= 2g-1, recovered by exact interpolation
// through the first 2g samples and re-checked at every remaining sample.
struct DddExtraction {
  // Raw polynomial coefficients: of d^1 (for g >= 2 this predicts
  // (-1)^{g-1} (2g-2) times the cubic product integral) and of d^{2g-1}
  // (predicting minus the one-point lambda_{g-1} series value).
  std::map<int, Rat> cubic;
  std::map<int, Rat> g_minus_1;
  // (g, d) pairs where a remaining sample disagreed with the interpolation.
  std::vector<std::pair<int, int>> residual_failures;
  int residual_points = 0;  // residual samples checked for g = g_max
};

DddExtraction ddd_extraction(int g_max, int d_max);

}  // namespace hodgeint
