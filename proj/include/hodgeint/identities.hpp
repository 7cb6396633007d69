#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodgeint/rational.hpp"

namespace hodgeint {

// One verified equality: both sides rendered exactly, pass means exact
// agreement. Provenance of a side is one of "closedForm", "directSum",
// "mvEngine", "hurwitzEngine".
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string left;
  std::string right;
  std::string left_provenance;
  std::string right_provenance;
  bool pass = false;
};

// |B_{2m}|, realized as (-1)^{m-1} B_{2m} (the even Bernoulli numbers
// alternate in sign); m = 0 gives 1.
Rat abs_bernoulli(int m);

// Coefficient of t^{2g} in (t/2)/sin(t/2):
// b_0 = 1, b_g = ((2^{2g-1}-1)/2^{2g-1}) |B_{2g}| / (2g)!.
Rat b_g(int g);

// One-point-per-part psi-power integral against the top lambda class:
// multinomial(2g+n-3; k) * b_g where n = len(k) and sum k_i = 2g-3+n.
// Throws std::invalid_argument on a degree mismatch ("dimension constraint
// violated") or when (g, n) admits no stable curves (g = 0, n <= 2).
Rat lambda_g_value(int g, const std::vector<int>& k);

// (1/(2(2g-2)!)) (|B_{2g-2}|/(2g-2)) (|B_{2g}|/(2g)), g >= 2: the value of
// the top triple product l_g l_{g-1} l_{g-2}.
Rat cubic_lambda(int g);

// b_g H_{2g-1} - (1/2) sum_{g1+g2=g, g1,g2>=1}
//   ((2g1-1)!(2g2-1)!/(2g-1)!) b_{g1} b_{g2}, g >= 1: the one-point
// lambda_{g-1} series value.
Rat g_minus_1_value(int g);

// F_{g1,g2}(d) = sum_{i+j=d, i,j>=1} i^{2g1-1} j^{2g2-1} expanded into an
// exact polynomial in d plus (when one exponent is -1) a harmonic term
// d^{2g-1} H_{d-1}.
struct PowerConvolution {
  int g1 = 0, g2 = 0;
  std::vector<Rat> coeffs;  // coeffs[k] multiplies d^k; size 2(g1+g2)
  Rat harmonic_coeff;       // multiplies d^{2g-1} H_{d-1}
};

PowerConvolution power_convolution_polynomial(int g1, int g2);
Rat power_convolution_direct(int g1, int g2, int d);
Rat power_convolution_eval(const PowerConvolution& p, int d);

// sum_{i=1}^{d-1} i^m versus the Bernoulli expansion
// sum_{k=0}^{m} (C(m+1,k)/(m+1)) B_k d^{m+1-k}.
IdentityReport power_sum_check(int m, int d);

// Two exact sums: the beta-integral binomial sum
//   sum_{k=0}^{2g2-1} (-1)^{2g2-1-k}/(2g-1-k) C(2g2-1,k)
//     = (2g1-1)!(2g2-1)!/(2g-1)!
// and the alternating harmonic sum
//   sum_{i=1}^{2g-1} (-1)^i/i C(2g-1,i) = -H_{2g-1}.
std::vector<IdentityReport> binomial_sum_lemmas(int g1, int g2);

// sum_{g1+g2=g} b_{g1} b_{g2} = |B_{2g}| / (2g (2g-2)!), g >= 1.
IdentityReport bernoulli_convolution_report(int g);

// The claimed coefficients of F_{g1,g2} (linear coefficient -B_{2g-2}; top
// coefficient the binomial sums above) plus a brute-force evaluation
// cross-check for d = 2..d_max.
std::vector<IdentityReport> power_convolution_reports(int g1, int g2,
                                                      int d_max);

}  // namespace hodgeint
