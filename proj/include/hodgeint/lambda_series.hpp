#pragma once

#include "hodgeint/tau_polynomial.hpp"

namespace hodgeint {

// Truncated Laurent series in lambda with TauPoly coefficients.
//
// A series knows exactly which coefficients it knows: everything with
// exponent <= order() is exact (zero below min_exp()), and reading past
// order() throws instead of silently returning zero.  Arithmetic propagates
// the validity order pessimistically-correctly, e.g. for a product
//   order = min(a.order + b.min_exp, b.order + a.min_exp),
// which is what makes pole-against-pole multiplication honest.
class LambdaSeries {
 public:
  // Sentinel used as the "effective min exponent" of an identically-zero
  // series in validity arithmetic (a zero factor only caps through its own
  // order). Orders are capped at this value.
  static constexpr long kInf = 1L << 20;

  LambdaSeries() : min_exp_(0), order_(-1) {}  // zero, nothing known
  static LambdaSeries zero(long order);
  static LambdaSeries one(long order) { return monomial(TauPoly(GaussRat(1)), 0, order); }
  static LambdaSeries monomial(TauPoly c, long exp, long order);

  long order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  // Smallest exponent carrying a nonzero coefficient; kInf for the zero series.
  long min_exp() const { return c_.empty() ? kInf : min_exp_; }

  // Exact coefficient of lambda^k; throws std::out_of_range for k > order().
  const TauPoly& coeff(long k) const;

  LambdaSeries& operator+=(const LambdaSeries& o);
  LambdaSeries& operator-=(const LambdaSeries& o);
  friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
  friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
  friend LambdaSeries operator-(const LambdaSeries& a);
  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);

  LambdaSeries scaled(const GaussRat& s) const;
  LambdaSeries scaled_tau(const TauPoly& s) const;
  LambdaSeries shifted(long e) const;  // multiply by lambda^e
  LambdaSeries truncated(long new_order) const;  // new_order <= order()

  // Multiplicative inverse. Requires a nonzero leading coefficient that is a
  // tau-degree-0 unit; result order = order() - 2*min_exp().
  LambdaSeries inverted() const;
  // exp of a series with min_exp >= 1 (or zero); log of a series with
  // constant coefficient exactly 1 and no polar part.
  LambdaSeries exp_series() const;
  LambdaSeries log_series() const;

  LambdaSeries tau_derivative() const;
  LambdaSeries at_tau_zero() const;
  LambdaSeries lambda_derivative() const;  // order drops by one
  LambdaSeries lambda_integral() const;    // no constant of integration; min_exp >= 0
  LambdaSeries i_twisted() const;          // coeff(k) *= i^k  (lambda -> i*lambda)

  bool is_tau_free() const;

  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    return a.order_ == b.order_ && a.min_exp_same(b);
  }

 private:
  bool min_exp_same(const LambdaSeries& b) const { return c_ == b.c_ && (c_.empty() || min_exp_ == b.min_exp_); }
  void normalize();
  long min_exp_;  // exponent of c_[0] when c_ nonempty
  long order_;
  std::vector<TauPoly> c_;
};

// 2*sin(h*lambda/2) as an exact series to the given order.
LambdaSeries sin_double_half(long h, long order);

struct SeriesMismatch {
  long lambda_exp;
  TauPoly lhs, rhs;
};

// Compare to the requested order (inclusive); throws std::out_of_range if
// either side's validity falls short.
std::vector<SeriesMismatch> compare_series(const LambdaSeries& lhs, const LambdaSeries& rhs,
                                           long up_to_order);

}  // namespace hodgeint
