#pragma once

#include "hodgeint/rational.hpp"

namespace hodgeint {

// Exact polynomial in the deformation variable tau, Gaussian-rational
// coefficients, ascending degree, trailing coefficient nonzero.
// No truncation is ever applied: degrees stay intrinsically bounded
// (a lambda^k coefficient never exceeds tau-degree k + weight).
class TauPoly {
 public:
  TauPoly() = default;
  explicit TauPoly(GaussRat c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  static TauPoly tau() { return monomial(GaussRat(1), 1); }
  static TauPoly monomial(GaussRat c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  // Coefficient of tau^k (zero outside the stored range).
  const GaussRat& coeff(int k) const;
  bool is_constant() const { return c_.size() <= 1; }

  TauPoly& operator+=(const TauPoly& o);
  TauPoly& operator-=(const TauPoly& o);
  friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
  friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
  friend TauPoly operator-(const TauPoly& a);
  friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
  TauPoly scaled(const GaussRat& s) const;

  TauPoly derivative() const;
  GaussRat at_zero() const { return c_.empty() ? GaussRat() : c_[0]; }
  GaussRat eval(const GaussRat& x) const;

  // tau^k | this?  div_tau_pow throws std::domain_error when it does not.
  bool divisible_by_tau_pow(int k) const;
  TauPoly div_tau_pow(int k) const;

  friend bool operator==(const TauPoly& a, const TauPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TauPoly& a, const TauPoly& b) { return !(a == b); }

  std::string to_string() const;  // e.g. "(1/2) + (0+1/1i)*tau^2"

 private:
  void trim();
  std::vector<GaussRat> c_;
};

}  // namespace hodgeint
