#include "hodgeint/tau_polynomial.hpp"

namespace hodgeint {

namespace {
const GaussRat kZero{};
}

TauPoly TauPoly::monomial(GaussRat c, int deg) {
  TauPoly p;
  if (deg < 0) throw std::invalid_argument("negative tau degree");
  if (!c.is_zero()) {
    p.c_.assign(deg + 1, GaussRat());
    p.c_[deg] = std::move(c);
  }
  return p;
}

const GaussRat& TauPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

void TauPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

TauPoly operator-(const TauPoly& a) {
  TauPoly r;
  r.c_.reserve(a.c_.size());
  for (const auto& c : a.c_) r.c_.push_back(-c);
  return r;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
  TauPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussRat());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

TauPoly TauPoly::scaled(const GaussRat& s) const {
  TauPoly r;
  if (s.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

TauPoly TauPoly::derivative() const {
  TauPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
  r.trim();
  return r;
}

GaussRat TauPoly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

bool TauPoly::divisible_by_tau_pow(int k) const {
  if (is_zero()) return true;
  for (int j = 0; j < k && j < static_cast<int>(c_.size()); ++j)
    if (!c_[j].is_zero()) return false;
  return static_cast<int>(c_.size()) > k || is_zero();
}

TauPoly TauPoly::div_tau_pow(int k) const {
  if (is_zero()) return TauPoly();
  if (!divisible_by_tau_pow(k))
    throw std::domain_error("tau-polynomial not divisible by tau^" + std::to_string(k));
  TauPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

std::string TauPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + gauss_to_string(c_[k]) + ")";
    if (k == 1) s += "*tau";
    if (k > 1) s += "*tau^" + std::to_string(k);
  }
  return s;
}

}  // namespace hodgeint
