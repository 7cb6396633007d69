#include "hodgeint/lambda_series.hpp"

#include <algorithm>

namespace hodgeint {

namespace {
const TauPoly kZeroPoly{};

long capped(long x) { return std::min(x, LambdaSeries::kInf); }
}  // namespace

LambdaSeries LambdaSeries::zero(long order) {
  LambdaSeries s;
  s.order_ = capped(order);
  return s;
}

LambdaSeries LambdaSeries::monomial(TauPoly c, long exp, long order) {
  LambdaSeries s;
  s.order_ = capped(order);
  if (!c.is_zero()) {
    if (exp > order) throw std::out_of_range("monomial exponent beyond validity order");
    s.min_exp_ = exp;
    s.c_.push_back(std::move(c));
  }
  return s;
}

void LambdaSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    min_exp_ += static_cast<long>(lead);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) min_exp_ = 0;
}

const TauPoly& LambdaSeries::coeff(long k) const {
  if (k > order_)
    throw std::out_of_range("coefficient of lambda^" + std::to_string(k) +
                            " requested beyond validity order " + std::to_string(order_));
  if (c_.empty() || k < min_exp_ || k >= min_exp_ + static_cast<long>(c_.size())) return kZeroPoly;
  return c_[k - min_exp_];
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
  long ord = std::min(order_, o.order_);
  long lo = std::min(c_.empty() ? ord + 1 : min_exp_, o.c_.empty() ? ord + 1 : o.min_exp_);
  std::vector<TauPoly> out;
  if (lo <= ord) {
    out.resize(ord - lo + 1);
    for (long k = lo; k <= ord; ++k) {
      TauPoly v;
      if (!c_.empty() && k >= min_exp_ && k < min_exp_ + static_cast<long>(c_.size()))
        v = c_[k - min_exp_];
      if (!o.c_.empty() && k >= o.min_exp_ && k < o.min_exp_ + static_cast<long>(o.c_.size()))
        v += o.c_[k - o.min_exp_];
      out[k - lo] = std::move(v);
    }
  }
  min_exp_ = lo;
  order_ = ord;
  c_ = std::move(out);
  normalize();
  return *this;
}

LambdaSeries& LambdaSeries::operator-=(const LambdaSeries& o) { return *this += -o; }

LambdaSeries operator-(const LambdaSeries& a) {
  LambdaSeries r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
  long ord = capped(std::min(capped(a.order_ + b.min_exp()), capped(b.order_ + a.min_exp())));
  LambdaSeries r;
  r.order_ = ord;
  if (a.c_.empty() || b.c_.empty()) return r;
  long lo = a.min_exp_ + b.min_exp_;
  if (lo > ord) return r;
  r.min_exp_ = lo;
  r.c_.assign(ord - lo + 1, TauPoly());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    long ea = a.min_exp_ + static_cast<long>(i);
    long jmax = std::min<long>(static_cast<long>(b.c_.size()) - 1, ord - ea - b.min_exp_);
    for (long j = 0; j <= jmax; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[ea + b.min_exp_ + j - lo] += a.c_[i] * b.c_[j];
    }
  }
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::scaled(const GaussRat& s) const {
  LambdaSeries r;
  r.order_ = order_;
  if (s.is_zero() || c_.empty()) return r;
  r.min_exp_ = min_exp_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c.scaled(s));
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::scaled_tau(const TauPoly& s) const {
  LambdaSeries r;
  r.order_ = order_;
  if (s.is_zero() || c_.empty()) return r;
  r.min_exp_ = min_exp_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::shifted(long e) const {
  LambdaSeries r = *this;
  r.order_ = capped(order_ + e);
  if (!r.c_.empty()) r.min_exp_ += e;
  return r;
}

LambdaSeries LambdaSeries::truncated(long new_order) const {
  if (new_order > order_)
    throw std::out_of_range("cannot extend validity order by truncation");
  LambdaSeries r;
  r.order_ = new_order;
  if (c_.empty() || min_exp_ > new_order) return r;
  r.min_exp_ = min_exp_;
  r.c_.assign(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), new_order - min_exp_ + 1));
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::inverted() const {
  if (c_.empty()) throw std::domain_error("inverting the zero series");
  const TauPoly& lead = c_.front();
  if (!lead.is_constant())
    throw std::domain_error("series_invert requires a tau-degree-0 unit leading coefficient");
  GaussRat a0 = lead.at_zero();
  long m = min_exp_;
  long n_known = order_ - m;  // relative orders 0..n_known are exact
  LambdaSeries r;
  r.order_ = order_ - 2 * m;
  r.min_exp_ = -m;
  r.c_.assign(n_known + 1, TauPoly());
  GaussRat inv_a0 = GaussRat(1) / a0;
  r.c_[0] = TauPoly(inv_a0);
  for (long k = 1; k <= n_known; ++k) {
    TauPoly s;
    long jmax = std::min<long>(k, static_cast<long>(c_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) {
      if (c_[j].is_zero() || r.c_[k - j].is_zero()) continue;
      s += c_[j] * r.c_[k - j];
    }
    r.c_[k] = (-s).scaled(inv_a0);
  }
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::exp_series() const {
  if (!c_.empty() && min_exp_ < 1)
    throw std::domain_error("series_exp requires min exponent >= 1");
  LambdaSeries acc = LambdaSeries::one(order_);
  if (c_.empty()) return acc;
  LambdaSeries term = LambdaSeries::one(order_);
  for (long n = 1; n <= order_; ++n) {
    term = (term * *this).truncated(order_);
    term = term.scaled(GaussRat(Rat(1, n)));
    if (term.is_zero()) break;
    acc += term;
  }
  LambdaSeries r = acc;
  r.order_ = order_;
  return r;
}

LambdaSeries LambdaSeries::log_series() const {
  if (min_exp() < 0) throw std::domain_error("series_log requires no polar part");
  if (order_ < 0 || !(coeff(0) == TauPoly(GaussRat(1))))
    throw std::domain_error("series_log requires constant term exactly 1");
  LambdaSeries u = *this - LambdaSeries::one(order_);
  LambdaSeries acc = LambdaSeries::zero(order_);
  LambdaSeries pw = LambdaSeries::one(order_);
  for (long n = 1; n <= order_; ++n) {
    pw = (pw * u).truncated(order_);
    if (pw.is_zero()) break;
    acc += pw.scaled(GaussRat(Rat((n % 2) ? 1 : -1, n)));
  }
  acc.order_ = order_;
  return acc;
}

LambdaSeries LambdaSeries::tau_derivative() const {
  LambdaSeries r;
  r.order_ = order_;
  if (c_.empty()) return r;
  r.min_exp_ = min_exp_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c.derivative());
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::at_tau_zero() const {
  LambdaSeries r;
  r.order_ = order_;
  if (c_.empty()) return r;
  r.min_exp_ = min_exp_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(TauPoly(c.at_zero()));
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::lambda_derivative() const {
  LambdaSeries r;
  r.order_ = order_ - 1;
  if (c_.empty()) return r;
  r.min_exp_ = min_exp_ - 1;
  r.c_.reserve(c_.size());
  long k = min_exp_;
  for (const auto& c : c_) r.c_.push_back(c.scaled(GaussRat(k++)));
  r.normalize();
  if (!r.c_.empty() && r.min_exp_ + static_cast<long>(r.c_.size()) - 1 > r.order_)
    r.c_.resize(r.order_ - r.min_exp_ + 1);
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::lambda_integral() const {
  if (is_zero()) return zero(order_ == kInf ? kInf : order_ + 1);
  if (min_exp_ < 0)
    throw std::domain_error("lambda_integral: series has a polar part");
  LambdaSeries r;
  r.min_exp_ = min_exp_ + 1;
  r.order_ = (order_ == kInf) ? kInf : order_ + 1;
  r.c_.reserve(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) {
    long k = min_exp_ + static_cast<long>(j);
    GaussRat scale{Rat(1, static_cast<unsigned long>(k + 1)), Rat(0)};
    r.c_.push_back(c_[j].scaled(scale));
  }
  r.normalize();
  return r;
}

LambdaSeries LambdaSeries::i_twisted() const {
  LambdaSeries r = *this;
  for (std::size_t j = 0; j < r.c_.size(); ++j) {
    long k = r.min_exp_ + static_cast<long>(j);
    r.c_[j] = r.c_[j].scaled(i_pow(k));
  }
  r.normalize();
  return r;
}

bool LambdaSeries::is_tau_free() const {
  for (const auto& c : c_)
    if (!c.is_constant()) return false;
  return true;
}

LambdaSeries sin_double_half(long h, long order) {
  // 2 sin(h lambda / 2) = sum_k 2 (-1)^k (h/2)^{2k+1} lambda^{2k+1} / (2k+1)!
  if (h <= 0) throw std::invalid_argument("sin_double_half requires h >= 1");
  LambdaSeries s = LambdaSeries::zero(order);
  Rat h_half = rat(h, 2);
  Rat p = h_half;  // (h/2)^{2k+1}
  for (long k = 0; 2 * k + 1 <= order; ++k) {
    Rat c = Rat(2) * p / Rat(factorial(2 * k + 1));
    if (k % 2) c = -c;
    s += LambdaSeries::monomial(TauPoly(GaussRat(c)), 2 * k + 1, order);
    p *= h_half;
    p *= h_half;
  }
  return s;
}

std::vector<SeriesMismatch> compare_series(const LambdaSeries& lhs, const LambdaSeries& rhs,
                                           long up_to_order) {
  if (lhs.order() < up_to_order || rhs.order() < up_to_order)
    throw std::out_of_range("comparison order exceeds a validity order");
  std::vector<SeriesMismatch> out;
  long lo = std::min(lhs.min_exp(), rhs.min_exp());
  if (lo > up_to_order) return out;
  for (long k = lo; k <= up_to_order; ++k) {
    const TauPoly& a = lhs.coeff(k);
    const TauPoly& b = rhs.coeff(k);
    if (!(a == b)) out.push_back({k, a, b});
  }
  return out;
}

}  // namespace hodgeint
