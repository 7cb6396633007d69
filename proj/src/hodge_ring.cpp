#include "hodgeint/hodge_ring.hpp"

#include <stdexcept>

namespace hodgeint {

long mono_degree(const LambdaMono& m) {
  long d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(i + 1) * m[i];
  return d;
}

HodgeClass HodgeClass::zero(int g) {
  HodgeClass x;
  x.genus = g;
  return x;
}

HodgeClass HodgeClass::one(int g) {
  HodgeClass x;
  x.genus = g;
  x.coeffs[LambdaMono(g, 0)] = Rat(1);
  return x;
}

HodgeClass HodgeClass::lambda(int g, int i) {
  if (i == 0) return one(g);
  if (i < 0 || i > g) return zero(g);
  HodgeClass x;
  x.genus = g;
  LambdaMono m(g, 0);
  m[i - 1] = 1;
  x.coeffs[std::move(m)] = Rat(1);
  return x;
}

long HodgeClass::max_degree() const {
  long d = -1;
  for (const auto& [m, c] : coeffs) d = std::max(d, mono_degree(m));
  return d;
}

HodgeClass HodgeClass::graded_part(long d) const {
  HodgeClass out = zero(genus);
  for (const auto& [m, c] : coeffs)
    if (mono_degree(m) == d) out.coeffs[m] = c;
  return out;
}

HodgeClass HodgeClass::scaled(const Rat& s) const {
  HodgeClass out = zero(genus);
  if (sgn(s) == 0) return out;
  for (const auto& [m, c] : coeffs) out.coeffs[m] = c * s;
  return out;
}

HodgeClass& HodgeClass::operator+=(const HodgeClass& o) {
  if (genus != o.genus) throw std::logic_error("HodgeClass genus mismatch");
  for (const auto& [m, c] : o.coeffs) {
    Rat& slot = coeffs[m];
    slot += c;
    if (sgn(slot) == 0) coeffs.erase(m);
  }
  return *this;
}

HodgeClass& HodgeClass::operator-=(const HodgeClass& o) {
  if (genus != o.genus) throw std::logic_error("HodgeClass genus mismatch");
  for (const auto& [m, c] : o.coeffs) {
    Rat& slot = coeffs[m];
    slot -= c;
    if (sgn(slot) == 0) coeffs.erase(m);
  }
  return *this;
}

HodgeClass operator*(const HodgeClass& a, const HodgeClass& b) {
  if (a.genus != b.genus) throw std::logic_error("HodgeClass genus mismatch");
  HodgeClass out = HodgeClass::zero(a.genus);
  for (const auto& [ma, ca] : a.coeffs) {
    for (const auto& [mb, cb] : b.coeffs) {
      LambdaMono m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      Rat& slot = out.coeffs[m];
      slot += ca * cb;
      if (sgn(slot) == 0) out.coeffs.erase(m);
    }
  }
  return out;
}

bool raw_equal(const HodgeClass& a, const HodgeClass& b) {
  return a.genus == b.genus && a.coeffs == b.coeffs;
}

std::string hodge_to_string(const HodgeClass& x) {
  if (x.is_zero()) return "0/1";
  std::string out;
  for (const auto& [m, c] : x.coeffs) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(c);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += " l" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

namespace {

HodgeClass mono_class(int g, const LambdaMono& m) {
  HodgeClass x = HodgeClass::zero(g);
  x.coeffs[m] = Rat(1);
  return x;
}

void enumerate_monomials(int g, long degree, size_t idx, LambdaMono& current,
                         std::vector<LambdaMono>& out) {
  if (idx == static_cast<size_t>(g)) {
    if (degree == 0) out.push_back(current);
    return;
  }
  long w = static_cast<long>(idx) + 1;
  for (int e = 0; e * w <= degree; ++e) {
    current[idx] = e;
    enumerate_monomials(g, degree - e * w, idx + 1, current, out);
  }
  current[idx] = 0;
}

std::vector<LambdaMono> monomials_of_degree(int g, long degree) {
  std::vector<LambdaMono> out;
  LambdaMono current(g, 0);
  enumerate_monomials(g, degree, 0, current, out);
  return out;
}

}  // namespace

MumfordIdeal::MumfordIdeal(int g, long degree_bound) : g_(g) {
  if (g < 0) throw std::invalid_argument("MumfordIdeal: negative genus");
  bound_ = degree_bound < 0 ? 3L * g : degree_bound;
  relations_.reserve(g);
  for (int k = 1; k <= g; ++k) {
    HodgeClass r = HodgeClass::zero(g);
    for (int i = 0; i <= 2 * k; ++i) {
      int j = 2 * k - i;
      if (i > g || j > g) continue;
      Rat s = (i % 2 == 0) ? Rat(1) : Rat(-1);
      r += (HodgeClass::lambda(g, i) * HodgeClass::lambda(g, j)).scaled(s);
    }
    relations_.push_back(std::move(r));
  }
  rows_.resize(static_cast<size_t>(bound_) + 1);
  for (long d = 2; d <= bound_; ++d) {
    auto& table = rows_[static_cast<size_t>(d)];
    for (int k = 1; k <= g && 2 * k <= d; ++k) {
      for (const LambdaMono& m : monomials_of_degree(g, d - 2 * k)) {
        HodgeClass value = mono_class(g, m) * relations_[k - 1];
        std::map<std::pair<int, LambdaMono>, Rat> combo;
        combo[{k, m}] = Rat(1);
        while (!value.is_zero()) {
          LambdaMono pivot = value.coeffs.rbegin()->first;
          auto it = table.find(pivot);
          if (it == table.end()) {
            Rat lead = value.coeffs.rbegin()->second;
            Rat inv = Rat(1) / lead;
            value = value.scaled(inv);
            for (auto& [key, c] : combo) c *= inv;
            table.emplace(pivot, Row{std::move(value), std::move(combo)});
            break;
          }
          Rat c = value.coeffs.rbegin()->second;
          value -= it->second.value.scaled(c);
          for (const auto& [key, rc] : it->second.combo) {
            Rat& slot = combo[key];
            slot -= c * rc;
            if (sgn(slot) == 0) combo.erase(key);
          }
        }
      }
    }
  }
}

const HodgeClass& MumfordIdeal::relation(int k) const {
  if (k < 1 || k > g_) throw std::out_of_range("MumfordIdeal: relation index");
  return relations_[static_cast<size_t>(k) - 1];
}

Reduction MumfordIdeal::reduce(const HodgeClass& x) const {
  if (x.genus != g_) throw std::logic_error("MumfordIdeal: genus mismatch");
  if (x.max_degree() > bound_)
    throw std::domain_error("MumfordIdeal: degree bound exceeded");
  std::map<std::pair<int, LambdaMono>, Rat> acc;
  for (long d = 0; d <= x.max_degree(); ++d) {
    HodgeClass rem = x.graded_part(d);
    const auto& table = rows_[static_cast<size_t>(d)];
    while (!rem.is_zero()) {
      LambdaMono pivot = rem.coeffs.rbegin()->first;
      auto it = table.find(pivot);
      if (it == table.end()) return Reduction{};
      Rat c = rem.coeffs.rbegin()->second;
      rem -= it->second.value.scaled(c);
      for (const auto& [key, rc] : it->second.combo) {
        Rat& slot = acc[key];
        slot += c * rc;
        if (sgn(slot) == 0) acc.erase(key);
      }
    }
  }
  Reduction out;
  out.is_zero = true;
  for (const auto& [key, c] : acc)
    out.witness.push_back(WitnessTerm{key.first, key.second, c});
  return out;
}

HodgeClass MumfordIdeal::expand(const std::vector<WitnessTerm>& witness) const {
  HodgeClass out = HodgeClass::zero(g_);
  for (const WitnessTerm& t : witness)
    out += (mono_class(g_, t.m) * relation(t.k)).scaled(t.coeff);
  return out;
}

HodgeClass chern_char(int g, int n) {
  if (n < 1) throw std::invalid_argument("chern_char: n must be positive");
  HodgeClass out = HodgeClass::zero(g);
  for (int i = 1; i <= n; ++i) {
    int j = n - i;
    if (i > g || j > g) continue;
    Rat s = rat((i % 2 == 1) ? i : -i);
    out += (HodgeClass::lambda(g, i) * HodgeClass::lambda(g, j)).scaled(s);
  }
  return out.scaled(Rat(1) / Rat(factorial(static_cast<unsigned long>(n))));
}

ClassPoly cp_add(const ClassPoly& a, const ClassPoly& b) {
  ClassPoly out = a.size() >= b.size() ? a : b;
  const ClassPoly& small = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < small.size(); ++i) out[i] += small[i];
  return out;
}

ClassPoly cp_mul(const ClassPoly& a, const ClassPoly& b) {
  if (a.empty() || b.empty()) return {};
  int g = a.front().genus;
  ClassPoly out(a.size() + b.size() - 1, HodgeClass::zero(g));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ClassPoly cp_scale(const ClassPoly& p, const HodgeClass& s) {
  ClassPoly out = p;
  for (HodgeClass& c : out) c = c * s;
  return out;
}

ClassPoly cp_derivative(const ClassPoly& p) {
  if (p.size() <= 1) return {};
  ClassPoly out(p.size() - 1, HodgeClass::zero(p.front().genus));
  for (size_t e = 1; e < p.size(); ++e)
    out[e - 1] = p[e].scaled(rat(static_cast<long>(e)));
  return out;
}

ClassPoly cp_affine(const ClassPoly& p, const Rat& a, const Rat& b) {
  if (p.empty()) return {};
  int g = p.front().genus;
  ClassPoly out(p.size(), HodgeClass::zero(g));
  for (size_t e = 0; e < p.size(); ++e) {
    if (p[e].is_zero()) continue;
    for (size_t t = 0; t <= e; ++t) {
      Rat w = Rat(binomial(static_cast<unsigned long>(e),
                           static_cast<unsigned long>(t))) *
              rat_pow(a, static_cast<long>(t)) *
              rat_pow(b, static_cast<long>(e - t));
      if (sgn(w) == 0) continue;
      out[t] += p[e].scaled(w);
    }
  }
  return out;
}

HodgeClass cp_coeff(const ClassPoly& p, long e) {
  if (e < 0 || static_cast<size_t>(e) >= p.size())
    return HodgeClass::zero(p.empty() ? 0 : p.front().genus);
  return p[static_cast<size_t>(e)];
}

HodgeClass cp_eval(const ClassPoly& p, const Rat& t0) {
  if (p.empty()) return HodgeClass::zero(0);
  HodgeClass out = HodgeClass::zero(p.front().genus);
  for (size_t e = p.size(); e-- > 0;) out = out.scaled(t0) + p[e];
  return out;
}

ClassPoly chern_poly(int g) {
  ClassPoly out;
  out.reserve(static_cast<size_t>(g) + 1);
  for (int i = 0; i <= g; ++i) out.push_back(HodgeClass::lambda(g, i));
  return out;
}

ClassPoly chern_poly_dual(int g) {
  ClassPoly out;
  out.reserve(static_cast<size_t>(g) + 1);
  for (int e = 0; e <= g; ++e) {
    int i = g - e;
    Rat s = (i % 2 == 0) ? Rat(1) : Rat(-1);
    out.push_back(HodgeClass::lambda(g, i).scaled(s));
  }
  return out;
}

namespace {

DerivativeCheck membership(const MumfordIdeal& ideal, const HodgeClass& diff) {
  DerivativeCheck out;
  out.pass = true;
  for (long d = 0; d <= diff.max_degree(); ++d) {
    HodgeClass part = diff.graded_part(d);
    if (part.is_zero()) continue;
    if (!ideal.reduce(part).is_zero) {
      out.pass = false;
      out.failed_degree = d;
      return out;
    }
  }
  return out;
}

}  // namespace

DerivativeIdentityReport verify_chern_derivative_identities(
    const MumfordIdeal& ideal) {
  int g = ideal.genus();
  if (g < 1)
    throw std::invalid_argument("derivative identities need genus >= 1");
  DerivativeIdentityReport rep;
  rep.genus = g;

  ClassPoly D = chern_poly_dual(g);
  HodgeClass d_at_1 = cp_eval(D, Rat(1));

  HodgeClass ch_sum = HodgeClass::zero(g);
  for (int k = 1; k <= 2 * g - 1; ++k) {
    Rat w = Rat(factorial(static_cast<unsigned long>(k)));
    if (k % 2 == 0) w = -w;
    ch_sum += chern_char(g, k).scaled(w);
  }

  HodgeClass lhs_a = d_at_1 * cp_eval(cp_derivative(D), Rat(-1));
  HodgeClass rhs_a =
      HodgeClass::one(g).scaled(rat(g % 2 == 1 ? g : -g)) +
      ch_sum.scaled(g % 2 == 0 ? Rat(1) : Rat(-1));
  rep.value_at_minus_one = membership(ideal, lhs_a - rhs_a);

  // d/dtau at 0 of D(1) D(tau) D(-tau-1): the degree-1 coefficient of the
  // product polynomial in tau.
  ClassPoly prod = cp_scale(cp_mul(D, cp_affine(D, Rat(-1), Rat(-1))), d_at_1);
  HodgeClass lhs_b = cp_coeff(prod, 1);
  HodgeClass rhs_b = HodgeClass::lambda(g, g - 1).scaled(Rat(-1)) +
                     HodgeClass::lambda(g, g).scaled(rat(g)) -
                     HodgeClass::lambda(g, g) * ch_sum;
  rep.tau_derivative = membership(ideal, lhs_b - rhs_b);

  if (g == 1) {
    // l_{g-2} does not exist: the top-degree statement is empty.
    rep.top_degree_part.checked = false;
    rep.top_degree_part.pass = true;
  } else {
    Rat s = (g % 2 == 1) ? Rat(1) : Rat(-1);
    HodgeClass target = (HodgeClass::lambda(g, g) *
                         HodgeClass::lambda(g, g - 1) *
                         HodgeClass::lambda(g, g - 2))
                            .scaled(s);
    rep.top_degree_part =
        membership(ideal, lhs_b.graded_part(3L * g - 3) - target);
  }
  return rep;
}

DerivativeIdentityReport verify_chern_derivative_identities(int g) {
  MumfordIdeal ideal(g);
  return verify_chern_derivative_identities(ideal);
}

}  // namespace hodgeint
