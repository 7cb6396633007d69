#include "hodgeint/partition_series.hpp"

#include <algorithm>

namespace hodgeint {

const LambdaSeries* PartitionSeries::coeff_ptr(const Partition& mu) const {
  auto it = terms.find(mu);
  return it == terms.end() ? nullptr : &it->second;
}

LambdaSeries PartitionSeries::coeff(const Partition& mu) const {
  const LambdaSeries* p = coeff_ptr(mu);
  return p ? *p : LambdaSeries::zero(LambdaSeries::kInf);
}

void PartitionSeries::set(const Partition& mu, LambdaSeries s) {
  if (weight(mu) > weight_bound)
    throw std::invalid_argument("partition weight exceeds series bound");
  terms.insert_or_assign(mu, std::move(s));
}

void PartitionSeries::add_to(const Partition& mu, const LambdaSeries& s) {
  if (weight(mu) > weight_bound)
    throw std::invalid_argument("partition weight exceeds series bound");
  auto [it, inserted] = terms.try_emplace(mu, s);
  if (!inserted) it->second += s;
}

PartitionSeries ps_add(const PartitionSeries& a, const PartitionSeries& b) {
  PartitionSeries r(std::min(a.weight_bound, b.weight_bound));
  for (const auto& [mu, s] : a.terms)
    if (weight(mu) <= r.weight_bound) r.set(mu, s);
  for (const auto& [mu, s] : b.terms)
    if (weight(mu) <= r.weight_bound) r.add_to(mu, s);
  return r;
}

PartitionSeries ps_sub(const PartitionSeries& a, const PartitionSeries& b) {
  return ps_add(a, ps_scaled(b, GaussRat(-1)));
}

PartitionSeries ps_mul(const PartitionSeries& a, const PartitionSeries& b) {
  PartitionSeries r(std::min(a.weight_bound, b.weight_bound));
  for (const auto& [mu, f] : a.terms) {
    int wa = weight(mu);
    for (const auto& [nu, g] : b.terms) {
      if (wa + weight(nu) > r.weight_bound) continue;
      r.add_to(merged(mu, nu), f * g);
    }
  }
  return r;
}

PartitionSeries ps_scaled(const PartitionSeries& a, const GaussRat& s, long lambda_pow) {
  PartitionSeries r(a.weight_bound);
  for (const auto& [mu, f] : a.terms) r.set(mu, f.scaled(s).shifted(lambda_pow));
  return r;
}

PartitionSeries ps_tau_derivative(const PartitionSeries& a) {
  PartitionSeries r(a.weight_bound);
  for (const auto& [mu, f] : a.terms) r.set(mu, f.tau_derivative());
  return r;
}

PartitionSeries ps_at_tau_zero(const PartitionSeries& a) {
  PartitionSeries r(a.weight_bound);
  for (const auto& [mu, f] : a.terms) r.set(mu, f.at_tau_zero());
  return r;
}

PartitionSeries ps_lambda_derivative(const PartitionSeries& a) {
  PartitionSeries r(a.weight_bound);
  for (const auto& [mu, f] : a.terms) r.set(mu, f.lambda_derivative());
  return r;
}

PartitionSeries ps_lambda_integral(const PartitionSeries& a) {
  PartitionSeries r(a.weight_bound);
  for (const auto& [mu, f] : a.terms) r.set(mu, f.lambda_integral());
  return r;
}

PartitionSeries ps_exp(const PartitionSeries& u) {
  if (u.coeff_ptr(Partition{}))
    throw std::domain_error("ps_exp requires no empty-partition term");
  PartitionSeries acc(u.weight_bound);
  acc.set(Partition{}, LambdaSeries::one(LambdaSeries::kInf));
  PartitionSeries pw = acc;
  for (int n = 1; n <= u.weight_bound; ++n) {
    pw = ps_mul(pw, u);
    if (pw.terms.empty()) break;
    acc = ps_add(acc, ps_scaled(pw, GaussRat(Rat(Int(1), factorial(n)))));
  }
  return acc;
}

PartitionSeries ps_log(const PartitionSeries& z) {
  PartitionSeries u = z;
  auto it = u.terms.find(Partition{});
  if (it == u.terms.end())
    throw std::domain_error("ps_log requires constant term 1");
  it->second -= LambdaSeries::one(it->second.order());
  if (!it->second.is_zero())
    throw std::domain_error("ps_log requires constant term exactly 1");
  u.terms.erase(it);  // exactly zero by the precondition: keep it structural
  PartitionSeries acc(u.weight_bound);
  PartitionSeries pw;
  pw.weight_bound = u.weight_bound;
  pw.set(Partition{}, LambdaSeries::one(LambdaSeries::kInf));
  for (int n = 1; n <= u.weight_bound; ++n) {
    pw = ps_mul(pw, u);
    bool all_zero = true;
    for (const auto& [mu, s] : pw.terms) all_zero = all_zero && s.is_zero();
    acc = ps_add(acc, ps_scaled(pw, GaussRat(Rat((n % 2) ? 1 : -1, n))));
    if (all_zero) break;
  }
  return acc;
}

PartitionSeries partial_p(const PartitionSeries& f, int i) {
  PartitionSeries r(f.weight_bound);
  for (const auto& [mu, s] : f.terms) {
    int m = multiplicity(mu, i);
    if (m == 0) continue;
    r.add_to(remove_one_part(mu, i), s.scaled(GaussRat(m)));
  }
  return r;
}

PartitionSeries cut_join_apply(const PartitionSeries& f) {
  const int W = f.weight_bound;
  PartitionSeries out(W);

  for (const auto& [mu, s] : f.terms) {
    auto mults = part_multiplicities(mu);
    // join, linear part: ij p_{i+j} d2/dp_i dp_j
    for (const auto& [i, mi] : mults) {
      for (const auto& [j, mj] : mults) {
        long c = (i == j) ? static_cast<long>(mi) * (mi - 1) : static_cast<long>(mi) * mj;
        if (c == 0) continue;
        Partition base = remove_one_part(remove_one_part(mu, i), j);
        out.add_to(with_part(std::move(base), i + j),
                   s.scaled(GaussRat(static_cast<long>(i) * j * c)));
      }
    }
    // cut: (i+j) p_i p_j d/dp_{i+j}, summed over ordered pairs i+j = part
    for (const auto& [part, m] : mults) {
      if (part < 2) continue;
      Partition base = remove_one_part(mu, part);
      for (int i = 1; i < part; ++i) {
        Partition key = with_part(with_part(base, i), part - i);
        out.add_to(key, s.scaled(GaussRat(static_cast<long>(part) * m)));
      }
    }
  }

  // join, quadratic part: ij p_{i+j} (dF/dp_i)(dF/dp_j) over ordered pairs
  std::vector<PartitionSeries> grad(W + 1);
  for (int i = 1; i <= W; ++i) grad[i] = partial_p(f, i);
  for (int i = 1; i <= W; ++i) {
    if (grad[i].terms.empty()) continue;
    for (int j = 1; i + j <= W; ++j) {
      if (grad[j].terms.empty()) continue;
      for (const auto& [alpha, fa] : grad[i].terms) {
        int wa = weight(alpha);
        for (const auto& [beta, fb] : grad[j].terms) {
          if (wa + weight(beta) + i + j > W) continue;
          out.add_to(with_part(merged(alpha, beta), i + j),
                     (fa * fb).scaled(GaussRat(static_cast<long>(i) * j)));
        }
      }
    }
  }
  return out;
}

namespace {
void flatten(const Partition& mu, const std::vector<SeriesMismatch>& ms,
             std::vector<CutJoinMismatch>& out) {
  for (const auto& m : ms) {
    int dmax = std::max(m.lhs.degree(), m.rhs.degree());
    for (int t = 0; t <= dmax; ++t)
      if (m.lhs.coeff(t) != m.rhs.coeff(t))
        out.push_back({mu, m.lambda_exp, t, m.lhs.coeff(t), m.rhs.coeff(t)});
  }
}
}  // namespace

std::vector<CutJoinMismatch> compare_partition_series(const PartitionSeries& lhs,
                                                      const PartitionSeries& rhs,
                                                      long compare_order) {
  std::vector<Partition> keys;
  for (const auto& [mu, s] : lhs.terms) keys.push_back(mu);
  for (const auto& [mu, s] : rhs.terms)
    if (!lhs.coeff_ptr(mu)) keys.push_back(mu);
  std::sort(keys.begin(), keys.end(), PartitionLess{});
  std::vector<CutJoinMismatch> out;
  for (const auto& mu : keys)
    flatten(mu, compare_series(lhs.coeff(mu), rhs.coeff(mu), compare_order), out);
  return out;
}

std::vector<CutJoinMismatch> verify_cut_join(const PartitionSeries& f,
                                             const PartitionSeries& lhs, const GaussRat& scalar,
                                             long lambda_pow, long compare_order) {
  if (f.weight_bound != lhs.weight_bound)
    throw std::invalid_argument("verify_cut_join: mismatched truncation bounds");
  PartitionSeries rhs = ps_scaled(cut_join_apply(f), scalar, lambda_pow);
  return compare_partition_series(lhs, rhs, compare_order);
}

}  // namespace hodgeint
