#include "hodgeint/mv_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "hodgeint/character.hpp"

namespace hodgeint {

LambdaSeries quantum_dim(const Partition& nu, long order) {
  if (nu.empty()) throw std::invalid_argument("quantum_dim: empty partition");
  int w = weight(nu);
  long inner = order + w + 1;  // each inverted factor costs one order unit
  LambdaSeries v = LambdaSeries::one(LambdaSeries::kInf);
  for (int h : partition_stats(nu).hooks)
    v = v * sin_double_half(h, inner).inverted();
  return v.truncated(order);
}

LambdaSeries quantum_dim_ratio(const Partition& nu, long order) {
  if (nu.empty())
    throw std::invalid_argument("quantum_dim_ratio: empty partition");
  int w = weight(nu);
  int l = length(nu);
  long inversions = static_cast<long>(l) * (l - 1) / 2 + w;
  long inner = order + 2 * inversions + 2;
  LambdaSeries v = LambdaSeries::one(LambdaSeries::kInf);
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      v = v * sin_double_half(nu[a] - nu[b] + (b - a), inner);
      v = v * sin_double_half(b - a, inner).inverted();
    }
  for (int i = 1; i <= l; ++i)
    for (int box = 1; box <= nu[i - 1]; ++box)
      v = v * sin_double_half(box - i + l, inner).inverted();
  return v.truncated(order);
}

MVSeries build_R(int weight_bound, long lambda_order) {
  if (weight_bound < 1 || lambda_order < 0)
    throw std::invalid_argument("build_R: bad truncation parameters");
  // Entries of Z get validity e_ord - weight >= lambda_order + 2, which the
  // log and the cut-and-join products preserve weight-by-weight.
  long e_ord = lambda_order + weight_bound + 2;

  MVSeries mv;
  mv.weight_bound = weight_bound;
  mv.lambda_order = lambda_order;

  PartitionSeries z(weight_bound);
  z.set(Partition{}, LambdaSeries::one(LambdaSeries::kInf));
  for (int w = 1; w <= weight_bound; ++w) {
    const auto nus = partitions_of(w);
    const CharacterTable& tbl = character_table(w);

    std::vector<LambdaSeries> t_nu;  // exp(i (tau+1/2) kappa l/2) * V_nu
    t_nu.reserve(nus.size());
    for (const auto& nu : nus) {
      PartitionStats st = partition_stats(nu);
      TauPoly base =
          TauPoly::monomial(GaussRat{Rat(0), Rat(st.kappa) / 4}, 0) +
          TauPoly::monomial(GaussRat{Rat(0), Rat(st.kappa) / 2}, 1);
      LambdaSeries e = LambdaSeries::zero(e_ord);
      TauPoly c(GaussRat(1));
      for (long n = 0; n <= e_ord; ++n) {
        if (n > 0) {
          if (c.is_zero()) break;
          c = (c * base).scaled(GaussRat(Rat(1, static_cast<unsigned long>(n))));
        }
        if (!c.is_zero()) e += LambdaSeries::monomial(c, n, e_ord);
      }
      t_nu.push_back(e * quantum_dim(nu, e_ord));
    }

    for (const auto& mu : nus) {
      Rat z_mu(partition_stats(mu).z);
      LambdaSeries s = LambdaSeries::zero(LambdaSeries::kInf);
      for (std::size_t a = 0; a < nus.size(); ++a) {
        long long chi = tbl.at(nus[a], mu);
        if (chi == 0) continue;
        s += t_nu[a].scaled(GaussRat(Rat(static_cast<long>(chi)) / z_mu));
      }
      z.set(mu, s);
    }
  }

  mv.Z = z;
  mv.R = ps_log(z);

  int tau_max = 0;
  for (const auto& [mu, s] : mv.R.terms)
    for (long k = s.min_exp(); !s.is_zero() && k <= s.order(); ++k)
      tau_max = std::max(tau_max, s.coeff(k).degree());
  mv.tau_degree_bound = tau_max;
  return mv;
}

LambdaSeries initial_value_series(int d, long order) {
  if (d < 1) throw std::invalid_argument("initial_value_series: d < 1");
  LambdaSeries inv = sin_double_half(d, order + 2).inverted();
  GaussRat scale = i_pow(d + 1) * GaussRat(rat(-1, d));
  return inv.scaled(scale).truncated(order);
}

GaussRat limit_normalization(const Partition& mu) {
  Rat aut(partition_stats(mu).aut);
  return i_pow(-(weight(mu) + length(mu))) * GaussRat(Rat(-aut));
}

LambdaSeries tau_derivative_target(int d, long order) {
  if (d < 1) throw std::invalid_argument("tau_derivative_target: d < 1");
  LambdaSeries t = LambdaSeries::zero(LambdaSeries::kInf);
  for (int i = 1; i < d; ++i) {
    int j = d - i;
    LambdaSeries prod = sin_double_half(i, order + 4).inverted() *
                        sin_double_half(j, order + 4).inverted();
    t += prod.shifted(1);
  }
  // lambda/(8 sin sin) = (1/2) lambda * inv_i * inv_j.
  t = t.scaled(i_pow(d + 1) * GaussRat(Rat(-1, 2)));
  return t.truncated(std::min(order, t.order()));
}

std::vector<SeriesMismatch> tau_derivative_check(const MVSeries& mv, int d,
                                                 long order) {
  if (d < 1 || d > mv.weight_bound)
    throw std::invalid_argument("tau_derivative_check: d out of range");
  LambdaSeries lhs =
      mv.R.coeff(Partition{d}).tau_derivative().at_tau_zero();
  return compare_series(lhs, tau_derivative_target(d, order), order);
}

std::vector<SeriesMismatch> tau_derivative_check(int d, long order) {
  return tau_derivative_check(build_R(d, order), d, order);
}

LambdaSeries limit_lambda_g(const MVSeries& mv, const Partition& mu,
                            long order) {
  if (mu.empty()) throw std::invalid_argument("limit_lambda_g: empty mu");
  int w = weight(mu);
  int l = length(mu);
  if (w > mv.weight_bound)
    throw std::invalid_argument("limit_lambda_g: weight beyond bound");
  LambdaSeries r = mv.R.coeff(mu);
  GaussRat scale = limit_normalization(mu);
  long kmax = order + l - 2;
  if (r.order() < kmax)
    throw std::out_of_range("limit_lambda_g: series order too small");

  LambdaSeries out = LambdaSeries::zero(order);
  for (long k = -w; k <= kmax; ++k) {
    const TauPoly& q = r.coeff(k);
    if (q.is_zero()) continue;
    if (!q.divisible_by_tau_pow(l - 1))
      throw std::domain_error(
          "limit_lambda_g: limit does not exist (tau divisibility fails) at "
          "p_" + partition_key(mu) + " lambda^" + std::to_string(k));
    GaussRat v = q.div_tau_pow(l - 1).at_zero() * scale;
    if (v.is_zero()) continue;
    if (!v.is_real())
      throw std::domain_error("limit_lambda_g: non-real value at p_" +
                              partition_key(mu) + " lambda^" +
                              std::to_string(k));
    out += LambdaSeries::monomial(TauPoly(v), k + 2 - l, order);
  }
  return out;
}

LambdaSeries limit_lambda_g(const Partition& mu, long order) {
  MVSeries mv = build_R(weight(mu), order + length(mu));
  return limit_lambda_g(mv, mu, order);
}

LambdaSeries lambda_g_target(int d, int n, long order) {
  if (d < 1) throw std::invalid_argument("lambda_g_target: d < 1");
  // (d lambda/2)/sin(d lambda/2) = d * lambda / (2 sin(d lambda/2)).
  LambdaSeries t =
      sin_double_half(d, order + 2).inverted().shifted(1).scaled(
          GaussRat(Rat(d)));
  return t.scaled(GaussRat(rat_pow(Rat(d), n - 3))).truncated(order);
}

PartitionSeries limit_elsv(const MVSeries& mv, long order) {
  PartitionSeries out(mv.weight_bound);
  for (const auto& [mu, r] : mv.R.terms) {
    int w = weight(mu);
    if (r.order() < order - w)
      throw std::out_of_range("limit_elsv: series order too small");
    LambdaSeries s = LambdaSeries::zero(order);
    if (!r.is_zero()) {
      for (long k = r.min_exp(); k <= r.order(); ++k) {
        const TauPoly& q = r.coeff(k);
        for (int m = 0; m <= q.degree(); ++m) {
          const GaussRat& c = q.coeff(m);
          if (c.is_zero()) continue;
          long tau_exp = k + w - m;
          if (tau_exp < 0)
            throw std::domain_error(
                "limit_elsv: negative tau-power survives at p_" +
                partition_key(mu) + " lambda^" + std::to_string(k));
          if (tau_exp == 0 && k + w <= order)
            s += LambdaSeries::monomial(TauPoly(c), k + w, order);
        }
      }
    }
    out.set(mu, s);
  }
  return out;
}

PartitionSeries limit_elsv(int weight_bound, long order) {
  MVSeries mv = build_R(weight_bound, std::max(order, 0L));
  return limit_elsv(mv, order);
}

namespace {

// Monomial coefficients (ascending) of the unique degree <= n-1 polynomial
// through (x_i, v_i), by Newton divided differences.
std::vector<Rat> interpolate(const std::vector<Rat>& xs,
                             const std::vector<Rat>& vs) {
  std::size_t n = xs.size();
  std::vector<Rat> dd = vs;  // dd[i] becomes the i-th divided difference
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

  std::vector<Rat> coef(n, Rat(0));
  std::vector<Rat> basis{Rat(1)};  // prod_{j<i} (x - x_j)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) coef[j] += dd[i] * basis[j];
    if (i + 1 < n) {
      basis.push_back(Rat(0));
      for (std::size_t j = basis.size() - 1; j > 0; --j)
        basis[j] = basis[j - 1] - xs[i] * basis[j];
      basis[0] = -xs[i] * basis[0];
    }
  }
  return coef;
}

Rat poly_eval(const std::vector<Rat>& coef, const Rat& x) {
  Rat acc(0);
  for (std::size_t j = coef.size(); j-- > 0;) acc = acc * x + coef[j];
  return acc;
}

}  // namespace

DddExtraction ddd_extraction(int g_max, int d_max) {
  if (g_max < 1) throw std::invalid_argument("ddd_extraction: g_max < 1");
  if (d_max < 2 * g_max)
    throw std::invalid_argument("ddd_extraction: need at least 2*g_max samples");
  long ord = 2L * g_max;

  // samples[d][g] = lambda^{2g} coefficient of the series at this d.
  std::vector<std::vector<Rat>> samples(d_max + 1,
                                        std::vector<Rat>(g_max + 1, Rat(0)));
  for (int d = 1; d <= d_max; ++d) {
    LambdaSeries t = sin_double_half(d, ord + 2).inverted().shifted(1).scaled(
        GaussRat(Rat(d)));
    LambdaSeries s =
        t.scaled(GaussRat(-harmonic(static_cast<unsigned long>(d - 1)) / Rat(d)));
    for (int i = 1; i < d; ++i) {
      int j = d - i;
      LambdaSeries prod = sin_double_half(i, ord + 4).inverted() *
                          sin_double_half(j, ord + 4).inverted();
      s += prod.shifted(2).scaled(GaussRat(Rat(1, 2)));
    }
    for (int g = 1; g <= g_max; ++g) {
      const TauPoly& q = s.coeff(2L * g);
      if (!q.is_constant())
        throw std::domain_error("ddd_extraction: tau leaked into the samples");
      GaussRat c = q.at_zero();
      if (!c.is_real())
        throw std::domain_error("ddd_extraction: non-real sample");
      samples[d][g] = c.re;
    }
  }

  DddExtraction out;
  for (int g = 1; g <= g_max; ++g) {
    int n = 2 * g;
    std::vector<Rat> xs, vs;
    for (int d = 1; d <= n; ++d) {
      xs.push_back(Rat(d));
      vs.push_back(samples[d][g]);
    }
    std::vector<Rat> coef = interpolate(xs, vs);

    int resid = 0;
    for (int d = n + 1; d <= d_max; ++d) {
      ++resid;
      if (poly_eval(coef, Rat(d)) != samples[d][g])
        out.residual_failures.emplace_back(g, d);
    }
    if (g == g_max) out.residual_points = resid;

    if (g >= 2) out.cubic[g] = coef.size() > 1 ? coef[1] : Rat(0);
    std::size_t top = static_cast<std::size_t>(2 * g - 1);
    out.g_minus_1[g] = coef.size() > top ? coef[top] : Rat(0);
  }
  return out;
}

}  // namespace hodgeint
