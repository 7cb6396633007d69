#include "hodgeint/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hodgeint/bernoulli.hpp"
#include "hodgeint/hodge_ring.hpp"

namespace hodgeint {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string ts(long v) { return std::to_string(v); }

IdentityReport rep(std::string name, Params params, std::string left,
                   std::string right, std::string lprov, std::string rprov,
                   bool pass) {
  IdentityReport r;
  r.identity = std::move(name);
  r.parameters = std::move(params);
  r.left = std::move(left);
  r.right = std::move(right);
  r.left_provenance = std::move(lprov);
  r.right_provenance = std::move(rprov);
  r.pass = pass;
  return r;
}

void push(SuiteResult& sr, IdentityReport r) {
  sr.pass = sr.pass && r.pass;
  sr.reports.push_back(std::move(r));
}

Rat two_pow(long e) {
  if (e >= 0) return rat_pow(rat(2), e);
  return Rat(1) / rat_pow(rat(2), -e);
}

// Renders a tau-free constant lambda-coefficient; falls back to the full
// tau-polynomial text when the coefficient is not constant.
std::string coeff_str(const TauPoly& q) {
  if (!q.is_constant()) return q.to_string();
  GaussRat v = q.at_zero();
  if (v.is_real()) return rat_to_string(v.re);
  return gauss_to_string(v);
}

std::string series_detail(const std::vector<SeriesMismatch>& ms) {
  if (ms.empty()) return "0";
  return ts(static_cast<long>(ms.size())) + " mismatches, first at lambda^" +
         ts(ms.front().lambda_exp);
}

std::string cutjoin_detail(const std::vector<CutJoinMismatch>& ms) {
  if (ms.empty()) return "0";
  return ts(static_cast<long>(ms.size())) + " mismatches, first at p_" +
         partition_key(ms.front().mu) + " lambda^" + ts(ms.front().lambda_exp) +
         " tau^" + ts(ms.front().tau_deg);
}

// ---------------------------------------------------------------- bernoulli

SuiteResult run_bernoulli(const SuiteOptions& opts) {
  SuiteResult sr;
  sr.suite = "bernoulli";
  int gmax = std::max(1, opts.max_genus.value_or(10));
  int mmax = 2 * gmax;

  std::vector<Rat> series = bernoulli_by_series(static_cast<unsigned>(mmax));
  for (int m = 0; m <= mmax; ++m) {
    const Rat& left = bernoulli(static_cast<unsigned>(m));
    push(sr, rep("bernoulli-recursion-vs-series", {{"m", ts(m)}},
                 rat_to_string(left), rat_to_string(series[m]), "closedForm",
                 "directSum", left == series[m]));
  }

  for (int m = 1; m <= mmax; ++m) {
    Rat s = 0;
    for (int k = 0; k <= m; ++k)
      s += Rat(binomial(static_cast<unsigned long>(m + 1),
                        static_cast<unsigned long>(k))) *
           bernoulli(static_cast<unsigned>(k));
    push(sr, rep("bernoulli-sum-identity", {{"m", ts(m)}}, rat_to_string(s),
                 rat_to_string(Rat(0)), "directSum", "closedForm", s == 0));
  }

  // (t/2) / sinh(t/2) against ((1 - 2^{m-1})/2^{m-1}) B_m / m!.
  {
    long inner = mmax + 2;
    LambdaSeries sh = LambdaSeries::zero(inner);
    for (long k = 0; 2 * k + 1 <= inner; ++k) {
      Rat c = Rat(2) / (two_pow(2 * k + 1) *
                        Rat(factorial(static_cast<unsigned long>(2 * k + 1))));
      sh += LambdaSeries::monomial(TauPoly(GaussRat(c)), 2 * k + 1, inner);
    }
    LambdaSeries f = sh.inverted().shifted(1);
    for (int m = 0; m <= mmax; ++m) {
      const TauPoly& q = f.coeff(m);
      Rat right = (Rat(1) - two_pow(m - 1)) / two_pow(m - 1) *
                  bernoulli(static_cast<unsigned>(m)) /
                  Rat(factorial(static_cast<unsigned long>(m)));
      bool ok = q.is_constant() && q.at_zero().is_real() &&
                q.at_zero().re == right;
      push(sr, rep("sinh-reciprocal-coefficient", {{"m", ts(m)}},
                   coeff_str(q), rat_to_string(right), "directSum",
                   "closedForm", ok));
    }
  }

  // (t/2) coth(t/2) = t cosh(t/2) / (2 sinh(t/2)) against B_{2n}/(2n)!.
  {
    long inner = 2L * gmax + 2;
    LambdaSeries sh = LambdaSeries::zero(inner);
    LambdaSeries ch = LambdaSeries::zero(inner);
    for (long k = 0; 2 * k <= inner; ++k) {
      Rat ce = Rat(1) / (two_pow(2 * k) *
                         Rat(factorial(static_cast<unsigned long>(2 * k))));
      ch += LambdaSeries::monomial(TauPoly(GaussRat(ce)), 2 * k, inner);
      if (2 * k + 1 <= inner) {
        Rat co = Rat(2) / (two_pow(2 * k + 1) *
                           Rat(factorial(static_cast<unsigned long>(2 * k + 1))));
        sh += LambdaSeries::monomial(TauPoly(GaussRat(co)), 2 * k + 1, inner);
      }
    }
    LambdaSeries f = (ch * sh.inverted()).shifted(1);
    for (int n = 0; n <= gmax; ++n) {
      const TauPoly& q = f.coeff(2 * n);
      Rat right = bernoulli(static_cast<unsigned>(2 * n)) /
                  Rat(factorial(static_cast<unsigned long>(2 * n)));
      bool ok = q.is_constant() && q.at_zero().is_real() &&
                q.at_zero().re == right;
      push(sr, rep("coth-coefficient", {{"n", ts(n)}}, coeff_str(q),
                   rat_to_string(right), "directSum", "closedForm", ok));
    }
  }

  // lambda / (2 sin(lambda/2)) against the closed form b_g.
  {
    LambdaSeries f = sin_double_half(1, 2L * gmax + 2).inverted().shifted(1);
    for (int g = 0; g <= gmax; ++g) {
      const TauPoly& q = f.coeff(2 * g);
      Rat right = b_g(g);
      bool ok = q.is_constant() && q.at_zero().is_real() &&
                q.at_zero().re == right;
      push(sr, rep("sine-reciprocal-coefficient", {{"g", ts(g)}},
                   coeff_str(q), rat_to_string(right), "directSum",
                   "closedForm", ok));
    }
  }

  for (int g = 1; g <= gmax; ++g)
    push(sr, bernoulli_convolution_report(g));

  for (int m = 1; m <= gmax; ++m)
    for (int d = 2; d <= 2 * gmax; ++d) push(sr, power_sum_check(m, d));

  {
    Rat odd_mass = 0;
    for (int m = 3; m <= mmax; m += 2) {
      const Rat& b = bernoulli(static_cast<unsigned>(m));
      odd_mass += (b < 0 ? Rat(-b) : b);
    }
    push(sr, rep("bernoulli-odd-vanishing", {{"mMax", ts(mmax)}},
                 rat_to_string(odd_mass), rat_to_string(Rat(0)), "directSum",
                 "closedForm", odd_mass == 0));
  }
  {
    long violations = 0;
    for (int m = 1; m <= gmax; ++m) {
      Rat v = bernoulli(static_cast<unsigned>(2 * m));
      if (m % 2 == 0) v = -v;  // (-1)^{m-1} B_{2m}
      if (!(v > 0)) ++violations;
    }
    push(sr, rep("bernoulli-sign-pattern", {{"mMax", ts(gmax)}},
                 ts(violations), "0", "directSum", "closedForm",
                 violations == 0));
  }
  return sr;
}

// ------------------------------------------------------------------ mumford

struct RingZero {
  bool pass = false;
  std::string detail;
};

RingZero ring_zero(const MumfordIdeal& ideal, const HodgeClass& x) {
  Reduction red = ideal.reduce(x);
  if (!red.is_zero) return {false, "nonzero remainder"};
  if (!raw_equal(ideal.expand(red.witness), x))
    return {false, "witness expansion mismatch"};
  return {true, "0"};
}

SuiteResult run_mumford(const SuiteOptions& opts) {
  SuiteResult sr;
  sr.suite = "mumford";
  int gmax = std::max(2, opts.max_genus.value_or(6));

  for (int g = 2; g <= gmax; ++g) {
    MumfordIdeal ideal(g);
    Params pg = {{"g", ts(g)}};

    // D(t) D(-t) with D the dual Chern polynomial: top coefficient is the
    // exact sign (-1)^g, everything below lies in the relation ideal.
    {
      ClassPoly dual = chern_poly_dual(g);
      ClassPoly prod = cp_mul(dual, cp_affine(dual, Rat(-1), Rat(0)));
      bool ok = true;
      std::string detail = "0";
      for (long j = 0; j <= 2L * g && ok; ++j) {
        HodgeClass part = cp_coeff(prod, j);
        if (j == 2L * g) {
          HodgeClass want = HodgeClass::one(g).scaled(g % 2 == 0 ? Rat(1)
                                                                 : Rat(-1));
          if (!raw_equal(part, want)) {
            ok = false;
            detail = "top coefficient is " + hodge_to_string(part);
          }
        } else {
          RingZero rz = ring_zero(ideal, part);
          if (!rz.pass) {
            ok = false;
            detail = "t^" + ts(j) + ": " + rz.detail;
          }
        }
      }
      push(sr, rep("chern-polynomial-reflection", pg, detail, "0",
                   "directSum", "closedForm", ok));
    }

    // Coefficients of c'(-t) c(t) reproduce n! ch_n termwise.
    {
      ClassPoly c = chern_poly(g);
      ClassPoly prod = cp_mul(cp_affine(cp_derivative(c), Rat(-1), Rat(0)), c);
      bool ok = true;
      std::string detail = "0";
      for (int n = 1; n <= 2 * g && ok; ++n) {
        HodgeClass lhs = cp_coeff(prod, n - 1);
        HodgeClass rhs = chern_char(g, n).scaled(
            Rat(factorial(static_cast<unsigned long>(n))));
        if (!raw_equal(lhs, rhs)) {
          ok = false;
          detail = "mismatch at n=" + ts(n);
        }
      }
      push(sr, rep("chern-character-series", pg, detail, "0", "directSum",
                   "closedForm", ok));
    }

    for (int m = 1; m <= g; ++m) {
      RingZero rz = ring_zero(ideal, chern_char(g, 2 * m));
      push(sr, rep("even-chern-character-vanishing",
                   {{"g", ts(g)}, {"m", ts(m)}}, rz.detail, "0", "directSum",
                   "closedForm", rz.pass));
    }

    {
      RingZero a = ring_zero(ideal, chern_char(g, 2 * g));
      RingZero b = ring_zero(ideal, chern_char(g, 2 * g + 1));
      bool ok = a.pass && b.pass;
      push(sr, rep("high-chern-character-vanishing", pg,
                   ok ? "0" : (!a.pass ? "ch_" + ts(2 * g) + ": " + a.detail
                                       : "ch_" + ts(2 * g + 1) + ": " + b.detail),
                   "0", "directSum", "closedForm", ok));
    }

    {
      HodgeClass x = chern_char(g, 2 * g - 1)
                         .scaled(Rat(factorial(static_cast<unsigned long>(2 * g - 1))));
      HodgeClass target =
          HodgeClass::lambda(g, g - 1) * HodgeClass::lambda(g, g);
      if (g % 2 == 0) target = target.scaled(Rat(-1));
      RingZero rz = ring_zero(ideal, x - target);
      push(sr, rep("top-chern-character-product", pg, rz.detail, "0",
                   "directSum", "closedForm", rz.pass));
    }

    if (g >= 3) {
      HodgeClass x = chern_char(g, 2 * g - 3)
                         .scaled(Rat(factorial(static_cast<unsigned long>(2 * g - 3))));
      HodgeClass target =
          HodgeClass::lambda(g, g - 3).scaled(Rat(3)) * HodgeClass::lambda(g, g) -
          HodgeClass::lambda(g, g - 1) * HodgeClass::lambda(g, g - 2);
      if (g % 2 == 0) target = target.scaled(Rat(-1));
      RingZero rz = ring_zero(ideal, x - target);
      push(sr, rep("near-top-chern-character-product", pg, rz.detail, "0",
                   "directSum", "closedForm", rz.pass));
    }

    {
      DerivativeIdentityReport dr = verify_chern_derivative_identities(ideal);
      auto detail = [](const DerivativeCheck& c) {
        if (!c.checked) return std::string("vacuous");
        if (c.pass) return std::string("0");
        return "degree " + ts(c.failed_degree);
      };
      push(sr, rep("dual-chern-derivative-at-minus-one", pg,
                   detail(dr.value_at_minus_one), "0", "directSum",
                   "closedForm", dr.value_at_minus_one.pass));
      push(sr, rep("dual-chern-tau-derivative", pg,
                   detail(dr.tau_derivative), "0", "directSum", "closedForm",
                   dr.tau_derivative.pass));
      push(sr, rep("dual-chern-top-degree-part", pg,
                   detail(dr.top_degree_part), "0", "directSum", "closedForm",
                   dr.top_degree_part.pass));
    }

    {
      bool ok = true;
      std::string detail = "0";
      for (int k = 1; k <= g && ok; ++k) {
        RingZero rz = ring_zero(ideal, ideal.relation(k));
        if (!rz.pass) {
          ok = false;
          detail = "relation " + ts(2 * k) + ": " + rz.detail;
        }
      }
      push(sr, rep("mumford-relation-self-reduction", pg, detail, "0",
                   "directSum", "closedForm", ok));
    }
  }
  return sr;
}

// --------------------------------------------------------------- mv-cutjoin

SuiteResult run_mv_cutjoin(const SuiteOptions& opts, SuiteContext& ctx) {
  SuiteResult sr;
  sr.suite = "mv-cutjoin";
  int D = std::max(1, opts.max_weight.value_or(6));
  long N = std::max<long>(1, opts.order.value_or(6));
  const MVSeries& mv = ctx.mv(std::max(D, 6), std::max<long>(N, 6));

  {
    std::vector<CutJoinMismatch> ms = verify_cut_join(
        mv.R, ps_tau_derivative(mv.R), GaussRat(Rat(0), Rat(1, 2)), 1, N);
    push(sr, rep("mv-cut-and-join",
                 {{"maxWeight", ts(mv.weight_bound)}, {"order", ts(N)}},
                 cutjoin_detail(ms), "0", "mvEngine", "mvEngine", ms.empty()));
  }

  for (int d = 1; d <= D; ++d) {
    std::vector<SeriesMismatch> ms = compare_series(
        mv.R.coeff(Partition{d}).at_tau_zero(), initial_value_series(d, N), N);
    push(sr, rep("mv-initial-value", {{"d", ts(d)}, {"order", ts(N)}},
                 series_detail(ms), "0", "mvEngine", "closedForm",
                 ms.empty()));
  }

  {
    long failures = 0;
    std::string first = "0";
    for (const Partition& mu : partitions_up_to(D)) {
      if (length(mu) < 2) continue;
      std::vector<SeriesMismatch> ms = compare_series(
          mv.R.coeff(mu).at_tau_zero(), LambdaSeries::zero(N), N);
      if (!ms.empty()) {
        ++failures;
        if (first == "0")
          first = "p_" + partition_key(mu) + " " + series_detail(ms);
      }
    }
    push(sr, rep("mv-multipart-initial-vanishing",
                 {{"maxWeight", ts(D)}, {"order", ts(N)}}, first, "0",
                 "mvEngine", "closedForm", failures == 0));
  }
  return sr;
}

// --------------------------------------------------------------------- elsv

SuiteResult run_elsv(const SuiteOptions& opts, SuiteContext& ctx) {
  SuiteResult sr;
  sr.suite = "elsv";
  int W = std::max(1, opts.max_weight.value_or(4));
  long N = std::max<long>(1, opts.order.value_or(6));
  const MVSeries& mv = ctx.mv(std::max(W, 6), std::max<long>(N, 6));
  const PartitionSeries& phi = ctx.phi(W, N);

  PartitionSeries limit;
  bool neg_ok = true;
  std::string neg_detail = "0";
  try {
    limit = limit_elsv(mv, N);
  } catch (const std::domain_error& e) {
    neg_ok = false;
    neg_detail = e.what();
  }
  push(sr, rep("elsv-limit-no-negative-powers",
               {{"maxWeight", ts(mv.weight_bound)}, {"order", ts(N)}},
               neg_detail, "0", "mvEngine", "closedForm", neg_ok));

  if (neg_ok) {
    for (const Partition& mu : partitions_up_to(W)) {
      if (mu.empty()) continue;
      std::vector<SeriesMismatch> ms =
          compare_series(limit.coeff(mu), phi.coeff(mu).i_twisted(), N);
      push(sr, rep("elsv-limit-series",
                   {{"mu", partition_key(mu)}, {"order", ts(N)}},
                   series_detail(ms), "0", "mvEngine", "hurwitzEngine",
                   ms.empty()));
    }
  }

  // Three constructions of the simple Hurwitz numbers on a fixed grid.
  HurwitzTable tb = burnside_hurwitz(5, 3);
  HurwitzTable tc = cutjoin_hurwitz(5, 3);
  HurwitzTable to = oracle_hurwitz_table(5, 3);

  {
    long bad = 0;
    std::string first = "0";
    for (const auto& [key, entry] : tb.entries) {
      auto it = tc.entries.find(key);
      if (it == tc.entries.end() || it->second.value != entry.value) {
        ++bad;
        if (first == "0")
          first = "g=" + ts(key.g) + " mu=" + partition_key(key.mu);
      }
    }
    if (tc.entries.size() != tb.entries.size()) ++bad;
    push(sr, rep("hurwitz-burnside-vs-cutjoin",
                 {{"maxWeight", ts(5)}, {"maxGenus", ts(3)}}, first, "0",
                 "hurwitzEngine", "hurwitzEngine", bad == 0));
  }
  {
    long bad = 0, compared = 0;
    std::string first = "0";
    for (const auto& [key, entry] : tb.entries) {
      if (entry.r > 6) continue;
      auto it = to.entries.find(key);
      if (it == to.entries.end() || it->second.value != entry.value) {
        ++bad;
        if (first == "0")
          first = "g=" + ts(key.g) + " mu=" + partition_key(key.mu);
      } else {
        ++compared;
      }
    }
    push(sr, rep("hurwitz-burnside-vs-oracle",
                 {{"maxWeight", ts(5)},
                  {"maxGenus", ts(3)},
                  {"rMax", ts(6)},
                  {"compared", ts(compared)}},
                 first, "0", "hurwitzEngine", "directSum",
                 bad == 0 && compared > 0));
  }

  {
    struct Spot {
      int g;
      Partition mu;
      Rat value;
    };
    const std::vector<Spot> spots = {{0, {1}, Rat(1)},
                                     {0, {2}, rat(1, 2)},
                                     {1, {2}, rat(1, 2)},
                                     {0, {1, 1}, rat(1, 2)}};
    for (const Spot& s : spots) {
      const HurwitzEntry& e = tb.entries.at(GenusPartition{s.g, s.mu});
      push(sr, rep("hurwitz-spot-value",
                   {{"g", ts(s.g)}, {"mu", partition_key(s.mu)}},
                   rat_to_string(e.value), rat_to_string(s.value),
                   "hurwitzEngine", "closedForm", e.value == s.value));
    }
  }

  {
    const std::vector<Partition> unstable = {{1}, {2}, {1, 1}};
    for (const Partition& mu : unstable) {
      const HurwitzEntry& e = tb.entries.at(GenusPartition{0, mu});
      LinearHodgeValue lv = elsv_invert_one(0, mu, e.value);
      Rat want = rat_pow(Rat(weight(mu)), length(mu) - 3);
      push(sr, rep("unstable-linear-hodge", {{"mu", partition_key(mu)}},
                   rat_to_string(lv.integral), rat_to_string(want),
                   "hurwitzEngine", "closedForm",
                   !lv.stable && lv.integral == want));
    }
  }

  // Same linear Hodge integral from the sine-series limit and from the
  // brute-force cover count, through the identical inversion.
  {
    const MVSeries& mv4 = ctx.mv(4, 4);
    PartitionSeries lim8;
    bool built = true;
    std::string err;
    try {
      lim8 = limit_elsv(mv4, 8);
    } catch (const std::domain_error& e) {
      built = false;
      err = e.what();
    }
    for (int g = 0; g <= 2; ++g) {
      for (int d = 1; d <= 4; ++d) {
        Params pp = {{"g", ts(g)}, {"d", ts(d)}};
        if (!built) {
          push(sr, rep("linear-hodge-closure", pp, err, "0", "mvEngine",
                       "directSum", false));
          continue;
        }
        Partition mu{d};
        long r = hurwitz_r(g, mu);
        TauPoly q = lim8.coeff(mu).coeff(r);  // coeff(mu) is a temporary
        GaussRat v = q.at_zero() * i_pow(-r);
        bool okc = q.is_constant() && v.is_real();
        Rat h_mv = v.re * Rat(factorial(static_cast<unsigned long>(r)));
        Rat left = elsv_invert_one(g, mu, h_mv).integral;
        Rat right = elsv_invert_one(g, mu, oracle_hurwitz(g, mu)).integral;
        push(sr, rep("linear-hodge-closure", pp, rat_to_string(left),
                     rat_to_string(right), "mvEngine", "directSum",
                     okc && left == right));
      }
    }
  }
  return sr;
}

// ----------------------------------------------------------------- lambda-g

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& f) {
  if (parts == 1) {
    cur.push_back(total);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, f);
    cur.pop_back();
  }
}

SuiteResult run_lambda_g(const SuiteOptions& opts, SuiteContext& ctx) {
  SuiteResult sr;
  sr.suite = "lambda-g";
  int W = std::max(1, opts.max_weight.value_or(5));
  long N = std::max<long>(1, opts.order.value_or(6));
  int mw = std::max(W, 6);
  long mo = std::max({N, static_cast<long>(6),
                      N + 2L * W - 4 - static_cast<long>(mw)});
  const MVSeries& mv = ctx.mv(mw, mo);

  for (const Partition& mu : partitions_up_to(W)) {
    if (mu.empty()) continue;
    int d = weight(mu);
    int n = length(mu);
    bool ok = true;
    std::string detail = "0";
    LambdaSeries lim;
    try {
      lim = limit_lambda_g(mv, mu, N);
      std::vector<SeriesMismatch> ms =
          compare_series(lim, lambda_g_target(d, n, N), N);
      ok = ms.empty();
      detail = series_detail(ms);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    push(sr, rep("lambda-g-limit-series",
                 {{"mu", partition_key(mu)}, {"order", ts(N)}}, detail, "0",
                 "mvEngine", "closedForm", ok));
    if (!ok) continue;

    // The lambda^{2g} coefficient expanded through one-point psi-powers
    // against the top lambda class.
    for (int g = 1; 2 * g <= N; ++g) {
      Rat sum = 0;
      std::vector<int> cur;
      compositions(2 * g - 3 + n, n, cur, [&](const std::vector<int>& k) {
        Rat term = lambda_g_value(g, k);
        for (int i = 0; i < n; ++i)
          term *= rat_pow(Rat(mu[i]), k[i]);
        sum += term;
      });
      const TauPoly& q = lim.coeff(2 * g);
      Rat observed = q.at_zero().re;
      push(sr, rep("lambda-g-multinomial-closure",
                   {{"mu", partition_key(mu)}, {"g", ts(g)}},
                   rat_to_string(sum), rat_to_string(observed), "closedForm",
                   "mvEngine", q.is_constant() && q.at_zero().is_real() &&
                                   sum == observed));
    }
  }

  {
    LambdaSeries l1 = limit_lambda_g(mv, Partition{1}, N);
    for (int g = 1; g <= 2 && 2 * g <= N; ++g) {
      const TauPoly& q = l1.coeff(2 * g);
      Rat right = b_g(g);
      bool ok = q.is_constant() && q.at_zero().is_real() &&
                q.at_zero().re == right;
      push(sr, rep("b-recovery", {{"g", ts(g)}}, coeff_str(q),
                   rat_to_string(right), "mvEngine", "closedForm", ok));
    }
  }
  return sr;
}

// -------------------------------------------------------------------- cubic

SuiteResult run_cubic(const SuiteOptions& opts, SuiteContext& ctx) {
  SuiteResult sr;
  sr.suite = "cubic";
  int D = std::max(1, opts.max_weight.value_or(6));
  long N = std::max<long>(1, opts.order.value_or(6));
  int gmax = std::max(2, opts.max_genus.value_or(3));
  const MVSeries& mv = ctx.mv(std::max(D, 6), std::max<long>(N, 6));

  for (int d = 1; d <= D; ++d) {
    std::vector<SeriesMismatch> ms = tau_derivative_check(mv, d, N);
    push(sr, rep("mv-tau-derivative-at-zero", {{"d", ts(d)}, {"order", ts(N)}},
                 series_detail(ms), "0", "mvEngine", "closedForm",
                 ms.empty()));
  }

  int dmax = std::max(8, 2 * gmax + 2);
  const DddExtraction& dd = ctx.ddd(gmax, dmax);
  push(sr, rep("single-part-polynomiality",
               {{"maxGenus", ts(gmax)},
                {"dMax", ts(dmax)},
                {"residualPoints", ts(dd.residual_points)}},
               ts(static_cast<long>(dd.residual_failures.size())), "0",
               "mvEngine", "closedForm",
               dd.residual_failures.empty() && dd.residual_points >= 2));

  for (int g = 2; g <= gmax; ++g) {
    auto it = dd.cubic.find(g);
    if (it == dd.cubic.end()) {
      push(sr, rep("cubic-lambda-extraction", {{"g", ts(g)}},
                   "coefficient missing", rat_to_string(cubic_lambda(g)),
                   "mvEngine", "closedForm", false));
      continue;
    }
    Rat left = it->second / Rat(2 * g - 2);
    if (g % 2 == 0) left = -left;  // (-1)^{g-1}
    Rat right = cubic_lambda(g);
    push(sr, rep("cubic-lambda-extraction", {{"g", ts(g)}},
                 rat_to_string(left), rat_to_string(right), "mvEngine",
                 "closedForm", left == right));
  }
  return sr;
}

// ---------------------------------------------------------------- g-minus-1

SuiteResult run_g_minus_1(const SuiteOptions& opts, SuiteContext& ctx) {
  SuiteResult sr;
  sr.suite = "g-minus-1";
  int gext = std::max(1, opts.max_genus.value_or(3));
  int pair_bound = std::max(2, opts.max_genus.value_or(6));

  int dmax = std::max(8, 2 * gext + 2);
  const DddExtraction& dd = ctx.ddd(gext, dmax);
  for (int g = 1; g <= gext; ++g) {
    auto it = dd.g_minus_1.find(g);
    Rat right = g_minus_1_value(g);
    if (it == dd.g_minus_1.end()) {
      push(sr, rep("g-minus-1-extraction", {{"g", ts(g)}},
                   "coefficient missing", rat_to_string(right), "mvEngine",
                   "closedForm", false));
      continue;
    }
    Rat left = -it->second;
    push(sr, rep("g-minus-1-extraction", {{"g", ts(g)}}, rat_to_string(left),
                 rat_to_string(right), "mvEngine", "closedForm",
                 left == right));
  }

  for (int g1 = 1; g1 <= pair_bound; ++g1)
    for (int g2 = g1; g1 + g2 <= pair_bound; ++g2)
      push(sr, binomial_sum_lemmas(g1, g2)[0]);

  for (int g = 2; g <= pair_bound; ++g)
    push(sr, binomial_sum_lemmas(1, g - 1)[1]);

  for (int g1 = 0; g1 <= pair_bound; ++g1) {
    for (int g2 = std::max(g1, 1); g1 + g2 <= pair_bound; ++g2) {
      for (IdentityReport& r : power_convolution_reports(g1, g2, 8))
        push(sr, std::move(r));
    }
  }
  return sr;
}

}  // namespace

const MVSeries& SuiteContext::mv(int weight_bound, long lambda_order) {
  auto key = std::make_pair(weight_bound, lambda_order);
  auto it = mv_cache_.find(key);
  if (it == mv_cache_.end())
    it = mv_cache_
             .emplace(key, std::make_unique<MVSeries>(
                               build_R(weight_bound, lambda_order)))
             .first;
  return *it->second;
}

const PartitionSeries& SuiteContext::phi(int weight_bound, long order) {
  auto key = std::make_pair(weight_bound, order);
  auto it = phi_cache_.find(key);
  if (it == phi_cache_.end())
    it = phi_cache_
             .emplace(key, std::make_unique<PartitionSeries>(
                               burnside_phi(weight_bound, order)))
             .first;
  return *it->second;
}

const DddExtraction& SuiteContext::ddd(int genus_max, long order) {
  auto key = std::make_pair(genus_max, order);
  auto it = ddd_cache_.find(key);
  if (it == ddd_cache_.end())
    it = ddd_cache_
             .emplace(key, std::make_unique<DddExtraction>(ddd_extraction(
                               genus_max, static_cast<int>(order))))
             .first;
  return *it->second;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "bernoulli", "mumford", "mv-cutjoin", "elsv",
      "lambda-g",  "cubic",   "g-minus-1"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts,
                      SuiteContext& ctx) {
  if (name == "bernoulli") return run_bernoulli(opts);
  if (name == "mumford") return run_mumford(opts);
  if (name == "mv-cutjoin") return run_mv_cutjoin(opts, ctx);
  if (name == "elsv") return run_elsv(opts, ctx);
  if (name == "lambda-g") return run_lambda_g(opts, ctx);
  if (name == "cubic") return run_cubic(opts, ctx);
  if (name == "g-minus-1") return run_g_minus_1(opts, ctx);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& selection,
                                    const SuiteOptions& opts,
                                    SuiteContext& ctx) {
  std::vector<SuiteResult> out;
  if (selection == "all") {
    for (const std::string& n : suite_names())
      out.push_back(run_suite(n, opts, ctx));
  } else {
    out.push_back(run_suite(selection, opts, ctx));
  }
  return out;
}

}  // namespace hodgeint
