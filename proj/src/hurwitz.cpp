#include "hodgeint/hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hodgeint/character.hpp"

namespace hodgeint {

long hurwitz_r(int g, const Partition& mu) {
  if (g < 0) throw std::invalid_argument("hurwitz_r: negative genus");
  if (mu.empty()) throw std::invalid_argument("hurwitz_r: empty partition");
  return 2L * g - 2 + weight(mu) + length(mu);
}

PartitionSeries burnside_phi(int weight_bound, long order) {
  PartitionSeries z(weight_bound);
  z.set(Partition{}, LambdaSeries::one(LambdaSeries::kInf));
  for (int w = 1; w <= weight_bound; ++w) {
    const auto nus = partitions_of(w);
    const CharacterTable& tbl = character_table(w);
    const Rat w_fact(factorial(w));

    // One exponential factor exp(kappa_nu * lambda / 2) * dim(nu)/w! per nu,
    // shared across every mu of this weight.
    std::vector<LambdaSeries> t_nu;
    t_nu.reserve(nus.size());
    for (const auto& nu : nus) {
      PartitionStats st = partition_stats(nu);
      Rat half_kappa = Rat(st.kappa) / 2;
      LambdaSeries e = LambdaSeries::zero(order);
      Rat c(1);
      for (long n = 0; n <= order; ++n) {
        if (n > 0) c *= half_kappa / Rat(static_cast<unsigned long>(n));
        if (c != 0) e += LambdaSeries::monomial(TauPoly(GaussRat(c)), n, order);
      }
      t_nu.push_back(e.scaled(GaussRat{Rat(st.dim) / w_fact, Rat(0)}));
    }

    for (const auto& mu : nus) {
      Rat z_mu(partition_stats(mu).z);
      LambdaSeries s = LambdaSeries::zero(order);
      for (std::size_t a = 0; a < nus.size(); ++a) {
        long long chi = tbl.at(nus[a], mu);
        if (chi == 0) continue;
        s += t_nu[a].scaled(GaussRat(Rat(static_cast<long>(chi)) / z_mu));
      }
      z.set(mu, s);
    }
  }
  return ps_log(z);
}

PartitionSeries cutjoin_phi(int weight_bound, long order) {
  PartitionSeries seed(weight_bound);
  seed.set(Partition{1}, LambdaSeries::one(order));
  PartitionSeries phi = seed;
  // Each pass fixes one more lambda order, so `order` passes suffice.
  for (long k = 1; k <= order; ++k) {
    PartitionSeries flow = ps_lambda_integral(
        ps_scaled(cut_join_apply(phi), GaussRat{Rat(1, 2), Rat(0)}));
    phi = ps_add(seed, flow);
  }
  return phi;
}

Rat hurwitz_from_phi(const PartitionSeries& phi, int g, const Partition& mu) {
  long r = hurwitz_r(g, mu);
  if (r < 0) return Rat(0);
  const LambdaSeries* s = phi.coeff_ptr(mu);
  if (!s) return Rat(0);
  TauPoly q = s->coeff(r);  // throws past the series' validated order
  if (!q.is_constant())
    throw std::domain_error("hurwitz_from_phi: coefficient depends on tau");
  GaussRat c = q.at_zero();
  if (!c.is_real())
    throw std::domain_error("hurwitz_from_phi: coefficient is not real");
  return c.re * Rat(factorial(static_cast<unsigned long>(r)));
}

bool oracle_feasible(int g, const Partition& mu) {
  if (g < 0 || mu.empty()) return false;
  return weight(mu) <= 6 && hurwitz_r(g, mu) <= 7;
}

namespace {

int cycle_count(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  unsigned seen = 0;
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (1u << j)); j = p[j]) seen |= (1u << j);
  }
  return cycles;
}

struct Dsu {
  int parent[8];
  void init(int n) { std::iota(parent, parent + n, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct OracleSearch {
  int d = 0;
  long r = 0;
  std::vector<int> sigma;              // fixed representative of type mu
  std::vector<int> cur;                // t_k ... t_1 sigma as a function
  std::vector<int> pos;                // inverse of cur
  std::vector<std::pair<int, int>> ts; // transpositions on the stack
  long long count = 0;

  bool transitive() const {
    Dsu dsu;
    dsu.init(d);
    for (int i = 0; i < d; ++i) dsu.unite(i, sigma[i]);
    for (const auto& [a, b] : ts) dsu.unite(a, b);
    int root = dsu.find(0);
    for (int i = 1; i < d; ++i)
      if (dsu.find(i) != root) return false;
    return true;
  }

  void dfs(long k) {
    int dist = d - cycle_count(cur);
    if (dist > r - k) return;
    if (k == r) {
      if (dist == 0 && transitive()) ++count;
      return;
    }
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        // Left-multiplying by (a b) swaps the values a and b in cur.
        int xa = pos[a], xb = pos[b];
        cur[xa] = b;
        cur[xb] = a;
        pos[a] = xb;
        pos[b] = xa;
        ts.emplace_back(a, b);
        dfs(k + 1);
        ts.pop_back();
        cur[xa] = a;
        cur[xb] = b;
        pos[a] = xa;
        pos[b] = xb;
      }
    }
  }
};

}  // namespace

Rat oracle_hurwitz(int g, const Partition& mu) {
  if (!oracle_feasible(g, mu))
    throw std::invalid_argument("oracle_hurwitz: outside the feasible window");
  int d = weight(mu);
  long r = hurwitz_r(g, mu);
  if (r < 0) return Rat(0);

  OracleSearch s;
  s.d = d;
  s.r = r;
  s.sigma.resize(d);
  int base = 0;
  for (int part : mu) {
    for (int i = 0; i < part; ++i) s.sigma[base + i] = base + (i + 1) % part;
    base += part;
  }
  s.cur = s.sigma;
  s.pos.resize(d);
  for (int i = 0; i < d; ++i) s.pos[s.cur[i]] = i;
  s.dfs(0);

  return Rat(static_cast<long>(s.count)) / Rat(partition_stats(mu).z);
}

bool GenusPartition::operator<(const GenusPartition& o) const {
  if (g != o.g) return g < o.g;
  return PartitionLess{}(mu, o.mu);
}

bool GenusPartition::operator==(const GenusPartition& o) const {
  return g == o.g && mu == o.mu;
}

namespace {

HurwitzTable table_from_phi(const PartitionSeries& phi, int weight_bound,
                            int genus_max, const std::string& method) {
  HurwitzTable t;
  for (int g = 0; g <= genus_max; ++g)
    for (int w = 1; w <= weight_bound; ++w)
      for (const auto& mu : partitions_of(w))
        t.entries[{g, mu}] =
            HurwitzEntry{hurwitz_from_phi(phi, g, mu), hurwitz_r(g, mu), method};
  return t;
}

}  // namespace

HurwitzTable burnside_hurwitz(int weight_bound, int genus_max) {
  long order = 2L * genus_max - 2 + 2L * weight_bound;  // largest r in range
  if (order < 0) order = 0;
  return table_from_phi(burnside_phi(weight_bound, order), weight_bound,
                        genus_max, "burnside");
}

HurwitzTable cutjoin_hurwitz(int weight_bound, int genus_max) {
  long order = 2L * genus_max - 2 + 2L * weight_bound;
  if (order < 0) order = 0;
  return table_from_phi(cutjoin_phi(weight_bound, order), weight_bound,
                        genus_max, "cutjoin");
}

HurwitzTable oracle_hurwitz_table(int weight_bound, int genus_max) {
  HurwitzTable t;
  for (int g = 0; g <= genus_max; ++g)
    for (int w = 1; w <= weight_bound; ++w)
      for (const auto& mu : partitions_of(w)) {
        if (!oracle_feasible(g, mu)) continue;
        t.entries[{g, mu}] =
            HurwitzEntry{oracle_hurwitz(g, mu), hurwitz_r(g, mu), "oracle"};
      }
  return t;
}

LinearHodgeValue elsv_invert_one(int g, const Partition& mu, const Rat& h) {
  long r = hurwitz_r(g, mu);
  LinearHodgeValue v;
  v.scaled = h / Rat(factorial(static_cast<unsigned long>(std::max(r, 0L))));
  Rat peel(partition_stats(mu).aut);
  for (int part : mu)
    peel *= Rat(factorial(part)) /
            rat_pow(Rat(part), static_cast<long>(part));
  v.integral = v.scaled * peel;
  v.stable = 2 * g - 2 + static_cast<int>(length(mu)) > 0;
  return v;
}

LinearHodgeTable elsv_invert(const HurwitzTable& table) {
  LinearHodgeTable out;
  for (const auto& [key, entry] : table.entries)
    out.entries[key] = elsv_invert_one(key.g, key.mu, entry.value);
  return out;
}

}  // namespace hodgeint
