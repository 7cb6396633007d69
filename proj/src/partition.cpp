#include "hodgeint/partition.hpp"

#include <algorithm>

namespace hodgeint {

int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {
void extend(std::vector<Partition>& out, Partition& cur, int rest, int max_part) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend(out, cur, rest - p, p);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of negative weight");
  std::vector<Partition> out;
  Partition cur;
  extend(out, cur, n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int w = 0; w <= n; ++w) {
    auto pw = partitions_of(w);
    out.insert(out.end(), pw.begin(), pw.end());
  }
  return out;
}

PartitionStats partition_stats(const Partition& nu) {
  PartitionStats st;
  st.z = 1;
  st.aut = 1;
  for (const auto& [part, m] : part_multiplicities(nu)) {
    Int f = factorial(m);
    st.aut *= f;
    st.z *= f;
    for (int j = 0; j < m; ++j) st.z *= part;
  }
  st.kappa = 0;
  for (size_t i = 0; i < nu.size(); ++i)
    st.kappa += static_cast<long>(nu[i]) * (nu[i] - 2 * static_cast<long>(i + 1) + 1);
  Partition conj = conjugate(nu);
  for (size_t i = 0; i < nu.size(); ++i)
    for (int j = 0; j < nu[i]; ++j)
      st.hooks.push_back(nu[i] - j + conj[j] - static_cast<int>(i) - 1);
  std::sort(st.hooks.rbegin(), st.hooks.rend());
  st.dim = factorial(weight(nu));
  for (int h : st.hooks) st.dim /= h;
  return st;
}

Partition conjugate(const Partition& nu) {
  Partition c;
  if (nu.empty()) return c;
  c.resize(nu[0]);
  for (int j = 0; j < nu[0]; ++j) {
    int cnt = 0;
    for (int part : nu)
      if (part > j) ++cnt;
    c[j] = cnt;
  }
  return c;
}

Int conjugacy_class_size(const Partition& mu) {
  return factorial(weight(mu)) / partition_stats(mu).z;
}

int multiplicity(const Partition& p, int part) {
  int m = 0;
  for (int x : p) m += (x == part);
  return m;
}

std::map<int, int> part_multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

Partition remove_one_part(const Partition& p, int part) {
  Partition r;
  r.reserve(p.size() - 1);
  bool removed = false;
  for (int x : p) {
    if (!removed && x == part) {
      removed = true;
      continue;
    }
    r.push_back(x);
  }
  if (!removed) throw std::invalid_argument("remove_one_part: part not present");
  return r;
}

Partition with_part(Partition p, int part) {
  p.push_back(part);
  std::sort(p.rbegin(), p.rend());
  return p;
}

Partition merged(const Partition& a, const Partition& b) {
  Partition r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.rbegin(), r.rend());
  return r;
}

std::string partition_key(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition partition_from_key(const std::string& s) {
  Partition p;
  if (s.empty()) return p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find_first_of(".,", pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw std::invalid_argument("bad partition key: " + s);
    int v = std::stoi(tok);
    if (v <= 0) throw std::invalid_argument("partition parts must be positive: " + s);
    p.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (!std::is_sorted(p.rbegin(), p.rend()))
    throw std::invalid_argument("partition parts must be weakly decreasing: " + s);
  return p;
}

}  // namespace hodgeint
