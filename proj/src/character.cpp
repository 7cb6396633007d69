#include "hodgeint/character.hpp"

#include <algorithm>
#include <mutex>

namespace hodgeint {

namespace {

constexpr int kMaxWeight = 16;  // long long character values are safe far beyond this

// Sum over removable border strips of size r: sign * chi(stripped nu, rest),
// where chi against `rest` is read from the already-built smaller table.
long long strip_sum(const Partition& nu, int r, const Partition& rest,
                    const CharacterTable& smaller) {
  int L = length(nu);
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = nu[i] + (L - 1 - i);  // strictly decreasing
  long long total = 0;
  for (int i = 0; i < L; ++i) {
    int t = beta[i] - r;
    if (t < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == t) occupied = true;
      if (beta[j] > t && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::sort(nb.rbegin(), nb.rend());
    Partition stripped;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) stripped.push_back(part);
    }
    long long sub = smaller.at(stripped, rest);
    total += (height % 2) ? -sub : sub;
  }
  return total;
}

}  // namespace

long long CharacterTable::at(const Partition& nu, const Partition& mu) const {
  int i = index_of(nu), j = index_of(mu);
  if (i < 0 || j < 0) throw std::invalid_argument("partition of wrong weight for this table");
  return chi[i][j];
}

int CharacterTable::index_of(const Partition& p) const {
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i] == p) return static_cast<int>(i);
  return -1;
}

const CharacterTable& character_table(int n) {
  if (n < 0 || n > kMaxWeight)
    throw std::invalid_argument("character table weight out of supported range");
  static std::vector<CharacterTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    CharacterTable t;
    t.n = m;
    t.parts = partitions_of(m);
    t.chi.assign(t.parts.size(), std::vector<long long>(t.parts.size(), 0));
    if (m == 0) {
      t.chi[0][0] = 1;  // chi of S_0: empty against empty
    } else {
      for (size_t j = 0; j < t.parts.size(); ++j) {
        const Partition& muj = t.parts[j];
        Partition rest(muj.begin() + 1, muj.end());
        const CharacterTable& smaller = cache[m - muj[0]];
        for (size_t i = 0; i < t.parts.size(); ++i)
          t.chi[i][j] = strip_sum(t.parts[i], muj[0], rest, smaller);
      }
    }
    cache.push_back(std::move(t));
  }
  return cache[n];
}

long long character(const Partition& nu, const Partition& mu) {
  if (weight(nu) != weight(mu))
    throw std::invalid_argument("character requires |nu| == |mu|");
  return character_table(weight(nu)).at(nu, mu);
}

}  // namespace hodgeint
