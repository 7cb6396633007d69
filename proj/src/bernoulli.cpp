#include "hodgeint/bernoulli.hpp"

#include <mutex>

namespace hodgeint {

const Rat& bernoulli(unsigned m) {
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    unsigned n = cache.size();
    Rat s(0);
    for (unsigned k = 0; k < n; ++k) s += Rat(binomial(n + 1, k)) * cache[k];
    cache.push_back(-s / Rat(n + 1));
  }
  return cache[m];
}

std::vector<Rat> bernoulli_by_series(unsigned m_max) {
  // (e^t - 1)/t has a_j = 1/(j+1)! and unit constant term; its inverse c
  // satisfies c_0 = 1, c_m = -sum_{j=1..m} a_j c_{m-j}.  B_m = m! c_m.
  std::vector<Rat> c(m_max + 1);
  c[0] = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    Rat s(0);
    for (unsigned j = 1; j <= m; ++j) {
      Rat aj(1);
      aj /= Rat(factorial(j + 1));
      s += aj * c[m - j];
    }
    c[m] = -s;
  }
  std::vector<Rat> b(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) b[m] = c[m] * Rat(factorial(m));
  return b;
}

}  // namespace hodgeint
