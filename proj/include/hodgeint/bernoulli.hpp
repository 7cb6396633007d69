#pragma once

#include "hodgeint/rational.hpp"

namespace hodgeint {

// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ...; memoized.
// Defined through sum_{k=0}^{m} C(m+1,k) B_k = 0  (m > 0).
const Rat& bernoulli(unsigned m);

// Independent route: coefficients of t/(e^t - 1) by exact series division,
// B_m = m! * [t^m]. Used to cross-check the recursion.
std::vector<Rat> bernoulli_by_series(unsigned m_max);

}  // namespace hodgeint
