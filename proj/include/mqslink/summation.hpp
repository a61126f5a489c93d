#pragma once

#include <cstddef>
#include <span>

namespace mqs {

// Pairwise (cascade) summation: O(log n) error growth and a fixed association
// order, so results are bitwise reproducible regardless of how the terms were
// produced.
inline double pairwise_sum(std::span<const double> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace mqs
