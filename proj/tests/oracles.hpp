#pragma once

// Independent oracles used only by tests.  These deliberately avoid the
// library's own elimination and class machinery so that agreement is a
// two-implementation check.

#include <vector>

#include "necklace/cyclic.hpp"
#include "necklace/rational.hpp"

namespace oracle {

using necklace::Rat;

/// Textbook dense Gaussian elimination over the rationals.
inline size_t dense_rank(std::vector<std::vector<Rat>> a) {
  size_t rows = a.size();
  if (rows == 0) return 0;
  size_t cols = a[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Rat f = a[r][c] / a[rank][c];
      for (size_t c2 = c; c2 < cols; ++c2) a[r][c2] -= f * a[rank][c2];
    }
    ++rank;
  }
  return rank;
}

/// Convolution product of coefficient vectors (HPoly oracle).
inline std::vector<Rat> convolve(const std::vector<Rat>& p, const std::vector<Rat>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Rat> r(p.size() + q.size() - 1, Rat());
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

}  // namespace oracle
