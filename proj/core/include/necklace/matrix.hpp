#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "necklace/rational.hpp"

namespace necklace {

struct RankResult {
  size_t rank = 0;
  size_t kernel_dim = 0;
};

/// Sparse matrix over the rationals; only nonzero entries are stored.
class SparseMat {
public:
  SparseMat(size_t rows, size_t cols) : rows_(rows), cols_(cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  void add(size_t r, size_t c, const Rat& v);
  Rat get(size_t r, size_t c) const;
  const std::map<std::pair<size_t, size_t>, Rat>& entries() const { return e_; }

  /// Exact rank and kernel dimension via sparse fraction-preserving
  /// Gaussian elimination.  rank + kernel_dim == cols always.
  RankResult rank_and_kernel() const;

private:
  size_t rows_, cols_;
  std::map<std::pair<size_t, size_t>, Rat> e_;
};

}  // namespace necklace
