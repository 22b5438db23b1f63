#include "necklace/matrix.hpp"

#include <algorithm>
#include <vector>

namespace necklace {

void SparseMat::add(size_t r, size_t c, const Rat& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(r, c);
  auto it = e_.find(key);
  if (it == e_.end()) {
    e_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  }
}

Rat SparseMat::get(size_t r, size_t c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? Rat() : it->second;
}

RankResult SparseMat::rank_and_kernel() const {
  // Row-major working copy.
  std::vector<std::map<size_t, Rat>> rows(rows_);
  for (const auto& [rc, v] : e_) rows[rc.first][rc.second] = v;

  size_t rank = 0;
  std::vector<bool> used(rows_, false);
  for (size_t col = 0; col < cols_; ++col) {
    // Pick the sparsest available row with a pivot in this column.
    size_t pivot = rows_;
    for (size_t r = 0; r < rows_; ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second.is_zero()) continue;
      if (pivot == rows_ || rows[r].size() < rows[pivot].size()) pivot = r;
    }
    if (pivot == rows_) continue;
    used[pivot] = true;
    ++rank;
    const Rat pv = rows[pivot][col];
    for (size_t r = 0; r < rows_; ++r) {
      if (used[r] || r == pivot) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second.is_zero()) continue;
      const Rat factor = it->second / pv;
      for (const auto& [c2, v2] : rows[pivot]) {
        auto jt = rows[r].find(c2);
        if (jt == rows[r].end()) {
          Rat nv = -(factor * v2);
          if (!nv.is_zero()) rows[r].emplace(c2, std::move(nv));
        } else {
          jt->second -= factor * v2;
          if (jt->second.is_zero()) rows[r].erase(jt);
        }
      }
    }
  }
  return {rank, cols_ - rank};
}

}  // namespace necklace
