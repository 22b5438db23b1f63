#include <algorithm>
#include <functional>

#include "necklace/cyclic.hpp"
#include "necklace/matrix.hpp"

namespace necklace {

namespace {

std::vector<Word> words_of_degree(const Coideal& C, int degree,
                                  std::optional<int> max_len) {
  std::vector<Word> out;
  if (C.letters.empty()) return out;
  if (!C.F->simply_connected && !max_len)
    throw UnboundedEnumeration(
        "algebra is not simply-connected: an explicit word-length cutoff is required");
  const int target = degree - 1;  // sum of shifted degrees
  const int L = max_len ? *max_len : (target >= 1 ? target : 0);
  int max_sdeg = 0;
  for (size_t c = 0; c < C.letters.size(); ++c)
    max_sdeg = std::max(max_sdeg, C.sdeg(static_cast<int>(c)));
  Word cur;
  std::function<void(int)> rec = [&](int sum) {
    if (!cur.empty() && sum == target) out.push_back(cur);
    if (static_cast<int>(cur.size()) == L) return;
    int remaining = L - static_cast<int>(cur.size());
    for (size_t c = 0; c < C.letters.size(); ++c) {
      int s = sum + C.sdeg(static_cast<int>(c));
      // prune: the best we can still add is max_sdeg per letter, the worst -1
      if (s - (remaining - 1) > target || s + (remaining - 1) * max_sdeg < target)
        continue;
      cur.push_back(static_cast<int>(c));
      rec(s);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> hochschild_basis(const Coideal& C, int degree,
                                   std::optional<int> max_len) {
  return words_of_degree(C, degree, max_len);
}

std::vector<Word> connes_complex_basis(const Coideal& C, int degree,
                                       std::optional<int> max_len) {
  std::vector<Word> out;
  for (auto& w : words_of_degree(C, degree, max_len)) {
    CanonWord cw = canonicalize(C, w);
    if (!cw.zero && cw.rep == w) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::pair<int, size_t>> homology_ranks(const Coideal& C, ComplexKind kind,
                                                   int lo, int hi,
                                                   std::optional<int> max_len) {
  const bool cyclic = kind == ComplexKind::Cyclic;
  auto basis = [&](int d) {
    return cyclic ? connes_complex_basis(C, d, max_len) : hochschild_basis(C, d, max_len);
  };

  // boundary rank from degree d to degree d-1
  auto boundary_rank = [&](int d, const std::vector<Word>& dom,
                           const std::vector<Word>& cod) -> size_t {
    if (dom.empty() || cod.empty()) return 0;
    std::map<Word, size_t> row;
    for (size_t i = 0; i < cod.size(); ++i) row[cod[i]] = i;
    SparseMat M(cod.size(), dom.size());
    for (size_t j = 0; j < dom.size(); ++j) {
      if (cyclic) {
        CcChain img = cc_b(C, CcChain{{dom[j], Rat(1)}});
        for (const auto& [w, c] : img) {
          auto it = row.find(w);
          if (it == row.end()) {
            if (max_len && static_cast<int>(w.size()) > *max_len) continue;  // truncated mode
            throw std::runtime_error("homology_ranks: boundary left the enumerated basis");
          }
          M.add(it->second, j, c);
        }
      } else {
        for (const auto& [w, c] : hochschild_b(C, dom[j])) {
          auto it = row.find(w);
          if (it == row.end()) {
            if (max_len && static_cast<int>(w.size()) > *max_len) continue;
            throw std::runtime_error("homology_ranks: boundary left the enumerated basis");
          }
          M.add(it->second, j, c);
        }
      }
    }
    (void)d;
    return M.rank_and_kernel().rank;
  };

  std::vector<std::pair<int, size_t>> table;
  std::vector<Word> below = basis(lo - 1), here = basis(lo);
  for (int d = lo; d <= hi; ++d) {
    std::vector<Word> above = basis(d + 1);
    size_t r_out = boundary_rank(d, here, below);
    size_t r_in = boundary_rank(d + 1, above, here);
    table.emplace_back(d, here.size() - r_out - r_in);
    below = std::move(here);
    here = std::move(above);
  }
  return table;
}

}  // namespace necklace
