#include <algorithm>
#include <sstream>

#include "necklace/cyclic.hpp"
#include "necklace/sign.hpp"

namespace necklace {

int word_sdeg_sum(const Coideal& C, const Word& w) {
  int s = 0;
  for (int a : w) s += C.sdeg(a);
  return s;
}

int word_degree(const Coideal& C, const Word& w) {
  return word_sdeg_sum(C, w) + 1;
}

std::pair<Word, int> cyclic_t(const Coideal& C, const Word& w) {
  if (w.size() <= 1) return {w, 1};
  Word r(w.begin() + 1, w.end());
  r.push_back(w.front());
  int rest = word_sdeg_sum(C, w) - C.sdeg(w.front());
  return {r, cross_sign(C.sdeg(w.front()), rest)};
}

CanonWord canonicalize(const Coideal& C, const Word& w) {
  // Walk the full rotation orbit.  A word recurring with the opposite
  // accumulated sign has a sign -1 stabilizer: the class is zero.
  CanonWord best{w, 1, false};
  std::map<Word, int> seen;
  Word cur = w;
  int sign = 1;
  for (size_t k = 0; k < w.size(); ++k) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      if (it->second != sign) {
        best.zero = true;
        return best;
      }
    } else {
      seen.emplace(cur, sign);
      if (cur < best.rep) {
        best.rep = cur;
        best.sign = sign;
      }
    }
    auto [next, s] = cyclic_t(C, cur);
    cur = next;
    sign *= s;
  }
  return best;
}

Chain n_expand(const Coideal& C, const Word& w) {
  Chain out;
  Word cur = w;
  int sign = 1;
  for (size_t k = 0; k < w.size(); ++k) {
    out[cur] += Rat(sign);
    auto [next, s] = cyclic_t(C, cur);
    cur = next;
    sign *= s;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

void add_class(const Coideal& C, CcChain& out, const Word& w, const Rat& c) {
  if (c.is_zero() || w.empty()) return;
  CanonWord cw = canonicalize(C, w);
  if (cw.zero) return;
  auto& slot = out[cw.rep];
  slot += cw.sign == 1 ? c : -c;
  if (slot.is_zero()) out.erase(cw.rep);
}

CcChain to_classes(const Coideal& C, const Chain& chain) {
  Chain residual = chain;
  CcChain out;
  while (!residual.empty()) {
    const Word w = residual.begin()->first;
    const Rat c = residual.begin()->second;
    CanonWord cw = canonicalize(C, w);
    if (cw.zero || cw.rep != w)
      throw std::runtime_error("to_classes: chain not in the image of N at " +
                               std::to_string(w.size()) + "-letter word");
    // Stabilizer multiplicity: how many rotations reproduce the word.
    Chain nw = n_expand(C, w);
    Rat mult = nw.at(w);
    Rat coeff = c / mult;
    for (const auto& [u, cu] : nw) {
      auto it = residual.find(u);
      Rat nv = (it == residual.end() ? Rat() : it->second) - coeff * cu;
      if (nv.is_zero()) {
        if (it != residual.end()) residual.erase(it);
      } else {
        residual[u] = nv;
      }
    }
    auto& slot = out[w];
    slot += coeff;
    if (slot.is_zero()) out.erase(w);
  }
  return out;
}

std::string word_str(const Coideal& C, const Word& w) {
  std::ostringstream os;
  os << "N[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "|";
    os << C.name_of(w[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace necklace
