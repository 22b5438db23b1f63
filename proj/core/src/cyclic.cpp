#include "necklace/cyclic.hpp"
#include "necklace/sign.hpp"

namespace necklace {

namespace {

void chain_add(Chain& out, Word w, Rat c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(std::move(w), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void vchain_add(VChain& out, VWord w, Rat c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(std::move(w), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

Chain hochschild_b(const Coideal& C, const Word& w) {
  Chain out;
  const int n = static_cast<int>(w.size());
  const int D = word_sdeg_sum(C, w);
  int prefix = 0;  // sum of shifted degrees before the current slot
  for (int i = 0; i < n; ++i) {
    const int a = w[i];
    // internal differential
    for (const auto& [j, c] : C.dC[a]) {
      Word v = w;
      v[i] = j;
      chain_add(out, std::move(v), pow_sign(prefix) == 1 ? c : -c);
    }
    // reduced-coproduct insertion
    for (const auto& [x, y, c] : C.dbar[a]) {
      Word v;
      v.reserve(n + 1);
      v.insert(v.end(), w.begin(), w.begin() + i);
      v.push_back(x);
      v.push_back(y);
      v.insert(v.end(), w.begin() + i + 1, w.end());
      int s = pow_sign(prefix + C.deg[x]);
      chain_add(out, std::move(v), s == 1 ? c : -c);
    }
    prefix += C.sdeg(a);
  }
  // wrap-around: split the first letter, its first factor moves to the end
  {
    const int a = w[0];
    for (const auto& [x, y, c] : C.dbar[a]) {
      Word v;
      v.reserve(n + 1);
      v.push_back(y);
      v.insert(v.end(), w.begin() + 1, w.end());
      v.push_back(x);
      int s = -pow_sign(C.sdeg(x) * (D - C.sdeg(x)));
      chain_add(out, std::move(v), s == 1 ? c : -c);
    }
  }
  return out;
}

CcChain cc_b(const Coideal& C, const CcChain& x) {
  Chain total;
  for (const auto& [rep, coeff] : x) {
    for (const auto& [u, cu] : n_expand(C, rep)) {
      for (const auto& [v, cv] : hochschild_b(C, u)) chain_add(total, v, coeff * cu * cv);
    }
  }
  return to_classes(C, total);
}

int vword_degree(const Coideal& C, const VWord& w) {
  int s = C.F->degree[w.head] - 1;
  for (int a : w.tail) s += C.sdeg(a);
  return s + 1;
}

VChain normalized_b(const Coideal& C, const VWord& w) {
  VChain out;
  const Frobenius& F = *C.F;
  const int n = static_cast<int>(w.tail.size());
  const int head_sdeg = F.degree[w.head] - 1;
  const int D = vword_degree(C, w) - 1;

  // head slot: internal differential and full-coproduct insertion
  for (const auto& [j, c] : F.d[w.head]) vchain_add(out, {j, w.tail}, c);
  for (const auto& [p, q, c] : F.coproduct[w.head]) {
    if (q == F.unit) continue;  // shifted slots live in C
    VWord v;
    v.head = p;
    v.tail.reserve(n + 1);
    v.tail.push_back(C.vtoc[q]);
    v.tail.insert(v.tail.end(), w.tail.begin(), w.tail.end());
    int s = pow_sign(F.degree[p]);
    vchain_add(out, std::move(v), s == 1 ? c : -c);
  }
  // shifted slots
  int prefix = head_sdeg;
  for (int i = 0; i < n; ++i) {
    const int a = w.tail[i];
    for (const auto& [j, c] : C.dC[a]) {
      VWord v = w;
      v.tail[i] = j;
      vchain_add(out, std::move(v), pow_sign(prefix) == 1 ? c : -c);
    }
    for (const auto& [x, y, c] : C.dbar[a]) {
      VWord v;
      v.head = w.head;
      v.tail.reserve(n + 1);
      v.tail.insert(v.tail.end(), w.tail.begin(), w.tail.begin() + i);
      v.tail.push_back(x);
      v.tail.push_back(y);
      v.tail.insert(v.tail.end(), w.tail.begin() + i + 1, w.tail.end());
      int s = pow_sign(prefix + C.deg[x]);
      vchain_add(out, std::move(v), s == 1 ? c : -c);
    }
    prefix += C.sdeg(a);
  }
  // wrap-around on the head
  for (const auto& [p, q, c] : F.coproduct[w.head]) {
    if (p == F.unit) continue;  // the moved factor lands in a shifted slot
    VWord v;
    v.head = q;
    v.tail.reserve(n + 1);
    v.tail.insert(v.tail.end(), w.tail.begin(), w.tail.end());
    v.tail.push_back(C.vtoc[p]);
    int psdeg = F.degree[p] - 1;
    int s = -pow_sign(psdeg * (D - psdeg));
    vchain_add(out, std::move(v), s == 1 ? c : -c);
  }
  return out;
}

VChain connes_B(const Coideal& C, const VWord& w) {
  VChain out;
  const Frobenius& F = *C.F;
  const Rat eps = F.counit[w.head];
  if (eps.is_zero() || w.tail.empty()) return out;
  Word cur = w.tail;
  int sign = 1;
  for (size_t k = 0; k < w.tail.size(); ++k) {
    VWord v;
    v.head = C.letters[cur.front()];
    v.tail.assign(cur.begin() + 1, cur.end());
    vchain_add(out, std::move(v), sign == 1 ? eps : -eps);
    auto [next, s] = cyclic_t(C, cur);
    cur = next;
    sign *= s;
  }
  return out;
}

VChain vchain_b(const Coideal& C, const VChain& x) {
  VChain out;
  for (const auto& [w, c] : x)
    for (const auto& [v, cv] : normalized_b(C, w)) vchain_add(out, v, c * cv);
  return out;
}

VChain vchain_B(const Coideal& C, const VChain& x) {
  VChain out;
  for (const auto& [w, c] : x)
    for (const auto& [v, cv] : connes_B(C, w)) vchain_add(out, v, c * cv);
  return out;
}

}  // namespace necklace
