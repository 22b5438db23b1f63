#include "necklace/lie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "necklace/sign.hpp"

namespace necklace {

namespace {

void tensor_add(TensorSq& out, std::pair<Word, Word> key, Rat c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

/// All rotations of w with the accumulated t-sign.
std::vector<std::pair<Word, int>> rotations(const Coideal& C, const Word& w) {
  std::vector<std::pair<Word, int>> out;
  out.reserve(w.size());
  Word cur = w;
  int sign = 1;
  for (size_t k = 0; k < w.size(); ++k) {
    out.emplace_back(cur, sign);
    auto [next, s] = cyclic_t(C, cur);
    cur = next;
    sign *= s;
  }
  return out;
}

int m_of(const Coideal& C) { return C.F->m; }

}  // namespace

int l_degree(const Coideal& C, const Word& w) {
  return word_degree(C, w) - (m_of(C) - 1);
}

CcChain bracket(const Coideal& C, const Word& u, const Word& v) {
  CcChain out;
  const int m = m_of(C);
  for (const auto& [x, sx] : rotations(C, u)) {
    const Rat* row = nullptr;
    (void)row;
    for (const auto& [y, sy] : rotations(C, v)) {
      Rat p = C.pair(x[0], y[0]);
      if (p.is_zero()) continue;
      if (x.size() == 1 && y.size() == 1) continue;  // empty splice drops
      // Move the first letter of x past the rest of x, then contract it
      // with the first letter of y where the two meet.
      int rest = word_sdeg_sum(C, x) - C.sdeg(x[0]);
      int e = C.sdeg(x[0]) * rest + (m - 2) * rest;
      Word spliced;
      spliced.reserve(x.size() + y.size() - 2);
      spliced.insert(spliced.end(), x.begin() + 1, x.end());
      spliced.insert(spliced.end(), y.begin() + 1, y.end());
      Rat coeff = p;
      if (sx * sy * pow_sign(e) < 0) coeff = -coeff;
      add_class(C, out, spliced, coeff);
    }
  }
  return out;
}

CcChain bracket_chains(const Coideal& C, const CcChain& x, const CcChain& y) {
  CcChain out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y)
      for (const auto& [w, cw] : bracket(C, u, v)) {
        auto& slot = out[w];
        slot += cu * cv * cw;
        if (slot.is_zero()) out.erase(w);
      }
  return out;
}

TensorSq cobracket(const Coideal& C, const Word& u) {
  TensorSq out;
  const int m = m_of(C);
  if (u.size() < 4) {
    // Splitting needs both sides nonempty: at least two letters per arc
    // plus the contracted pair.
    return out;
  }
  for (const auto& [z, sz] : rotations(C, u)) {
    const int n = static_cast<int>(z.size());
    int between = 0;  // shifted degree between the contracted letters
    for (int j = 1; j < n; ++j) {
      // pair (z[0], z[j]); inner arc z[1..j-1], outer arc z[j+1..n-1]
      if (j > 1) between += C.sdeg(z[j - 1]);
      Rat p = C.pair(z[0], z[j]);
      if (p.is_zero()) continue;
      if (j == 1 || j == n - 1) continue;  // an empty side drops the term
      Word inner(z.begin() + 1, z.begin() + j);
      Word outer(z.begin() + j + 1, z.end());
      int e = C.sdeg(z[0]) * between + (m - 2) * between +
              word_sdeg_sum(C, inner) * word_sdeg_sum(C, outer);
      CanonWord co = canonicalize(C, outer);
      CanonWord ci = canonicalize(C, inner);
      if (co.zero || ci.zero) continue;
      Rat coeff = p;
      if (sz * pow_sign(e) * co.sign * ci.sign < 0) coeff = -coeff;
      tensor_add(out, {co.rep, ci.rep}, coeff);
    }
  }
  return out;
}

TensorSq cobracket_chain(const Coideal& C, const CcChain& x) {
  TensorSq out;
  for (const auto& [u, cu] : x)
    for (const auto& [k, c] : cobracket(C, u)) tensor_add(out, k, cu * c);
  return out;
}

std::string cc_str(const Coideal& C, const CcChain& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << word_str(C, w);
  }
  return os.str();
}

std::string tensor_str(const Coideal& C, const TensorSq& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << word_str(C, k.first) << "(x)" << word_str(C, k.second);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Identity suite

namespace {

using Tensor3 = std::map<std::tuple<Word, Word, Word>, Rat>;

void t3_add(Tensor3& out, std::tuple<Word, Word, Word> k, Rat c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

/// ad_a on a tensor square: {a,U} (x) V + (-1)^{|a||U|} U (x) {a,V}.
TensorSq ad_tensor(const Coideal& C, const Word& a, const TensorSq& t) {
  TensorSq out;
  for (const auto& [k, c] : t) {
    const auto& [U, V] = k;
    for (const auto& [w, cw] : bracket(C, a, U)) tensor_add(out, {w, V}, c * cw);
    int s = cross_sign(l_degree(C, a), l_degree(C, U));
    for (const auto& [w, cw] : bracket(C, a, V))
      tensor_add(out, {U, w}, s == 1 ? c * cw : -(c * cw));
  }
  return out;
}

}  // namespace

std::vector<Word> basis_classes(const Coideal& C, int max_len) {
  std::vector<Word> out;
  Word cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) {
      CanonWord cw = canonicalize(C, cur);
      if (!cw.zero && cw.rep == cur) out.push_back(cur);
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (size_t c = 0; c < C.letters.size(); ++c) {
      cur.push_back(static_cast<int>(c));
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

Report check_lie_bialgebra(const Coideal& C, int B) {
  Report rep;
  rep.title = "lie bialgebra identities: " + C.F->name +
              " (exhaustive, max word length " + std::to_string(B) + ")";

  std::vector<Word> cls = basis_classes(C, B + 1);
  auto len = [](const Word& w) { return static_cast<int>(w.size()); };

  // (a) graded antisymmetry, each factor of length <= B
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      if (!ok) break;
      if (len(x) > B) continue;
      for (const auto& y : cls) {
        if (len(y) > B) continue;
        // {x,y} + (-1)^{|x||y|} {y,x} = 0
        CcChain lhs = bracket(C, x, y);
        CcChain rhs = bracket(C, y, x);
        int s = cross_sign(l_degree(C, x), l_degree(C, y));
        CcChain sum = lhs;
        for (const auto& [k, c] : rhs) {
          auto& slot = sum[k];
          slot += s == 1 ? c : -c;
          if (slot.is_zero()) sum.erase(k);
        }
        if (!sum.empty()) {
          ok = false;
          w = word_str(C, x) + ", " + word_str(C, y);
          break;
        }
      }
    }
    rep.add("bracket graded antisymmetric", ok, w);
  }

  // (b) Jacobi, combined length <= B + 3
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      if (!ok) break;
      for (const auto& y : cls) {
        if (!ok) break;
        for (const auto& z : cls) {
          if (len(x) + len(y) + len(z) > B + 3) continue;
          CcChain lhs = bracket_chains(C, CcChain{{x, Rat(1)}}, bracket(C, y, z));
          CcChain r1 = bracket_chains(C, bracket(C, x, y), CcChain{{z, Rat(1)}});
          int s = cross_sign(l_degree(C, x), l_degree(C, y));
          CcChain r2 = bracket_chains(C, CcChain{{y, Rat(1)}}, bracket(C, x, z));
          for (const auto& [k, c] : r1) {
            auto& slot = lhs[k];
            slot -= c;
            if (slot.is_zero()) lhs.erase(k);
          }
          for (const auto& [k, c] : r2) {
            auto& slot = lhs[k];
            slot -= s == 1 ? c : -c;
            if (slot.is_zero()) lhs.erase(k);
          }
          if (!lhs.empty()) {
            ok = false;
            w = word_str(C, x) + ", " + word_str(C, y) + ", " + word_str(C, z);
            break;
          }
        }
      }
    }
    rep.add("Jacobi identity", ok, w);
  }

  // (c) co-antisymmetry, single length <= B + 1
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      TensorSq d = cobracket(C, x);
      TensorSq sum = d;
      for (const auto& [k, c] : d) {
        int s = cross_sign(l_degree(C, k.first), l_degree(C, k.second));
        tensor_add(sum, {k.second, k.first}, s == 1 ? c : -c);
      }
      if (!sum.empty()) {
        ok = false;
        w = word_str(C, x);
        break;
      }
    }
    rep.add("cobracket graded co-antisymmetric", ok, w);
  }

  // (d) co-Jacobi, single length <= B + 1
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      Tensor3 acc3;
      TensorSq d = cobracket(C, x);
      for (const auto& [k, c] : d) {
        TensorSq dd = cobracket(C, k.first);
        for (const auto& [k2, c2] : dd) {
          // (delta (x) id) delta, then the cyclic permutations
          const Word &A = k2.first, &B2 = k2.second, &Cw = k.second;
          Rat base = c * c2;
          int la = l_degree(C, A), lb = l_degree(C, B2), lc = l_degree(C, Cw);
          t3_add(acc3, {A, B2, Cw}, base);
          // tau: a(x)b(x)c -> c(x)a(x)b with Koszul sign
          int s1 = cross_sign(lc, la + lb);
          t3_add(acc3, {Cw, A, B2}, s1 == 1 ? base : -base);
          int s2 = cross_sign(lb + lc, la);
          t3_add(acc3, {B2, Cw, A}, s2 == 1 ? base : -base);
        }
      }
      if (!acc3.empty()) {
        ok = false;
        w = word_str(C, x);
        break;
      }
    }
    rep.add("co-Jacobi identity", ok, w);
  }

  // (e) Drinfeld compatibility, combined length <= B + 2
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      if (!ok) break;
      for (const auto& y : cls) {
        if (len(x) + len(y) > B + 2) continue;
        TensorSq lhs = cobracket_chain(C, bracket(C, x, y));
        TensorSq rhs = ad_tensor(C, x, cobracket(C, y));
        int s = -cross_sign(l_degree(C, x), l_degree(C, y));
        for (const auto& [k, c] : ad_tensor(C, y, cobracket(C, x)))
          tensor_add(rhs, k, s == 1 ? c : -c);
        for (const auto& [k, c] : rhs) tensor_add(lhs, k, -c);
        if (!lhs.empty()) {
          ok = false;
          w = word_str(C, x) + ", " + word_str(C, y);
          break;
        }
      }
    }
    rep.add("Drinfeld compatibility", ok, w);
  }

  // (f) involutivity, single length <= B + 1
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      CcChain sum;
      for (const auto& [k, c] : cobracket(C, x)) {
        for (const auto& [u, cu] : bracket(C, k.first, k.second)) {
          auto& slot = sum[u];
          slot += c * cu;
          if (slot.is_zero()) sum.erase(u);
        }
      }
      if (!sum.empty()) {
        ok = false;
        w = word_str(C, x);
        break;
      }
    }
    rep.add("involutivity", ok, w);
  }

  // (g1) b is a derivation of the bracket, combined length <= B + 1
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      if (!ok) break;
      for (const auto& y : cls) {
        if (len(x) + len(y) > B + 1) continue;
        CcChain lhs = cc_b(C, bracket(C, x, y));
        CcChain rhs = bracket_chains(C, cc_b(C, CcChain{{x, Rat(1)}}), CcChain{{y, Rat(1)}});
        int s = pow_sign(l_degree(C, x));
        for (const auto& [k, c] : bracket_chains(C, CcChain{{x, Rat(1)}},
                                                 cc_b(C, CcChain{{y, Rat(1)}}))) {
          auto& slot = rhs[k];
          slot += s == 1 ? c : -c;
          if (slot.is_zero()) rhs.erase(k);
        }
        for (const auto& [k, c] : rhs) {
          auto& slot = lhs[k];
          slot -= c;
          if (slot.is_zero()) lhs.erase(k);
        }
        if (!lhs.empty()) {
          ok = false;
          w = word_str(C, x) + ", " + word_str(C, y);
          break;
        }
      }
    }
    rep.add("b is a derivation of the bracket", ok, w);
  }

  // (g2) b is a coderivation of the cobracket, single length <= B + 1
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      TensorSq lhs = cobracket_chain(C, cc_b(C, CcChain{{x, Rat(1)}}));
      TensorSq rhs;
      for (const auto& [k, c] : cobracket(C, x)) {
        for (const auto& [u, cu] : cc_b(C, CcChain{{k.first, Rat(1)}}))
          tensor_add(rhs, {u, k.second}, c * cu);
        int s = pow_sign(l_degree(C, k.first));
        for (const auto& [u, cu] : cc_b(C, CcChain{{k.second, Rat(1)}}))
          tensor_add(rhs, {k.first, u}, s == 1 ? c * cu : -(c * cu));
      }
      for (const auto& [k, c] : rhs) tensor_add(lhs, k, -c);
      if (!lhs.empty()) {
        ok = false;
        w = word_str(C, x);
        break;
      }
    }
    rep.add("b is a coderivation of the cobracket", ok, w);
  }

  return rep;
}

}  // namespace necklace
