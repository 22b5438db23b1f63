#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "necklace/matrix.hpp"
#include "necklace/quant.hpp"
#include "necklace/sign.hpp"

namespace necklace {

namespace {

void qt_add(QTensor& out, std::vector<QMonomial> key, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void qel_add(QElement& out, const QMonomial& M, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(M, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

int comp_parity(const Coideal& C, const HWord& w) {
  int s = 0;
  for (const auto& l : w) s += C.sdeg(l.letter);
  return (s + C.F->m) & 1;
}

struct FlatView {
  std::vector<int> letter;   // per flat position
  std::vector<int> height;
  std::vector<int> comp;     // owning component
  std::vector<int> succ;     // cyclic successor within the component
  int positions = 0;
};

FlatView flatten(const QMonomial& M) {
  FlatView v;
  int base = 0;
  for (size_t i = 0; i < M.comps.size(); ++i) {
    const int p = static_cast<int>(M.comps[i].size());
    for (int j = 0; j < p; ++j) {
      v.letter.push_back(M.comps[i][j].letter);
      v.height.push_back(M.comps[i][j].height);
      v.comp.push_back(static_cast<int>(i));
      v.succ.push_back(base + (j + 1) % p);
    }
    base += p;
  }
  v.positions = base;
  return v;
}

void involutions(const std::vector<int>& elems, std::vector<std::pair<int, int>>& cur,
                 const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  if (elems.empty()) {
    emit(cur);
    return;
  }
  int first = elems[0];
  for (size_t k = 1; k < elems.size(); ++k) {
    std::vector<int> rest;
    for (size_t j = 1; j < elems.size(); ++j)
      if (j != k) rest.push_back(elems[j]);
    cur.emplace_back(first, elems[k]);
    involutions(rest, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Labeling> enumerate_labelings(const Coideal& C, const QMonomial& M, int n) {
  (void)C;
  if (n < 2) throw std::invalid_argument("enumerate_labelings: n must be at least 2");
  FlatView v = flatten(M);
  const int p = v.positions;
  std::vector<Labeling> out;

  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<int> I;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) I.push_back(i);

    std::vector<std::pair<int, int>> cur;
    involutions(I, cur, [&](const std::vector<std::pair<int, int>>& pairs) {
      std::vector<int> phi(p, -1);
      for (auto [a, b] : pairs) {
        phi[a] = b;
        phi[b] = a;
      }
      // q-map and its orbits; f is constant on them
      std::vector<int> q(p);
      for (int i = 0; i < p; ++i) q[i] = phi[i] < 0 ? v.succ[i] : v.succ[phi[i]];
      std::vector<int> orbit(p, -1);
      int norb = 0;
      for (int i = 0; i < p; ++i) {
        if (orbit[i] >= 0) continue;
        int j = i;
        while (orbit[j] < 0) {
          orbit[j] = norb;
          j = q[j];
        }
        ++norb;
      }
      // all slot assignments per orbit, filtered by the height condition
      std::vector<int> val(norb, 1);
      while (true) {
        bool ok = true;
        for (int i = 0; i < p && ok; ++i) {
          if (phi[i] < 0) continue;
          bool fgt = val[orbit[i]] > val[orbit[phi[i]]];
          bool hgt = v.height[i] > v.height[phi[i]];
          if (fgt != hgt) ok = false;
        }
        if (ok) {
          Labeling L;
          L.in_I.assign(p, 0);
          for (int i : I) L.in_I[i] = 1;
          L.phi = phi;
          L.f.resize(p);
          for (int i = 0; i < p; ++i) L.f[i] = val[orbit[i]];
          out.push_back(std::move(L));
        }
        int k = norb - 1;
        while (k >= 0 && val[k] == n) {
          val[k] = 1;
          --k;
        }
        if (k < 0) break;
        ++val[k];
      }
    });
  }
  return out;
}

QTensor coproduct_n(const Coideal& C, const QElement& x, int n) {
  if (n < 2) throw std::invalid_argument("coproduct_n: n must be at least 2");
  QTensor out;
  for (const auto& [M, coeff] : x) {
    if (M.empty()) {
      qt_add(out, std::vector<QMonomial>(n), coeff);
      continue;
    }
    FlatView v = flatten(M);
    const int p = v.positions;
    const int k = static_cast<int>(M.comps.size());

    for (const Labeling& L : enumerate_labelings(C, M, n)) {
      // g-orbits of the positions outside I
      std::vector<int> gorb(p, -1);
      int l = 0;
      std::vector<std::vector<int>> orbits;
      auto qmap = [&](int x) { return L.phi[x] < 0 ? v.succ[x] : v.succ[L.phi[x]]; };
      for (int i = 0; i < p; ++i) {
        if (L.in_I[i] || gorb[i] >= 0) continue;
        // walk the g-cycle through i
        std::vector<int> cyc;
        int j = i;
        do {
          gorb[j] = l;
          cyc.push_back(j);
          int step = qmap(j);
          while (L.in_I[step]) step = qmap(step);
          j = step;
        } while (j != i);
        orbits.push_back(std::move(cyc));
        ++l;
      }
      // Orbit presentation: g-iteration from the smallest flat position.
      // The discovery loop above starts each cycle there already; the
      // canonicalization applied to each slot charges any further
      // rotation, so no re-rotation happens here.

      // q-orbit and g-orbit counts per slot decide survival
      std::vector<int> qorb(p, -1);
      int w = 0;
      for (int i = 0; i < p; ++i) {
        if (qorb[i] >= 0) continue;
        int j = i;
        while (qorb[j] < 0) {
          qorb[j] = w;
          j = L.phi[j] < 0 ? v.succ[j] : v.succ[L.phi[j]];
        }
        ++w;
      }
      std::vector<int> qcount(n + 1, 0), gcount(n + 1, 0);
      {
        std::vector<int> seen(w, 0);
        for (int i = 0; i < p; ++i)
          if (!seen[qorb[i]]) {
            seen[qorb[i]] = 1;
            ++qcount[L.f[i]];
          }
        for (const auto& cyc : orbits) ++gcount[L.f[cyc[0]]];
      }
      bool dead = false;
      for (int s = 1; s <= n; ++s)
        if (gcount[s] < qcount[s]) dead = true;
      if (dead) continue;

      // pairing factor, lower height first
      Rat eps(1);
      for (int i = 0; i < p && !eps.is_zero(); ++i) {
        int j = L.phi[i];
        if (j < 0 || j < i) continue;
        int lo = v.height[i] < v.height[j] ? i : j;
        int hi = lo == i ? j : i;
        eps *= C.pair(v.letter[lo], v.letter[hi]);
      }
      if (eps.is_zero()) continue;

      // surviving labeling: the h-exponent must be a non-negative integer
      int e4 = static_cast<int>(std::count(L.in_I.begin(), L.in_I.end(), 1)) - 2 * k + 2 * l;
      if (e4 < 0 || e4 % 4 != 0)
        throw HExponentError("coproduct_n: h-exponent (#I-2k+2l)/4 = " + std::to_string(e4) +
                             "/4 on " + qmonomial_str(C, M));
      int hexp = e4 / 4;

      // Koszul sign of the rearrangement
      int sign = 1;
      bool empty_I = std::count(L.in_I.begin(), L.in_I.end(), 1) == 0;
      if (empty_I) {
        // whole components permute as blocks, keeping their input order
        // within each slot
        std::vector<int> par(k), perm(k), slot_of(k, 0);
        for (int i = 0; i < k; ++i) par[i] = comp_parity(C, M.comps[i]);
        for (int i = 0; i < p; ++i) slot_of[v.comp[i]] = L.f[i];
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return slot_of[a] < slot_of[b]; });
        for (int target = 0; target < k; ++target) perm[order[target]] = target;
        sign = koszul_perm_sign(par, perm);
      } else {
        // letters permute; contracted pairs extracted to the right
        std::vector<int> par(p), perm(p, -1);
        for (int i = 0; i < p; ++i) par[i] = C.sdeg(v.letter[i]) & 1;
        int idx = 0;
        // survivors slot by slot, orbits in discovery order
        for (int s = 1; s <= n; ++s) {
          for (const auto& cyc : orbits) {
            if (L.f[cyc[0]] != s) continue;
            for (int pos : cyc) perm[pos] = idx++;
          }
        }
        // pairs, ordered by their lower height
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < p; ++i) {
          int j = L.phi[i];
          if (j < 0 || j < i) continue;
          int lo = v.height[i] < v.height[j] ? i : j;
          int hi = lo == i ? j : i;
          pairs.emplace_back(lo, hi);
        }
        std::sort(pairs.begin(), pairs.end(),
                  [&](const auto& a, const auto& b) { return v.height[a.first] < v.height[b.first]; });
        for (const auto& [lo, hi] : pairs) {
          perm[lo] = idx++;
          perm[hi] = idx++;
        }
        sign = koszul_perm_sign(par, perm);
      }

      // slot monomials, canonicalized and rewritten
      std::vector<QElement> slots(n);
      bool zero_term = false;
      for (int s = 1; s <= n && !zero_term; ++s) {
        std::vector<HWord> raw;
        for (const auto& cyc : orbits) {
          if (L.f[cyc[0]] != s) continue;
          HWord hw;
          hw.reserve(cyc.size());
          for (int pos : cyc) hw.push_back({v.letter[pos], v.height[pos]});
          raw.push_back(std::move(hw));
        }
        if (raw.empty()) {
          slots[s - 1] = QElement{{QMonomial{}, HPoly(1)}};
          continue;
        }
        auto [Mc, sg] = canonical_monomial(C, std::move(raw));
        if (sg < 0) sign = -sign;
        slots[s - 1] = normal_form(C, Mc, HPoly(1));
        if (slots[s - 1].empty()) zero_term = true;
      }
      if (zero_term) continue;

      HPoly factor = coeff * HPoly::h(hexp) * HPoly(sign == 1 ? eps : -eps);
      // expand the tensor of slot elements
      std::vector<QMonomial> key(n);
      std::function<void(int, const HPoly&)> expand = [&](int s, const HPoly& acc) {
        if (acc.is_zero()) return;
        if (s == n) {
          qt_add(out, key, acc);
          return;
        }
        for (const auto& [Ms, cs] : slots[s]) {
          key[s] = Ms;
          expand(s + 1, acc * cs);
        }
      };
      expand(0, factor);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

/// PBW basis monomials with at most max_letters letters: multisets of
/// canonical necklace classes, odd classes without repetition, lifted
/// with block heights.
std::vector<QMonomial> pbw_monomials(const Coideal& C, int max_letters, bool allow_odd_repeats) {
  std::vector<Word> cls = basis_classes(C, max_letters);
  std::vector<QMonomial> out;
  std::vector<int> chosen;  // class indices, non-decreasing
  std::function<void(int, int)> rec = [&](int from, int letters_left) {
    // assemble the monomial for the current multiset
    {
      std::vector<HWord> raw;
      int h = 0;
      for (int ci : chosen) {
        HWord hw;
        for (size_t j = 0; j < cls[ci].size(); ++j) hw.push_back({cls[ci][j], ++h});
        raw.push_back(std::move(hw));
      }
      auto [M, s] = canonical_monomial(C, std::move(raw));
      if (s != 1) throw std::logic_error("pbw_monomials: canonical lift acquired a sign");
      out.push_back(std::move(M));
    }
    for (int ci = from; ci < static_cast<int>(cls.size()); ++ci) {
      int len = static_cast<int>(cls[ci].size());
      if (len > letters_left) continue;
      bool odd = ((word_sdeg_sum(C, cls[ci]) + 2 - C.F->m) & 1) != 0;
      if (!allow_odd_repeats && odd && !chosen.empty() && chosen.back() == ci) continue;
      chosen.push_back(ci);
      rec(ci, letters_left - len);
      chosen.pop_back();
    }
  };
  rec(0, max_letters);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QElement as_element(const QMonomial& M) { return QElement{{M, HPoly(1)}}; }

QTensor tensor_sub(QTensor a, const QTensor& b) {
  for (const auto& [k, c] : b) {
    auto it = a.find(k);
    if (it == a.end()) {
      a.emplace(k, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

std::string qtensor_str(const Coideal& C, const QTensor& t, size_t limit = 4) {
  if (t.empty()) return "0";
  std::ostringstream os;
  size_t count = 0;
  for (const auto& [k, c] : t) {
    if (count++) os << " + ";
    if (count > limit) {
      os << "...";
      break;
    }
    os << "(" << c.str() << ")*";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) os << "(x)";
      os << qmonomial_str(C, k[i]);
    }
  }
  return os.str();
}

}  // namespace

Report check_hopf(const Coideal& C, int max_letters, int n_max, unsigned seed) {
  Report rep;
  rep.title = "hopf identities: " + C.F->name + " (monomials up to " +
              std::to_string(max_letters) + " letters)";
  std::vector<QMonomial> sweep = pbw_monomials(C, max_letters, false);

  // counit axioms
  {
    bool ok = true;
    std::string w;
    for (const auto& M : sweep) {
      QTensor d = coproduct_n(C, as_element(M), 2);
      QElement left, right;
      for (const auto& [k, c] : d) {
        if (k[0].empty()) qel_add(left, k[1], c);
        if (k[1].empty()) qel_add(right, k[0], c);
      }
      QElement expect = as_element(M);
      if (left != expect || right != expect) {
        ok = false;
        w = qmonomial_str(C, M);
        break;
      }
    }
    rep.add("counit axioms for the deconcatenation counit", ok, w);
  }

  // coassociativity through Delta_n
  {
    bool ok = true;
    std::string w;
    for (int n = 3; n <= std::max(3, n_max) && ok; ++n) {
      for (const auto& M : sweep) {
        QTensor dn = coproduct_n(C, as_element(M), n);
        // (Delta (x) id^{n-2}) Delta_{n-1}
        QTensor lhs;
        for (const auto& [k, c] : coproduct_n(C, as_element(M), n - 1)) {
          QTensor first = coproduct_n(C, as_element(k[0]), 2);
          for (const auto& [k2, c2] : first) {
            std::vector<QMonomial> key = {k2[0], k2[1]};
            key.insert(key.end(), k.begin() + 1, k.end());
            qt_add(lhs, std::move(key), c * c2);
          }
        }
        // (id^{n-2} (x) Delta) Delta_{n-1}, with b... no differential: no sign
        QTensor rhs;
        for (const auto& [k, c] : coproduct_n(C, as_element(M), n - 1)) {
          QTensor last = coproduct_n(C, as_element(k[n - 2]), 2);
          for (const auto& [k2, c2] : last) {
            std::vector<QMonomial> key(k.begin(), k.end() - 1);
            key.push_back(k2[0]);
            key.push_back(k2[1]);
            qt_add(rhs, std::move(key), c * c2);
          }
        }
        if (!tensor_sub(dn, lhs).empty() || !tensor_sub(lhs, rhs).empty()) {
          ok = false;
          w = "n=" + std::to_string(n) + ", " + qmonomial_str(C, M);
          break;
        }
      }
    }
    rep.add("coassociativity (iterates against Delta_n)", ok, w);
  }

  // Delta(xy) = Delta(x) Delta(y)
  {
    bool ok = true;
    std::string w;
    for (const auto& X : sweep) {
      if (!ok) break;
      for (const auto& Y : sweep) {
        if (X.letters() + Y.letters() > max_letters) continue;
        QTensor lhs = coproduct_n(C, hopf_product(C, as_element(X), as_element(Y)), 2);
        QTensor dx = coproduct_n(C, as_element(X), 2);
        QTensor dy = coproduct_n(C, as_element(Y), 2);
        QTensor rhs;
        for (const auto& [kx, cx] : dx)
          for (const auto& [ky, cy] : dy) {
            int s = cross_sign(q_parity(C, kx[1]), q_parity(C, ky[0]));
            QElement a = hopf_product(C, as_element(kx[0]), as_element(ky[0]));
            QElement b = hopf_product(C, as_element(kx[1]), as_element(ky[1]));
            HPoly c = cx * cy;
            if (s < 0) c = -c;
            for (const auto& [Ma, ca] : a)
              for (const auto& [Mb, cb] : b)
                qt_add(rhs, {Ma, Mb}, c * ca * cb);
          }
        QTensor diff = tensor_sub(lhs, rhs);
        if (!diff.empty()) {
          ok = false;
          w = qmonomial_str(C, X) + " , " + qmonomial_str(C, Y) + " -> " + qtensor_str(C, diff);
          break;
        }
      }
    }
    rep.add("Delta(xy) = Delta(x)Delta(y)", ok, w);
  }

  // Delta b = (b (x) id + id (x) b) Delta
  {
    bool ok = true;
    std::string w;
    for (const auto& M : sweep) {
      QTensor lhs = coproduct_n(C, b_on_element(C, as_element(M)), 2);
      QTensor rhs;
      for (const auto& [k, c] : coproduct_n(C, as_element(M), 2)) {
        for (const auto& [Mb, cb] : b_on_element(C, as_element(k[0])))
          qt_add(rhs, {Mb, k[1]}, c * cb);
        int s = pow_sign(q_parity(C, k[0]));
        for (const auto& [Mb, cb] : b_on_element(C, as_element(k[1])))
          qt_add(rhs, {k[0], Mb}, s == 1 ? c * cb : -(c * cb));
      }
      QTensor diff = tensor_sub(lhs, rhs);
      if (!diff.empty()) {
        ok = false;
        w = qmonomial_str(C, M) + " -> " + qtensor_str(C, diff);
        break;
      }
    }
    rep.add("Delta commutes with the differential", ok, w);
  }

  // well-definedness: coproduct before or after normal form agrees
  {
    bool ok = true;
    std::string w;
    std::mt19937_64 rng(seed);
    std::vector<QMonomial> pool = pbw_monomials(C, max_letters, true);
    for (int trial = 0; trial < 40 && !pool.empty(); ++trial) {
      const QMonomial& M = pool[rng() % pool.size()];
      if (M.empty()) continue;
      // scramble the heights
      std::vector<int> hs(M.letters());
      std::iota(hs.begin(), hs.end(), 1);
      std::shuffle(hs.begin(), hs.end(), rng);
      std::vector<HWord> raw = M.comps;
      int idx = 0;
      for (auto& cmp : raw)
        for (auto& l : cmp) l.height = hs[idx++];
      auto [Ms, sg] = canonical_monomial(C, std::move(raw));
      QElement scr{{Ms, HPoly(sg)}};
      QTensor direct = coproduct_n(C, scr, 2);
      QTensor via_nf;
      for (const auto& [Mn, cn] : normal_form(C, Ms, HPoly(sg)))
        for (const auto& [k, c] : coproduct_n(C, as_element(Mn), 2)) qt_add(via_nf, k, cn * c);
      QTensor diff = tensor_sub(direct, via_nf);
      if (!diff.empty()) {
        ok = false;
        w = qmonomial_str(C, Ms) + " -> " + qtensor_str(C, diff);
        break;
      }
    }
    rep.add("Delta descends through normal forms", ok, w);
  }

  // h-exponent integrality across the sweep's labelings (surviving terms
  // would have thrown HExponentError above; run once explicitly).
  {
    bool ok = true;
    std::string w;
    try {
      for (const auto& M : sweep) coproduct_n(C, as_element(M), 2);
    } catch (const HExponentError& e) {
      ok = false;
      w = e.what();
    }
    rep.add("h-exponent integrality", ok, w);
  }

  // antipode identity, informational per the construction's provenance
  {
    bool ok = true;
    std::string w;
    for (const auto& M : sweep) {
      QElement acc;
      for (const auto& [k, c] : coproduct_n(C, as_element(M), 2)) {
        QElement s = antipode(C, as_element(k[0]));
        for (const auto& [Mp, cp] : hopf_product(C, s, as_element(k[1])))
          qel_add(acc, Mp, c * cp);
      }
      QElement expect;
      if (M.empty()) expect[QMonomial{}] = HPoly(1);
      if (acc != expect) {
        ok = false;
        w = qmonomial_str(C, M) + " -> " + qelement_str(C, acc);
        break;
      }
    }
    rep.add_informational("antipode identity mu(S (x) id)Delta = unit counit", ok, w);
  }

  return rep;
}

Report check_quantization(const Coideal& C, int max_letters) {
  Report rep;
  rep.title = "quantization congruences: " + C.F->name + " (classes up to " +
              std::to_string(max_letters) + " letters)";
  std::vector<Word> cls = basis_classes(C, max_letters);

  // cobracket congruence: (Delta - Delta^op)/h = delta mod h
  {
    bool ok = true, div_ok = true;
    std::string w, wdiv;
    for (const auto& x : cls) {
      QMonomial X = lift_class(C, x);
      QTensor d = coproduct_n(C, as_element(X), 2);
      // Delta - Delta^op
      QTensor anti = d;
      for (const auto& [k, c] : d) {
        int s = cross_sign(q_parity(C, k[0]), q_parity(C, k[1]));
        std::vector<QMonomial> swapped = {k[1], k[0]};
        auto it = anti.find(swapped);
        HPoly dec = s == 1 ? c : -c;
        if (it == anti.end()) {
          anti.emplace(std::move(swapped), -dec);
        } else {
          it->second -= dec;
          if (it->second.is_zero()) anti.erase(it);
        }
      }
      // divisible by h, then reduce mod h
      std::map<std::pair<QMonomial, QMonomial>, Rat> lhs;
      for (const auto& [k, c] : anti) {
        if (!c.mod_h().is_zero()) {
          div_ok = false;
          wdiv = word_str(C, x);
          break;
        }
        Rat r = c.div_h().mod_h();
        if (!r.is_zero()) lhs[{k[0], k[1]}] = r;
      }
      if (!div_ok) break;
      std::map<std::pair<QMonomial, QMonomial>, Rat> rhs;
      for (const auto& [pr, c] : cobracket(C, x)) {
        auto key = std::make_pair(lift_class(C, pr.first), lift_class(C, pr.second));
        auto [it, fresh] = rhs.try_emplace(key, c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) rhs.erase(it);
        }
      }
      if (lhs != rhs) {
        ok = false;
        w = word_str(C, x);
        break;
      }
    }
    rep.add("antisymmetrized coproduct is divisible by h", div_ok, wdiv);
    rep.add("h^{-1}(Delta - Delta^op) = cobracket mod h", ok, w);
  }

  // commutator congruence: XY -+ YX = lift of the bracket mod h
  {
    bool ok = true;
    std::string w;
    for (const auto& x : cls) {
      if (!ok) break;
      if (static_cast<int>(x.size()) > 3) continue;
      for (const auto& y : cls) {
        if (static_cast<int>(y.size()) > 3) continue;
        QMonomial X = lift_class(C, x), Y = lift_class(C, y);
        QElement je = hopf_product(C, as_element(X), as_element(Y));
        int s = cross_sign(q_parity(C, X), q_parity(C, Y));
        for (const auto& [M, c] : hopf_product(C, as_element(Y), as_element(X)))
          qel_add(je, M, s == 1 ? -c : c);
        std::map<QMonomial, Rat> lhs;
        for (const auto& [M, c] : je) {
          Rat r = c.mod_h();
          if (!r.is_zero()) lhs[M] = r;
        }
        std::map<QMonomial, Rat> rhs;
        for (const auto& [u, cu] : bracket(C, x, y)) {
          QMonomial L = lift_class(C, u);
          auto [it, fresh] = rhs.try_emplace(L, cu);
          if (!fresh) {
            it->second += cu;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
        if (lhs != rhs) {
          ok = false;
          w = word_str(C, x) + " , " + word_str(C, y);
          break;
        }
      }
    }
    rep.add("XY -+ YX = lift of {x,y} mod h", ok, w);
  }

  return rep;
}

Report pbw_check(const Coideal& C, int max_letters, unsigned seed, int scrambles) {
  Report rep;
  rep.title = "PBW checks: " + C.F->name + " (up to " + std::to_string(max_letters) +
              " letters, seed " + std::to_string(seed) + ")";

  std::vector<QMonomial> basis = pbw_monomials(C, max_letters, false);
  std::vector<QMonomial> all = pbw_monomials(C, max_letters, true);

  // basis monomials are fixed points of the rewriting
  {
    bool ok = true;
    std::string w;
    for (const auto& M : basis) {
      QElement nf = normal_form(C, M, HPoly(1));
      QElement expect = as_element(M);
      if (nf != expect) {
        ok = false;
        w = qmonomial_str(C, M);
        break;
      }
    }
    rep.add("basis monomials are rewriting fixed points", ok, w);
  }

  // strategy independence on seeded scrambles
  {
    bool ok = true;
    std::string w;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < scrambles && ok && !all.empty(); ++trial) {
      const QMonomial& M = all[rng() % all.size()];
      if (M.empty()) continue;
      std::vector<int> hs(M.letters());
      std::iota(hs.begin(), hs.end(), 1);
      std::shuffle(hs.begin(), hs.end(), rng);
      std::vector<HWord> raw = M.comps;
      int idx = 0;
      for (auto& cmp : raw)
        for (auto& l : cmp) l.height = hs[idx++];
      auto [Ms, sg] = canonical_monomial(C, std::move(raw));
      QElement left = normal_form(C, Ms, HPoly(sg), RewriteStrategy::LeftmostFirst);
      QElement right = normal_form(C, Ms, HPoly(sg), RewriteStrategy::RightmostFirst);
      if (left != right) {
        ok = false;
        w = qmonomial_str(C, Ms);
      }
    }
    rep.add("normal forms are strategy independent", ok, w);
  }

  // per-degree ranks of A/hA match graded symmetric-algebra dimensions
  {
    bool ok = true;
    std::string w;
    // independent census: bounded knapsack over class (letters, degree,
    // parity) data, odd classes at most once
    std::map<int, long> expected;
    {
      std::vector<Word> cls = basis_classes(C, max_letters);
      std::map<std::pair<int, int>, long> dp;  // (letters, degree) -> count
      dp[{0, 0}] = 1;
      for (const auto& cw : cls) {
        int len = static_cast<int>(cw.size());
        int deg = word_sdeg_sum(C, cw) + 2 - C.F->m;
        bool odd = (deg & 1) != 0;
        std::map<std::pair<int, int>, long> next = dp;
        if (odd) {
          for (const auto& [k, v] : dp) {
            int nl = k.first + len;
            if (nl <= max_letters) next[{nl, k.second + deg}] += v;
          }
        } else {
          // unbounded within the letter budget
          std::map<std::pair<int, int>, long> grown = dp;
          for (int reps = 1; reps * len <= max_letters; ++reps) {
            std::map<std::pair<int, int>, long> g2;
            for (const auto& [k, v] : grown) {
              int nl = k.first + len;
              if (nl <= max_letters) g2[{nl, k.second + deg}] += v;
            }
            for (const auto& [k, v] : g2) next[k] += v;
            grown = std::move(g2);
          }
        }
        dp = std::move(next);
      }
      for (const auto& [k, v] : dp)
        if (k.first >= 1) expected[k.second] += v;
    }
    // spans: normal forms of every lift (including odd repeats), mod h
    std::map<int, std::vector<std::map<QMonomial, Rat>>> spans;
    for (const auto& M : all) {
      if (M.empty()) continue;
      std::map<QMonomial, Rat> vec;
      for (const auto& [Mn, cn] : normal_form(C, M, HPoly(1))) {
        Rat r = cn.mod_h();
        if (!r.is_zero()) vec[Mn] = r;
      }
      if (!vec.empty()) spans[q_degree(C, M)].push_back(std::move(vec));
    }
    std::map<int, long> got;
    for (auto& [deg, vecs] : spans) {
      std::map<QMonomial, size_t> row;
      for (const auto& v : vecs)
        for (const auto& [M, c] : v)
          if (!row.count(M)) {
            size_t id = row.size();
            row[M] = id;
          }
      SparseMat mat(row.size(), vecs.size());
      for (size_t j = 0; j < vecs.size(); ++j)
        for (const auto& [M, c] : vecs[j]) mat.add(row[M], j, c);
      got[deg] = static_cast<long>(mat.rank_and_kernel().rank);
    }
    for (const auto& [deg, count] : expected) {
      long have = got.count(deg) ? got[deg] : 0;
      if (have != count) {
        ok = false;
        w = "degree " + std::to_string(deg) + ": rank " + std::to_string(have) + " vs " +
            std::to_string(count);
        break;
      }
    }
    for (const auto& [deg, have] : got) {
      if (!expected.count(deg) && have != 0) {
        ok = false;
        w = "degree " + std::to_string(deg) + ": unexpected rank " + std::to_string(have);
        break;
      }
    }
    rep.add("per-degree ranks of A/hA match symmetric-algebra dimensions", ok, w);
  }

  return rep;
}

}  // namespace necklace
