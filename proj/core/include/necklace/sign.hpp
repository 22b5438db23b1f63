#pragma once

#include <cstdint>
#include <vector>

namespace necklace {

/// Koszul sign conventions, centralized.  Every ± in the library resolves
/// through the rules below; the identity suites (b^2, Jacobi, Drinfeld,
/// Hopf, quantization) are exact checks of their mutual consistency.
///
/// Calculus: a cyclic word letter a contributes its shifted degree
/// sdeg(a) = |a| - 1; a whole word additionally carries one suspension of
/// parity (2 - m) when regarded as an element of L = CC[m-1].  Moving a
/// symbol of parity p past a block of total parity q costs (-1)^{pq};
/// applying an operator of parity p at a position preceded by symbols of
/// total parity q costs the same.

/// Sign of sorting `items` into ascending order by the comparator-chosen
/// target permutation, where swapping adjacent items of parities p, q
/// contributes (-1)^{pq}.  `parity[i]` is the parity of item i, `perm[i]`
/// gives the target position of item i.
inline int koszul_perm_sign(const std::vector<int>& parity,
                            const std::vector<int>& perm) {
  // Bubble the permutation to identity, accumulating crossing signs.
  std::vector<int> p = perm;
  std::vector<int> par(parity);
  int sign = 1;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    for (size_t j = 0; j + 1 < p.size() - i; ++j) {
      if (p[j] > p[j + 1]) {
        if ((par[j] & 1) && (par[j + 1] & 1)) sign = -sign;
        std::swap(p[j], p[j + 1]);
        std::swap(par[j], par[j + 1]);
      }
    }
  }
  return sign;
}

/// (-1)^e for an integer exponent.
inline int pow_sign(long e) { return (e & 1) ? -1 : 1; }

/// (-1)^{pq} for parities p, q.
inline int cross_sign(long p, long q) { return ((p & q & 1) != 0) ? -1 : 1; }

}  // namespace necklace
