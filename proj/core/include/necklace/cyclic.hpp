#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "necklace/frobenius.hpp"
#include "necklace/rational.hpp"

namespace necklace {

/// A word in the coaugmentation coideal: letters are Coideal indices.
/// Letter 1 sits in the unshifted slot, the rest carry the C[1] shift;
/// total degree is sum |a_i| - (len - 1).
using Word = std::vector<int>;

/// Linear combination of words with exact coefficients.
using Chain = std::map<Word, Rat>;

/// Chain supported on canonical necklace representatives; the coefficient
/// of a representative w means c * N(w).
using CcChain = std::map<Word, Rat>;

struct UnboundedEnumeration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int word_sdeg_sum(const Coideal& C, const Word& w);
int word_degree(const Coideal& C, const Word& w);

/// Signed cyclic rotation t: first letter to the end, Koszul sign
/// (-1)^{sdeg(a_1) * (sdeg of the rest)}.
std::pair<Word, int> cyclic_t(const Coideal& C, const Word& w);

/// Canonical necklace data for a word: the lexicographically minimal
/// rotation, and the sign s with N(w) = s * N(canonical).  zero is set
/// when some rotation stabilizes the word with sign -1, which collapses
/// the whole class.
struct CanonWord {
  Word rep;
  int sign = 1;
  bool zero = false;
};
CanonWord canonicalize(const Coideal& C, const Word& w);

/// N(w) expanded as a plain chain (sum of all signed rotations).
Chain n_expand(const Coideal& C, const Word& w);

/// Adds c * N(w) to a class chain (canonicalizing w first).
void add_class(const Coideal& C, CcChain& out, const Word& w, const Rat& c);

/// Expresses a plain chain as a combination of N(canonical) generators.
/// Throws if the chain does not lie in the image of N; this doubles as a
/// perpetual check that operations land in the Connes complex.
CcChain to_classes(const Coideal& C, const Chain& chain);

/// Hochschild differential on words over C (internal differential,
/// reduced-coproduct insertions at every slot, wrap-around term).
Chain hochschild_b(const Coideal& C, const Word& w);

/// b extended linearly, then re-expressed on canonical classes.
CcChain cc_b(const Coideal& C, const CcChain& x);

/// Words of the normalized complex V (x) C[1]^n: letter 1 ranges over the
/// full V basis, the rest over C letters.
struct VWord {
  int head = 0;              // V basis index
  std::vector<int> tail;     // C letters
  friend bool operator<(const VWord& a, const VWord& b) {
    return std::tie(a.head, a.tail) < std::tie(b.head, b.tail);
  }
  friend bool operator==(const VWord& a, const VWord& b) {
    return a.head == b.head && a.tail == b.tail;
  }
};
using VChain = std::map<VWord, Rat>;

int vword_degree(const Coideal& C, const VWord& w);

/// Hochschild differential on the normalized complex.
VChain normalized_b(const Coideal& C, const VWord& w);

/// Connes' operator B: eps(head) times the signed cyclic symmetrization
/// of the tail.
VChain connes_B(const Coideal& C, const VWord& w);

VChain vchain_b(const Coideal& C, const VChain& x);
VChain vchain_B(const Coideal& C, const VChain& x);

/// All canonical nonzero classes of the given total degree.  Requires
/// max_len when the algebra is not simply-connected.
std::vector<Word> connes_complex_basis(const Coideal& C, int degree,
                                       std::optional<int> max_len = std::nullopt);

/// All words (not classes) of the given total degree.
std::vector<Word> hochschild_basis(const Coideal& C, int degree,
                                   std::optional<int> max_len = std::nullopt);

enum class ComplexKind { Hochschild, Cyclic };

/// Exact homology dimensions per degree over the inclusive range.
std::vector<std::pair<int, size_t>> homology_ranks(
    const Coideal& C, ComplexKind kind, int lo, int hi,
    std::optional<int> max_len = std::nullopt);

std::string word_str(const Coideal& C, const Word& w);

}  // namespace necklace
