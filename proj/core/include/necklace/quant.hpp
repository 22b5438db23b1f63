#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "necklace/cyclic.hpp"
#include "necklace/hpoly.hpp"
#include "necklace/lie.hpp"

namespace necklace {

/// A letter of the coideal carrying a height.  Within one monomial all
/// heights are distinct and normalized to the ranks 1..N of their
/// order-isomorphism class.
struct HLetter {
  int letter = 0;
  int height = 0;
  auto operator<=>(const HLetter&) const = default;
};

/// One heighted necklace component, stored by its canonical rotation
/// (lexicographically minimal letter sequence, ties broken by heights).
using HWord = std::vector<HLetter>;

/// Product of heighted necklaces sharing one global height ranking.
/// Canonical form: components sorted, heights = 1..N, rotations canonical.
struct QMonomial {
  std::vector<HWord> comps;
  auto operator<=>(const QMonomial&) const = default;
  bool empty() const { return comps.empty(); }
  int letters() const {
    int n = 0;
    for (const auto& c : comps) n += static_cast<int>(c.size());
    return n;
  }
};

/// Element of the quantized algebra: normal-form monomials with k[h]
/// coefficients.
using QElement = std::map<QMonomial, HPoly>;

/// n-fold tensors of QElement, expanded monomial-wise.
using QTensor = std::map<std::vector<QMonomial>, HPoly>;

struct HExponentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brings raw components (arbitrary distinct heights, arbitrary rotations
/// and order) into canonical form; the returned sign folds the rotation
/// and reordering Koszul costs.
std::pair<QMonomial, int> canonical_monomial(const Coideal& C, std::vector<HWord> raw);

/// Total degree: component L-degrees plus nothing for heights.
int q_degree(const Coideal& C, const QMonomial& M);
/// Parity used for tensor-factor swaps.
int q_parity(const Coideal& C, const QMonomial& M);

/// Differential on height-labeled monomials (internal differential plus
/// reduced-coproduct insertion with heights (h, h+1) and the global bump
/// of heights above h).  Output is on canonical monomials of the height
/// complex, not yet rewritten to the PBW basis.
std::map<QMonomial, Rat> quant_b(const Coideal& C, const QMonomial& M);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Rewrites an arbitrary monomial to its unique PBW normal form through
/// the height-exchange relations; corrections carry the pairing (and one
/// power of h for same-component exchanges).
QElement normal_form(const Coideal& C, const QMonomial& M, const HPoly& coeff,
                     RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);
QElement normal_form_all(const Coideal& C, const std::map<QMonomial, Rat>& x,
                         RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// quant_b followed by normal form, extended to elements.
QElement b_on_element(const Coideal& C, const QElement& x);

/// Hopf product: shift the right factor's heights above the left's,
/// concatenate, normal-form.
QElement hopf_product(const Coideal& C, const QElement& x, const QElement& y);

/// Antipode: negate heights, renormalize, scale by (-1)^{#letters}.
QElement antipode(const Coideal& C, const QElement& x);

/// An n-labeling (I, phi, f) over the flattened letter positions.
struct Labeling {
  std::vector<int> in_I;  // indicator per position
  std::vector<int> phi;   // involution on positions in I, -1 elsewhere
  std::vector<int> f;     // slot assignment per position, values 1..n
};

/// Exhaustive, deterministically ordered enumeration of all n-labelings.
std::vector<Labeling> enumerate_labelings(const Coideal& C, const QMonomial& M, int n);

/// n-fold coproduct via labelings.  Throws HExponentError if a surviving
/// labeling produces a non-integral or negative h-exponent.
QTensor coproduct_n(const Coideal& C, const QElement& x, int n);

/// Lift of a cyclic class to its canonical PBW representative: heights
/// 1..len along the canonical rotation.
QMonomial lift_class(const Coideal& C, const Word& w);

/// Hopf identity suite: product compatibility, coassociativity,
/// b-compatibility, well-definedness, counit; antipode reported
/// separately (non-blocking).
Report check_hopf(const Coideal& C, int max_letters, int n_max, unsigned seed = 1);

/// Quantization congruences against the Lie bialgebra layer.
Report check_quantization(const Coideal& C, int max_letters);

/// PBW checks: strategy confluence on seeded scrambles and per-degree
/// ranks of A/hA against symmetric-algebra dimensions.
Report pbw_check(const Coideal& C, int max_letters, unsigned seed, int scrambles = 200);

std::string qmonomial_str(const Coideal& C, const QMonomial& M);
std::string qelement_str(const Coideal& C, const QElement& x);

}  // namespace necklace
