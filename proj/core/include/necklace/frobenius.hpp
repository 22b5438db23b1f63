#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "necklace/rational.hpp"
#include "necklace/report.hpp"

namespace necklace {

/// Error thrown by the document loader.  Axiom violations are not errors:
/// they are reported by validate().
struct LoadError : std::runtime_error {
  enum class Kind { Parse, MissingField, Degree };
  LoadError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

/// A counital coaugmented DG open Frobenius algebra presented by structure
/// constants on a finite graded basis.  Degrees are homological and
/// non-negative; the product has degree -m, the coproduct degree 0.
///
/// Tables are plain data so that tests can mutate single constants and
/// watch validate() fail.
struct Frobenius {
  std::string name;
  int m = 0;
  bool simply_connected = true;
  std::vector<std::string> basis_names;
  std::vector<int> degree;
  int unit = -1;  // index of e0 = eta(1)
  std::vector<Rat> counit;
  // d(v_i) = sum_j d[i][j] v_j (sparse pairs)
  std::vector<std::vector<std::pair<int, Rat>>> d;
  // v_i . v_j = sum_k product[i][j][k-th pair]
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> product;
  // Delta(v_i) = sum coproduct[i] of (j, k, c) meaning c * v_j (x) v_k
  std::vector<std::vector<std::tuple<int, int, Rat>>> coproduct;

  size_t dim() const { return basis_names.size(); }
  int basis_index(const std::string& n) const;

  /// epsilon(x . y) for arbitrary basis indices of V.
  Rat pairing(int x, int y) const;

  /// x . y as a sparse vector.
  std::map<int, Rat> mul(int x, int y) const;
};

/// Parses the structure-constant document format.  Throws LoadError; does
/// not validate axioms.
Frobenius load_frobenius(const std::string& document);

/// Checks every axiom clause and reports pass/fail per clause with a
/// witness on failure.  Pure report; never throws.
Report validate_frobenius(const Frobenius& F);

/// The coaugmentation coideal C = V / k.e0: the non-unit basis with the
/// reduced coproduct (all e0 terms dropped).
struct Coideal {
  const Frobenius* F = nullptr;
  std::vector<int> letters;      // V-basis index per C-letter
  std::vector<int> deg;          // degree per C-letter
  std::vector<int> vtoc;         // V-basis index -> C-letter index or -1
  // reduced coproduct per C-letter: (C-letter, C-letter, coeff)
  std::vector<std::vector<std::tuple<int, int, Rat>>> dbar;
  // internal differential per C-letter, expressed in C-letters
  std::vector<std::vector<std::pair<int, Rat>>> dC;

  int sdeg(int c) const { return deg[c] - 1; }  // C[1] shifted degree
  Rat pair(int c1, int c2) const { return F->pairing(letters[c1], letters[c2]); }
  const std::string& name_of(int c) const { return F->basis_names[letters[c]]; }
  std::optional<int> letter_by_name(const std::string& n) const;
};

Coideal coideal(const Frobenius& F);

/// Built-in algebras: point, S2, S3, S4, S2xS2, CP2, Dcontr, Dmix.
const std::vector<std::string>& builtin_names();
Frobenius builtin(const std::string& name);

}  // namespace necklace
