#pragma once

#include <map>
#include <utility>

#include "necklace/cyclic.hpp"

namespace necklace {

/// Elements of L = CC(C)[m-1]: class chains with the extra shift kept in
/// the degree bookkeeping only.
int l_degree(const Coideal& C, const Word& w);

/// Tensor square of L, on canonical class pairs.
using TensorSq = std::map<std::pair<Word, Word>, Rat>;

/// String-topology bracket on class generators N(u), N(v): contract one
/// letter of each through the pairing eps(. ), splice the remainders.
CcChain bracket(const Coideal& C, const Word& u, const Word& v);
CcChain bracket_chains(const Coideal& C, const CcChain& x, const CcChain& y);

/// Cobracket: contract two letters of one class, split into outer and
/// inner necklaces, antisymmetrized.
TensorSq cobracket(const Coideal& C, const Word& u);
TensorSq cobracket_chain(const Coideal& C, const CcChain& x);

/// All canonical nonzero classes of length up to max_len, in
/// lexicographic word order.
std::vector<Word> basis_classes(const Coideal& C, int max_len);

/// Exhaustive identity suite of the Lie bialgebra structure up to a word
/// length bound: antisymmetry, Jacobi, co-antisymmetry, co-Jacobi,
/// Drinfeld compatibility, involutivity, b-derivation/coderivation.
Report check_lie_bialgebra(const Coideal& C, int max_word_len);

std::string tensor_str(const Coideal& C, const TensorSq& t);
std::string cc_str(const Coideal& C, const CcChain& x);

}  // namespace necklace
