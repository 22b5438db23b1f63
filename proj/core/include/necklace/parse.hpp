#pragma once

#include <string>
#include <vector>

#include "necklace/cyclic.hpp"
#include "necklace/quant.hpp"

namespace necklace {

/// Parses a cyclic word written as N[a|t|b|t].  Letters must name
/// coideal basis elements.  Throws std::invalid_argument.
Word parse_class(const Coideal& C, const std::string& s);

/// Parses a heighted monomial written as N[(a,1)|(t,2)] * N[(b,3)],
/// or "1" for the empty monomial.  Heights must be distinct integers.
std::vector<HWord> parse_qmonomial(const Coideal& C, const std::string& s);

}  // namespace necklace
