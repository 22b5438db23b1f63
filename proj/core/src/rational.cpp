#include "necklace/rational.hpp"

namespace necklace {

Rat Rat::parse(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("Rat: cannot parse '" + s + "'"); };
  if (s.empty()) throw bad();
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return Rat(q);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string Rat::str() const {
  return q_.get_str();
}

}  // namespace necklace
