#pragma once

#include <string>
#include <vector>

namespace necklace {

/// One verified identity or axiom: name, verdict, and a concrete witness
/// on failure (the inputs that broke it, pretty-printed).
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;
  bool blocking = true;
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, std::string witness = "") {
    lines.push_back({std::move(name), pass, std::move(witness), true});
  }
  void add_informational(std::string name, bool pass, std::string witness = "") {
    lines.push_back({std::move(name), pass, std::move(witness), false});
  }
  /// Informational lines do not gate the verdict.
  bool all_pass() const {
    for (const auto& l : lines)
      if (l.blocking && !l.pass) return false;
    return true;
  }

  std::string text() const;
  std::string json() const;
};

}  // namespace necklace
