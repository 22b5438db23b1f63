#include "necklace/parse.hpp"

#include <stdexcept>

namespace necklace {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::invalid_argument bad(const std::string& s, const std::string& why) {
  return std::invalid_argument("cannot parse '" + s + "': " + why);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

std::string inside_brackets(const Coideal&, const std::string& s) {
  std::string t = strip(s);
  if (t.size() < 3 || t[0] != 'N' || t[1] != '[' || t.back() != ']')
    throw bad(s, "expected N[...]");
  return t.substr(2, t.size() - 3);
}

}  // namespace

Word parse_class(const Coideal& C, const std::string& s) {
  std::string inner = inside_brackets(C, s);
  Word w;
  for (const auto& part : split(inner, '|')) {
    std::string name = strip(part);
    auto idx = C.letter_by_name(name);
    if (!idx) throw bad(s, "unknown coideal letter '" + name + "'");
    w.push_back(*idx);
  }
  if (w.empty()) throw bad(s, "empty word");
  return w;
}

std::vector<HWord> parse_qmonomial(const Coideal& C, const std::string& s) {
  std::string t = strip(s);
  if (t == "1") return {};
  std::vector<HWord> comps;
  for (const auto& comp_str : split(t, '*')) {
    std::string inner = inside_brackets(C, strip(comp_str));
    HWord hw;
    for (const auto& part : split(inner, '|')) {
      std::string letter = strip(part);
      if (letter.size() < 5 || letter.front() != '(' || letter.back() != ')')
        throw bad(s, "expected (name,height)");
      auto pieces = split(letter.substr(1, letter.size() - 2), ',');
      if (pieces.size() != 2) throw bad(s, "expected (name,height)");
      auto idx = C.letter_by_name(strip(pieces[0]));
      if (!idx) throw bad(s, "unknown coideal letter '" + strip(pieces[0]) + "'");
      int h = 0;
      try {
        h = std::stoi(strip(pieces[1]));
      } catch (...) {
        throw bad(s, "bad height '" + strip(pieces[1]) + "'");
      }
      hw.push_back({*idx, h});
    }
    if (hw.empty()) throw bad(s, "empty component");
    comps.push_back(std::move(hw));
  }
  return comps;
}

}  // namespace necklace
