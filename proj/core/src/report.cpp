#include "necklace/report.hpp"

#include <sstream>

namespace necklace {

std::string Report::text() const {
  std::ostringstream os;
  if (!title.empty()) os << "== " << title << " ==\n";
  for (const auto& l : lines) {
    os << (l.pass ? "PASS" : "FAIL") << "  " << l.name;
    if (!l.blocking) os << "  (informational)";
    if (!l.pass && !l.witness.empty()) os << "  [witness: " << l.witness << "]";
    os << "\n";
  }
  return os.str();
}

static void json_escape(std::ostringstream& os, const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
}

std::string Report::json() const {
  std::ostringstream os;
  os << "{\"title\":\"";
  json_escape(os, title);
  os << "\",\"all_pass\":" << (all_pass() ? "true" : "false") << ",\"checks\":[";
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) os << ",";
    os << "{\"name\":\"";
    json_escape(os, lines[i].name);
    os << "\",\"pass\":" << (lines[i].pass ? "true" : "false") << ",\"witness\":\"";
    json_escape(os, lines[i].witness);
    os << "\"}";
  }
  os << "]}";
  return os.str();
}

}  // namespace necklace
