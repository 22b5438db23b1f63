#include "necklace/hpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace necklace {

HPoly HPoly::h(int exponent) {
  HPoly p;
  p.c_.assign(exponent + 1, Rat());
  p.c_[exponent] = Rat(1);
  return p;
}

const Rat& HPoly::coeff(int k) const {
  static const Rat zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

HPoly HPoly::div_h() const {
  if (!mod_h().is_zero())
    throw std::domain_error("HPoly::div_h: nonzero constant term");
  HPoly r;
  if (c_.size() > 1) r.c_.assign(c_.begin() + 1, c_.end());
  return r;
}

void HPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

HPoly HPoly::operator-() const {
  HPoly r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

bool operator<(const HPoly& a, const HPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string HPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k].str();
    } else {
      if (!c_[k].is_one()) os << c_[k].str() << " ";
      os << "h";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace necklace
