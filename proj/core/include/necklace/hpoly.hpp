#pragma once

#include <initializer_list>
#include <vector>

#include "necklace/rational.hpp"

namespace necklace {

/// Polynomial in the formal parameter h with exact rational coefficients,
/// stored densely by exponent with trailing zeros stripped.  h itself
/// carries internal degree 2*(m-2); degree bookkeeping that needs the
/// weight goes through h_weight().
class HPoly {
public:
  HPoly() = default;
  HPoly(Rat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  HPoly(long n) : HPoly(Rat(n)) {}
  HPoly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }

  static HPoly h(int exponent = 1);

  bool is_zero() const { return c_.empty(); }
  /// Degree in h; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const;

  /// Constant coefficient (reduction mod h).
  Rat mod_h() const { return c_.empty() ? Rat() : c_[0]; }
  /// Exact division by h; requires a vanishing constant term.
  HPoly div_h() const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  HPoly operator-() const;

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }
  friend bool operator<(const HPoly& a, const HPoly& b);

  /// Internal degree contributed by h^k when the Frobenius degree is m.
  static int h_weight(int k, int m) { return k * 2 * (m - 2); }

  std::string str() const;

private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace necklace
