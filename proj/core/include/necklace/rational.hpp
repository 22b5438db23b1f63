#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace necklace {

/// Exact rational number, always in canonical form (positive denominator,
/// gcd(|num|, den) = 1).  Backed by GMP, so intermediate coefficient blowup
/// during elimination is harmless.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rat parse(const std::string& s);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

  std::string str() const;

private:
  mpq_class q_;
};

inline Rat operator*(long n, const Rat& r) { return Rat(n) * r; }

}  // namespace necklace
