#pragma once

#include <gmpxx.h>

#include <string>

namespace dcospan {

// Exact rational scalar wrapping GMP's mpq_class. Values are always
// canonical: lowest terms, positive denominator. No floating point anywhere.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // implicit by design: integer literals are rationals
  Rat(long num, long den);
  explicit Rat(mpq_class v);

  // Strict "p" / "-p" / "p/q" syntax with q > 0. Throws std::invalid_argument
  // on anything else (whitespace, hex, empty, zero denominator...).
  static Rat parse(const std::string& text);

  // "p/q", or just "p" when the denominator is 1. parse(str(x)) == x.
  std::string str() const;

  bool isZero() const { return sgn(v_) == 0; }
  bool isPositive() const { return sgn(v_) > 0; }

  Rat reciprocal() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

}  // namespace dcospan
