#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "axial/errors.hpp"

namespace axial {

/// Arbitrary-precision rational number, always kept canonical:
/// gcd(|numerator|, denominator) = 1 and denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses a plain (possibly signed) decimal integer of any size.
  static Rational from_integer_string(const std::string& digits);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace axial
