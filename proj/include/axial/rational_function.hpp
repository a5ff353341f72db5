#pragma once

#include <iosfwd>
#include <string>

#include "axial/polynomial.hpp"

namespace axial {

/// Element of the field of rational functions over Q in named variables.
///
/// The representation is normalized without any multivariate GCD machinery:
/// common monomial factors are cancelled, an exact-division attempt collapses
/// numerator/denominator pairs that divide each other (this keeps
/// fraction-free elimination intermediates polynomial), a univariate GCD is
/// taken when both parts live in the same single variable, and the
/// denominator is scaled to leading coefficient 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long v) : num_(v), den_(1) {}  // NOLINT: implicit constant
  explicit RationalFunction(const Rational& v) : num_(v), den_(1) {}
  explicit RationalFunction(Polynomial numerator)
      : num_(std::move(numerator)), den_(1) {
    canonicalize();
  }
  RationalFunction(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
  }

  static RationalFunction variable(const Polynomial::VarsPtr& vars, size_t index) {
    return RationalFunction(Polynomial::variable(vars, index));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  /// Equality of field elements: cross-multiplication, so it is independent
  /// of the chosen representatives.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  Polynomial num_, den_;

  void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace axial
