#include "axial/rational.hpp"

#include <ostream>

namespace axial {

Rational::Rational(long num, long den) {
  require(den != 0, errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::from_integer_string(const std::string& digits) {
  try {
    return Rational(mpq_class(mpz_class(digits, 10)));
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "not an integer literal: '" + digits + "'");
  }
}

Rational Rational::inverse() const {
  require(!is_zero(), errc::division_by_zero, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), errc::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace axial
