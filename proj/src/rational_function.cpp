#include "axial/rational_function.hpp"

#include <ostream>

namespace axial {

void RationalFunction::canonicalize() {
  require(!den_.is_zero(), errc::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial::align(num_, den_);

  // cancel the common monomial factor
  Polynomial::Exponents mn = num_.min_exponents();
  Polynomial::Exponents md = den_.min_exponents();
  Polynomial::Exponents common(mn.size(), 0);
  bool any = false;
  for (size_t i = 0; i < common.size(); ++i) {
    common[i] = std::min(mn[i], i < md.size() ? md[i] : 0);
    any = any || common[i] > 0;
  }
  if (any) {
    num_ = num_.shifted_down(common);
    den_ = den_.shifted_down(common);
  }

  if (den_.is_constant()) {
    num_ = num_.scaled(den_.constant_value().inverse());
    den_ = Polynomial(1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Polynomial(1);
    return;
  }
  if (auto q = den_.divide_exact(num_)) {
    den_ = std::move(*q);
    num_ = Polynomial(1);
  } else {
    auto vn = num_.single_variable();
    auto vd = den_.single_variable();
    if (vn && vd && *vn == *vd) {
      Polynomial g = Polynomial::gcd_univariate(num_, den_);
      if (g.total_degree() > 0) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    }
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.constant_value().inverse());
    den_ = Polynomial(1);
    return;
  }
  const Rational& lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::inverse() const {
  require(!is_zero(), errc::division_by_zero, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

namespace {

// a/b + c/d without inflating the denominator when b divides d or d divides
// b (the common case in elimination chains, where denominators are powers of
// the same factors); sign = -1 turns it into subtraction
RationalFunction add_like(const RationalFunction& a, const RationalFunction& b, long sign) {
  const Polynomial &n1 = a.numerator(), &d1 = a.denominator();
  const Polynomial &n2 = b.numerator(), &d2 = b.denominator();
  const Polynomial n2s = sign < 0 ? -n2 : n2;
  if (d1 == d2) return RationalFunction(n1 + n2s, d1);
  if (auto q = d2.divide_exact(d1)) return RationalFunction(n1 * *q + n2s, d2);
  if (auto q = d1.divide_exact(d2)) return RationalFunction(n1 + n2s * *q, d1);
  return RationalFunction(n1 * d2 + n2s * d1, d1 * d2);
}

// peels factors of den off num before a product forms, keeping degrees low
void cross_cancel(Polynomial& num, Polynomial& den) {
  if (den.is_constant() || num.is_zero()) return;
  if (auto q = num.divide_exact(den)) {
    num = std::move(*q);
    den = Polynomial(1);
  }
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return add_like(a, b, +1);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return add_like(a, b, -1);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  Polynomial n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  cross_cancel(n1, d2);
  cross_cancel(n2, d1);
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  require(!b.is_zero(), errc::division_by_zero, "rational function division by zero");
  Polynomial n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  cross_cancel(n1, n2);  // numerators cancel against each other in a quotient
  cross_cancel(d2, d1);
  return RationalFunction(n1 * d2, d1 * n2);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace axial
