#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axial/errors.hpp"
#include "axial/rational.hpp"

namespace axial {

/// Multivariate polynomial over Q in a fixed ordered list of named variables.
///
/// Terms are kept in descending graded-lexicographic order (total degree
/// first, then the earlier variable wins), which fixes the canonical printed
/// form and the notion of leading coefficient. A polynomial with no variable
/// list is a plain rational constant and unifies with any variable list.
class Polynomial {
 public:
  using Exponents = std::vector<uint32_t>;
  using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;  // zero
  Polynomial(long c) { if (c != 0) terms_[Exponents{}] = Rational(c); }  // NOLINT
  explicit Polynomial(const Rational& c) { if (!c.is_zero()) terms_[Exponents{}] = c; }

  static Polynomial variable(const VarsPtr& vars, size_t index);
  static Polynomial monomial(const VarsPtr& vars, Exponents exps, const Rational& coeff);

  const VarsPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return is_constant() && constant_value().is_one(); }
  bool is_constant() const;
  /// Requires is_constant(); the zero polynomial yields 0.
  Rational constant_value() const;

  long total_degree() const;  // -1 for the zero polynomial
  const Rational& leading_coefficient() const;
  const Exponents& leading_exponents() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Exact multivariate long division; nullopt when the divisor does not
  /// divide this polynomial. No GCDs involved.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Index of the single variable that occurs, nullopt when none or several.
  std::optional<size_t> single_variable() const;
  /// Monic GCD of two polynomials univariate in the same variable.
  static Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b);

  /// Componentwise minimum exponent vector over all terms (zero poly -> empty).
  Exponents min_exponents() const;
  /// Divides every term by the given monomial (assumes it divides them all).
  Polynomial shifted_down(const Exponents& m) const;

  std::string str() const;

 private:
  VarsPtr vars_;
  TermMap terms_;

  void add_term(const Exponents& e, const Rational& c);
  static bool same_vars(const VarsPtr& a, const VarsPtr& b);
  /// Unifies the variable lists of both operands in place (constants lift).
  static void align(Polynomial& a, Polynomial& b);
  void lift_to(const VarsPtr& vars);
  friend class RationalFunction;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace axial
