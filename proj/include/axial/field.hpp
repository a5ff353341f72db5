#pragma once

#include <memory>
#include <string>
#include <vector>

#include "axial/errors.hpp"
#include "axial/gf.hpp"
#include "axial/rational.hpp"
#include "axial/rational_function.hpp"

namespace axial {

enum class FieldKind { rationals, prime, function };

/// Runtime description of a coefficient field: Q, GF(p), or the field of
/// rational functions over Q in named variables.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  uint32_t p = 0;
  std::vector<std::string> vars;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(uint32_t p);
  static FieldSpec functions(std::vector<std::string> vars);

  /// Accepts the command-line forms "q", "gf:P", and "symbolic".
  static FieldSpec from_cli(const std::string& text);

  std::string describe() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The five canonical parameter names, in their monomial order.
const std::vector<std::string>& canonical_variables();

struct RationalContext {
  using scalar_type = Rational;
  static constexpr long characteristic() { return 0; }
  Rational of_long(long v) const { return Rational(v); }
  Rational of_ratio(long num, long den) const { return Rational(num, den); }
  Rational of_integer_string(const std::string& s) const { return Rational::from_integer_string(s); }
  Rational variable(const std::string& name) const {
    fail(errc::unknown_variable, "no variable '" + name + "' over Q");
  }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

struct PrimeFieldContext {
  uint32_t p = 0;

  using scalar_type = Gf;
  explicit PrimeFieldContext(uint32_t modulus);
  long characteristic() const { return p; }
  Gf of_long(long v) const { return Gf(v, p); }
  Gf of_ratio(long num, long den) const { return Gf(num, p) / Gf(den, p); }
  Gf of_integer_string(const std::string& s) const;
  Gf variable(const std::string& name) const {
    fail(errc::unknown_variable, "no variable '" + name + "' over GF(" + std::to_string(p) + ")");
  }
  FieldSpec spec() const { return FieldSpec::prime(p); }
};

struct FunctionFieldContext {
  Polynomial::VarsPtr vars;

  using scalar_type = RationalFunction;
  explicit FunctionFieldContext(std::vector<std::string> names);
  static constexpr long characteristic() { return 0; }
  RationalFunction of_long(long v) const { return RationalFunction(v); }
  RationalFunction of_ratio(long num, long den) const {
    return RationalFunction(Rational(num, den));
  }
  RationalFunction of_integer_string(const std::string& s) const {
    return RationalFunction(Rational::from_integer_string(s));
  }
  RationalFunction variable(const std::string& name) const;
  FieldSpec spec() const { return FieldSpec::functions(*vars); }
};

template <class S>
struct context_for;
template <>
struct context_for<Rational> { using type = RationalContext; };
template <>
struct context_for<Gf> { using type = PrimeFieldContext; };
template <>
struct context_for<RationalFunction> { using type = FunctionFieldContext; };
template <class S>
using context_for_t = typename context_for<S>::type;

/// Runs f with the context object matching the runtime field description.
template <class F>
decltype(auto) with_field_context(const FieldSpec& spec, F&& f) {
  switch (spec.kind) {
    case FieldKind::rationals: return f(RationalContext{});
    case FieldKind::prime: return f(PrimeFieldContext(spec.p));
    case FieldKind::function: return f(FunctionFieldContext(spec.vars));
  }
  fail(errc::load_error, "corrupt field description");
}

/// An eta is usable when it avoids 1 and 1/2, the characteristic is not two
/// (enforced by the field types), and eta = -1 is refused in characteristic 3
/// where it would coincide with 1/2.
template <class Ctx>
bool is_admissible_eta(const typename Ctx::scalar_type& eta, const Ctx& ctx) {
  if (eta == ctx.of_long(1)) return false;
  if (eta == ctx.of_ratio(1, 2)) return false;
  if (ctx.characteristic() == 3 && eta == ctx.of_long(-1)) return false;
  return true;
}

}  // namespace axial
