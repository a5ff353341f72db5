#include "axial/field.hpp"

#include <algorithm>

namespace axial {

FieldSpec FieldSpec::prime(uint32_t p) {
  require(p != 2, errc::load_error, "characteristic two is not supported");
  require(is_prime_u32(p), errc::load_error, "modulus " + std::to_string(p) + " is not prime");
  FieldSpec s;
  s.kind = FieldKind::prime;
  s.p = p;
  return s;
}

FieldSpec FieldSpec::functions(std::vector<std::string> vars) {
  require(!vars.empty(), errc::load_error, "function field needs at least one variable");
  for (const auto& v : vars) {
    require(!v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'),
            errc::load_error, "bad variable name '" + v + "'");
    require(std::count(vars.begin(), vars.end(), v) == 1, errc::load_error,
            "duplicate variable '" + v + "'");
  }
  FieldSpec s;
  s.kind = FieldKind::function;
  s.vars = std::move(vars);
  return s;
}

FieldSpec FieldSpec::from_cli(const std::string& text) {
  if (text == "q") return rationals();
  if (text == "symbolic") return functions(canonical_variables());
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            errc::parse_error, "bad field '" + text + "'");
    unsigned long p = std::stoul(digits);
    require(p < (1ul << 31), errc::load_error, "modulus too large (need p < 2^31)");
    return prime(static_cast<uint32_t>(p));
  }
  fail(errc::parse_error, "unknown field '" + text + "' (expected q, gf:P, or symbolic)");
}

std::string FieldSpec::describe() const {
  switch (kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "GF(" + std::to_string(p) + ")";
    case FieldKind::function: {
      std::string s = "Q(";
      for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
      return s + ")";
    }
  }
  return "?";
}

const std::vector<std::string>& canonical_variables() {
  static const std::vector<std::string> kVars{"eta", "alpha", "beta", "gamma", "psi"};
  return kVars;
}

PrimeFieldContext::PrimeFieldContext(uint32_t modulus) : p(modulus) {
  FieldSpec::prime(modulus);  // validates
}

Gf PrimeFieldContext::of_integer_string(const std::string& s) const {
  mpz_class z;
  try {
    z = mpz_class(s, 10);
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "not an integer literal: '" + s + "'");
  }
  mpz_class r = z % p;
  return Gf(r.get_si(), p);
}

FunctionFieldContext::FunctionFieldContext(std::vector<std::string> names) {
  FieldSpec checked = FieldSpec::functions(std::move(names));
  vars = std::make_shared<const std::vector<std::string>>(std::move(checked.vars));
}

RationalFunction FunctionFieldContext::variable(const std::string& name) const {
  for (size_t i = 0; i < vars->size(); ++i) {
    if ((*vars)[i] == name) return RationalFunction::variable(vars, i);
  }
  fail(errc::unknown_variable, "variable '" + name + "' is not declared in this field");
}

}  // namespace axial
