#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "axial/errors.hpp"

namespace axial {

/// Parse tree for the scalar grammar: signed integers, `p/q`, and polynomial
/// expressions in declared variable names with + - * / ^ and parentheses.
struct Expr {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow };
  Kind kind;
  std::string text;  // digits for number, name for variable
  std::unique_ptr<Expr> lhs, rhs;
  uint32_t exponent = 0;
};

/// Parses the grammar; throws ParseError on malformed input.
std::unique_ptr<Expr> parse_expression(std::string_view text);

/// Evaluates a parse tree over the field described by the context.
template <class Ctx>
typename Ctx::scalar_type evaluate(const Expr& e, const Ctx& ctx) {
  using S = typename Ctx::scalar_type;
  switch (e.kind) {
    case Expr::Kind::number:
      return ctx.of_integer_string(e.text);
    case Expr::Kind::variable:
      return ctx.variable(e.text);
    case Expr::Kind::add:
      return evaluate(*e.lhs, ctx) + evaluate(*e.rhs, ctx);
    case Expr::Kind::sub:
      return evaluate(*e.lhs, ctx) - evaluate(*e.rhs, ctx);
    case Expr::Kind::mul:
      return evaluate(*e.lhs, ctx) * evaluate(*e.rhs, ctx);
    case Expr::Kind::div:
      return evaluate(*e.lhs, ctx) / evaluate(*e.rhs, ctx);
    case Expr::Kind::neg:
      return -evaluate(*e.lhs, ctx);
    case Expr::Kind::pow: {
      S base = evaluate(*e.lhs, ctx);
      S out = ctx.of_long(1);
      uint32_t n = e.exponent;
      while (n > 0) {
        if (n & 1) out = out * base;
        n >>= 1;
        if (n) base = base * base;
      }
      return out;
    }
  }
  fail(errc::parse_error, "corrupt expression tree");
}

/// Parses a scalar string over the given field.
template <class Ctx>
typename Ctx::scalar_type parse_scalar(std::string_view text, const Ctx& ctx) {
  return evaluate(*parse_expression(text), ctx);
}

}  // namespace axial
