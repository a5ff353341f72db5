#include "axial/parse.hpp"

#include <cctype>
#include <vector>

namespace axial {

namespace {

struct Token {
  enum class Kind { number, name, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::number, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Token::Kind::name, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '/': k = Token::Kind::slash; break;
      case '^': k = Token::Kind::caret; break;
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      default:
        fail(errc::parse_error, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c)});
    ++i;
  }
  out.push_back({Token::Kind::end, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<Expr> run() {
    auto e = expression();
    expect(Token::Kind::end, "trailing input");
    return e;
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Token::Kind k, const std::string& what) {
    require(peek().kind == k, errc::parse_error,
            what + (peek().text.empty() ? "" : " near '" + peek().text + "'"));
    ++pos_;
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::unique_ptr<Expr> l,
                                    std::unique_ptr<Expr> r) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> expression() {
    std::unique_ptr<Expr> e;
    if (accept(Token::Kind::minus)) {
      e = node(Expr::Kind::neg, term(), nullptr);
    } else {
      accept(Token::Kind::plus);
      e = term();
    }
    for (;;) {
      if (accept(Token::Kind::plus)) {
        e = node(Expr::Kind::add, std::move(e), term());
      } else if (accept(Token::Kind::minus)) {
        e = node(Expr::Kind::sub, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto e = factor();
    for (;;) {
      if (accept(Token::Kind::star)) {
        e = node(Expr::Kind::mul, std::move(e), factor());
      } else if (accept(Token::Kind::slash)) {
        e = node(Expr::Kind::div, std::move(e), factor());
      } else {
        return e;
      }
    }
  }

  std::unique_ptr<Expr> factor() {
    auto e = primary();
    if (accept(Token::Kind::caret)) {
      require(peek().kind == Token::Kind::number, errc::parse_error,
              "exponent must be a nonnegative integer literal");
      Token t = take();
      auto p = node(Expr::Kind::pow, std::move(e), nullptr);
      unsigned long v = 0;
      for (char c : t.text) {
        v = v * 10 + static_cast<unsigned long>(c - '0');
        require(v <= 0xffffu, errc::invalid_exponent, "exponent too large");
      }
      p->exponent = static_cast<uint32_t>(v);
      return p;
    }
    return e;
  }

  std::unique_ptr<Expr> primary() {
    if (peek().kind == Token::Kind::number || peek().kind == Token::Kind::name) {
      Token t = take();
      auto e = std::make_unique<Expr>();
      e->kind = t.kind == Token::Kind::number ? Expr::Kind::number : Expr::Kind::variable;
      e->text = std::move(t.text);
      return e;
    }
    if (accept(Token::Kind::lparen)) {
      auto e = expression();
      expect(Token::Kind::rparen, "expected ')'");
      return e;
    }
    fail(errc::parse_error, peek().text.empty() ? "unexpected end of input"
                                                : "unexpected token '" + peek().text + "'");
  }
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) {
  return Parser(tokenize(text)).run();
}

}  // namespace axial
