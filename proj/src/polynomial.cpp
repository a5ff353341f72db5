#include "axial/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace axial {

namespace {

uint32_t total(const Polynomial::Exponents& e) {
  uint32_t t = 0;
  for (uint32_t x : e) t += x;
  return t;
}

}  // namespace

bool Polynomial::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  uint32_t ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  // same total degree: the monomial with the larger power of the earliest
  // differing variable is the larger one
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    uint32_t ea = i < a.size() ? a[i] : 0;
    uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial Polynomial::variable(const VarsPtr& vars, size_t index) {
  require(vars && index < vars->size(), errc::unknown_variable, "variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(const VarsPtr& vars, Exponents exps, const Rational& coeff) {
  Polynomial p;
  p.vars_ = vars;
  size_t n = vars ? vars->size() : 0;
  require(exps.size() == n, errc::mixed_fields, "exponent vector length mismatch");
  if (!coeff.is_zero()) p.terms_[std::move(exps)] = coeff;
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return total(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(total(terms_.begin()->first));
}

const Rational& Polynomial::leading_coefficient() const {
  static const Rational kZero(0);
  return terms_.empty() ? kZero : terms_.begin()->second;
}

const Polynomial::Exponents& Polynomial::leading_exponents() const {
  static const Exponents kEmpty;
  return terms_.empty() ? kEmpty : terms_.begin()->first;
}

bool Polynomial::same_vars(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void Polynomial::lift_to(const VarsPtr& vars) {
  size_t n = vars ? vars->size() : 0;
  TermMap lifted;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne.resize(n, 0);
    lifted[std::move(ne)] = c;
  }
  terms_ = std::move(lifted);
  vars_ = vars;
}

void Polynomial::align(Polynomial& a, Polynomial& b) {
  if (same_vars(a.vars_, b.vars_)) return;
  bool a_const = !a.vars_ || a.vars_->empty();
  bool b_const = !b.vars_ || b.vars_->empty();
  if (a_const) {
    a.lift_to(b.vars_);
    return;
  }
  if (b_const) {
    b.lift_to(a.vars_);
    return;
  }
  fail(errc::mixed_fields, "polynomials over different variable lists");
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial rhs(o);
  align(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  Polynomial rhs(o);
  align(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial lhs(a), rhs(b);
  Polynomial::align(lhs, rhs);
  Polynomial out;
  out.vars_ = lhs.vars_;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Polynomial::Exponents e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  r.vars_ = vars_;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
  Polynomial result(1);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  Polynomial lhs(a), rhs(b);
  Polynomial::align(lhs, rhs);
  return lhs.terms_ == rhs.terms_;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  require(!divisor.is_zero(), errc::division_by_zero, "polynomial division by zero");
  Polynomial rem(*this), div(divisor);
  align(rem, div);
  Polynomial quot;
  quot.vars_ = rem.vars_;
  const Exponents& dl = div.leading_exponents();
  const Rational& dc = div.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents& rl = rem.leading_exponents();
    Exponents q(rl.size(), 0);
    for (size_t i = 0; i < rl.size(); ++i) {
      if (i < dl.size() ? rl[i] < dl[i] : false) return std::nullopt;
      q[i] = rl[i] - (i < dl.size() ? dl[i] : 0);
    }
    Rational qc = rem.leading_coefficient() / dc;
    Polynomial t = monomial(rem.vars_, q, qc);
    quot += t;
    rem -= t * div;
  }
  return quot;
}

std::optional<size_t> Polynomial::single_variable() const {
  std::optional<size_t> found;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (found && *found != i) return std::nullopt;
      found = i;
    }
  }
  return found;
}

Polynomial Polynomial::gcd_univariate(const Polynomial& a, const Polynomial& b) {
  auto va = a.single_variable();
  auto vb = b.single_variable();
  require(va && vb && *va == *vb && same_vars(a.vars_, b.vars_), errc::mixed_fields,
          "univariate gcd needs a common single variable");
  size_t vi = *va;
  auto dense = [&](const Polynomial& p) {
    std::vector<Rational> c(static_cast<size_t>(p.total_degree()) + 1, Rational(0));
    for (const auto& [e, v] : p.terms_) c[e[vi]] = v;
    return c;
  };
  auto degree = [](const std::vector<Rational>& c) {
    for (size_t i = c.size(); i > 0; --i)
      if (!c[i - 1].is_zero()) return static_cast<long>(i - 1);
    return -1L;
  };
  std::vector<Rational> r0 = dense(a), r1 = dense(b);
  while (degree(r1) >= 0) {
    // r0 mod r1
    long d1 = degree(r1);
    const Rational lc1 = r1[d1];
    while (degree(r0) >= d1) {
      long d0 = degree(r0);
      Rational f = r0[d0] / lc1;
      for (long i = 0; i <= d1; ++i) r0[d0 - d1 + i] -= f * r1[i];
    }
    std::swap(r0, r1);
  }
  long d = degree(r0);
  if (d < 0) return Polynomial(0);
  Polynomial g;
  g.vars_ = a.vars_;
  const Rational lc = r0[d];
  for (long i = 0; i <= d; ++i) {
    if (r0[i].is_zero()) continue;
    Exponents e(a.vars_->size(), 0);
    e[vi] = static_cast<uint32_t>(i);
    g.terms_[std::move(e)] = r0[i] / lc;
  }
  return g;
}

Polynomial::Exponents Polynomial::min_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Polynomial Polynomial::shifted_down(const Exponents& m) const {
  if (m.empty() || std::all_of(m.begin(), m.end(), [](uint32_t x) { return x == 0; }))
    return *this;
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    for (size_t i = 0; i < m.size(); ++i) ne[i] -= m[i];
    r.terms_[std::move(ne)] = c;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    bool negative = coeff < Rational(0);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) coeff = -coeff;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << coeff.str();
    } else if (coeff.is_one()) {
      os << mono;
    } else {
      os << coeff.str() << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace axial
