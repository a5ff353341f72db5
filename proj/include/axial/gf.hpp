#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "axial/errors.hpp"

namespace axial {

/// Element of a prime field GF(p) for an odd prime p < 2^31.
///
/// A value constructed from a bare integer carries no modulus yet; it binds to
/// the modulus of the first bound operand it meets. This lets generic code
/// write `S(0)`, `S(1)` without knowing p.
class Gf {
 public:
  Gf() : r_(0), p_(0) {}
  Gf(long v) : r_(v), p_(0) {}  // NOLINT: implicit unbound constant
  Gf(long long value, uint32_t p) : r_(reduce(value, p)), p_(p) {}

  bool bound() const { return p_ != 0; }
  uint32_t modulus() const { return p_; }
  long long residue() const { return r_; }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Gf inverse() const;

  std::string str() const;

  Gf operator-() const { return bound() ? Gf(-r_, p_) : Gf(-r_); }

  friend Gf operator+(const Gf& a, const Gf& b) { return combine(a, b, a.r_ + b.r_); }
  friend Gf operator-(const Gf& a, const Gf& b) { return combine(a, b, a.r_ - b.r_); }
  friend Gf operator*(const Gf& a, const Gf& b) { return combine(a, b, a.r_ * b.r_); }
  friend Gf operator/(const Gf& a, const Gf& b);

  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf& operator/=(const Gf& o) { return *this = *this / o; }

  friend bool operator==(const Gf& a, const Gf& b);
  friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

 private:
  long long r_;
  uint32_t p_;

  static long long reduce(long long v, uint32_t p);
  /// Common modulus of two operands (0 when both unbound); throws MixedFields.
  static uint32_t unify(const Gf& a, const Gf& b);
  static Gf combine(const Gf& a, const Gf& b, long long raw);
};

std::ostream& operator<<(std::ostream& os, const Gf& x);

/// Deterministic trial-division primality test, enough for p < 2^31.
bool is_prime_u32(uint32_t p);

}  // namespace axial
