#include "axial/gf.hpp"

#include <ostream>

namespace axial {

long long Gf::reduce(long long v, uint32_t p) {
  long long m = static_cast<long long>(p);
  long long r = v % m;
  if (r < 0) r += m;
  return r;
}

uint32_t Gf::unify(const Gf& a, const Gf& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  require(a.p_ == b.p_, errc::mixed_fields,
          "GF(" + std::to_string(a.p_) + ") vs GF(" + std::to_string(b.p_) + ")");
  return a.p_;
}

Gf Gf::combine(const Gf& a, const Gf& b, long long raw) {
  uint32_t p = unify(a, b);
  return p == 0 ? Gf(raw) : Gf(raw, p);
}

Gf Gf::inverse() const {
  require(bound(), errc::mixed_fields, "cannot invert a prime-field constant with no modulus");
  require(r_ != 0, errc::division_by_zero, "inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid
  long long t = 0, new_t = 1;
  long long r = p_, new_r = r_;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return Gf(t, p_);
}

Gf operator/(const Gf& a, const Gf& b) {
  uint32_t p = Gf::unify(a, b);
  if (p == 0) {
    // two unbound constants; only exact integer ratios make sense here
    require(b.r_ != 0, errc::division_by_zero, "division by zero");
    require(b.r_ != 0 && a.r_ % b.r_ == 0, errc::mixed_fields,
            "prime-field division needs a modulus");
    return Gf(a.r_ / b.r_);
  }
  return Gf(a.r_, p) * Gf(b.r_, p).inverse();
}

bool operator==(const Gf& a, const Gf& b) {
  uint32_t p = Gf::unify(a, b);
  if (p == 0) return a.r_ == b.r_;
  return Gf::reduce(a.r_, p) == Gf::reduce(b.r_, p);
}

std::string Gf::str() const { return std::to_string(r_); }

std::ostream& operator<<(std::ostream& os, const Gf& x) { return os << x.str(); }

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace axial
