#pragma once

#include <utility>
#include <vector>

#include "axial/axial.hpp"

namespace axial {

template <class S>
struct FormValues {
  S alpha, beta, gamma, psi;
};

namespace catalog_detail {

template <class S>
void put(Algebra<S>& alg, int i, int j,
         std::initializer_list<std::pair<int, S>> terms) {
  Vector<S> v = zero_vector<S>(alg.dim());
  for (const auto& [k, c] : terms) v(k) = v(k) + c;
  alg.set_product(i, j, v);
}

template <class Ctx>
void require_admissible(const typename Ctx::scalar_type& eta, const Ctx& ctx) {
  require(is_admissible_eta(eta, ctx), errc::inadmissible_eta,
          "eta must avoid 1 and 1/2 (and -1 in characteristic 3)");
}

}  // namespace catalog_detail

/// The 3-dimensional algebra on (a, b, ab) generated by two primitive axes
/// with (a,b) = alpha.
template <class Ctx, class S = typename Ctx::scalar_type>
Algebra<S> build_two_generated(const Ctx& ctx, const S& eta, const S& alpha) {
  using catalog_detail::put;
  catalog_detail::require_admissible(eta, ctx);
  auto L = [&](long v) { return ctx.of_long(v); };
  const S half = ctx.of_ratio(1, 2);
  const S quarter = ctx.of_ratio(1, 4);

  Algebra<S> alg(ctx, {"a", "b", "ab"}, eta);
  enum { A, B, AB };
  put(alg, A, A, {{A, L(1)}});
  put(alg, B, B, {{B, L(1)}});
  put(alg, A, B, {{AB, L(1)}});
  // a(ab) = 1/2((1-eta) alpha a - eta b + (1+2 eta) ab), b(ab) by the a<->b
  // symmetry (alpha is symmetric in the two axes)
  const S c_own = half * (L(1) - eta) * alpha;
  const S c_other = -half * eta;
  const S c_ab = half * (L(1) + L(2) * eta);
  put(alg, A, AB, {{A, c_own}, {B, c_other}, {AB, c_ab}});
  put(alg, B, AB, {{A, c_other}, {B, c_own}, {AB, c_ab}});
  // (ab)^2 = 1/4(((1-eta)(1-2eta) alpha - eta(1+2eta))(a+b)
  //             + (2 alpha (1-eta)(1+2eta) + 6 eta + 4 eta^2) ab)
  const S d_ends =
      quarter * ((L(1) - eta) * (L(1) - L(2) * eta) * alpha - eta * (L(1) + L(2) * eta));
  const S d_ab = quarter * (L(2) * alpha * (L(1) - eta) * (L(1) + L(2) * eta) +
                            L(6) * eta + L(4) * eta * eta);
  put(alg, AB, AB, {{A, d_ends}, {B, d_ends}, {AB, d_ab}});
  return alg;
}

enum class TwoDimKind { half, negsum };

/// The two 2-dimensional algebras on distinct axes a, b at eta = -1:
/// ab = (a+b)/2 or ab = -a-b.
template <class Ctx, class S = typename Ctx::scalar_type>
Algebra<S> build_two_dim_degenerate(const Ctx& ctx, TwoDimKind kind) {
  using catalog_detail::put;
  const S minus_one = ctx.of_long(-1);
  catalog_detail::require_admissible(minus_one, ctx);
  Algebra<S> alg(ctx, {"a", "b"}, minus_one);
  enum { A, B };
  put(alg, A, A, {{A, ctx.of_long(1)}});
  put(alg, B, B, {{B, ctx.of_long(1)}});
  if (kind == TwoDimKind::half) {
    put(alg, A, B, {{A, ctx.of_ratio(1, 2)}, {B, ctx.of_ratio(1, 2)}});
  } else {
    put(alg, A, B, {{A, minus_one}, {B, minus_one}});
  }
  return alg;
}

/// Basis order shared by both 3-generated algebras.
enum ThreeGenBasis { kA, kB, kC, kAB, kBC, kAC, kABC, kBAC };

/// The 8-dimensional eta = -1 algebra A(alpha, beta, gamma, psi) on the basis
/// (a, b, c, ab, bc, ac, a(bc), b(ac)), products transcribed from its table.
template <class Ctx, class S = typename Ctx::scalar_type>
Algebra<S> build_three_minus_one(const Ctx& ctx, const FormValues<S>& v) {
  using catalog_detail::put;
  const S m1 = ctx.of_long(-1);
  catalog_detail::require_admissible(m1, ctx);
  auto L = [&](long x) { return ctx.of_long(x); };
  const S h = ctx.of_ratio(1, 2);
  const S q = ctx.of_ratio(1, 4);
  const S e = ctx.of_ratio(1, 8);
  const S x = ctx.of_ratio(1, 16);
  const S &al = v.alpha, &be = v.beta, &ga = v.gamma, &ps = v.psi;

  Algebra<S> alg(ctx, {"a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)"}, m1);

  put(alg, kA, kA, {{kA, L(1)}});
  put(alg, kB, kB, {{kB, L(1)}});
  put(alg, kC, kC, {{kC, L(1)}});
  put(alg, kA, kB, {{kAB, L(1)}});
  put(alg, kA, kC, {{kAC, L(1)}});
  put(alg, kB, kC, {{kBC, L(1)}});

  put(alg, kA, kBC, {{kABC, L(1)}});
  put(alg, kB, kAC, {{kBAC, L(1)}});
  put(alg, kC, kAB, {{kA, be}, {kB, ga}, {kC, al}, {kABC, m1}, {kBAC, m1}});

  put(alg, kA, kAB, {{kA, al}, {kB, h}, {kAB, -h}});
  put(alg, kA, kAC, {{kA, ga}, {kC, h}, {kAC, -h}});
  put(alg, kB, kAB, {{kB, al}, {kA, h}, {kAB, -h}});
  put(alg, kB, kBC, {{kB, be}, {kC, h}, {kBC, -h}});
  put(alg, kC, kAC, {{kC, ga}, {kA, h}, {kAC, -h}});
  put(alg, kC, kBC, {{kC, be}, {kB, h}, {kBC, -h}});

  put(alg, kA, kABC, {{kA, ps}, {kBC, h}, {kABC, -h}});
  put(alg, kB, kBAC, {{kB, ps}, {kAC, h}, {kBAC, -h}});

  put(alg, kB, kABC,
      {{kA, q * be},
       {kB, q * (ga - L(2) * ps)},
       {kC, q * L(-3) * al},
       {kAB, q * L(-2) * be},
       {kBC, q * L(6) * al},
       {kAC, -q},
       {kABC, q * L(2)},
       {kBAC, q * L(2)}});
  put(alg, kC, kABC,
      {{kA, q * L(3) * be},
       {kB, -q * ga},
       {kC, q * (L(3) * al - L(2) * ps)},
       {kAB, -q},
       {kBC, q * L(6) * ga},
       {kAC, q * L(-2) * be},
       {kBAC, q * L(-2)}});
  put(alg, kA, kBAC,
      {{kA, q * (be - L(2) * ps)},
       {kB, q * ga},
       {kC, q * L(-3) * al},
       {kAB, q * L(-2) * ga},
       {kBC, -q},
       {kAC, q * L(6) * al},
       {kABC, q * L(2)},
       {kBAC, q * L(2)}});
  put(alg, kC, kBAC,
      {{kA, -q * be},
       {kB, q * L(3) * ga},
       {kC, q * (L(3) * al - L(2) * ps)},
       {kAB, -q},
       {kBC, q * L(-2) * ga},
       {kAC, q * L(6) * be},
       {kABC, q * L(-2)}});

  {
    const S ends = q * (L(6) * al - L(1)), mid = -q * (L(4) * al + L(2));
    put(alg, kAB, kAB, {{kA, ends}, {kB, ends}, {kAB, mid}});
  }
  {
    const S ends = q * (L(6) * be - L(1)), mid = -q * (L(4) * be + L(2));
    put(alg, kBC, kBC, {{kB, ends}, {kC, ends}, {kBC, mid}});
  }
  {
    const S ends = q * (L(6) * ga - L(1)), mid = -q * (L(4) * ga + L(2));
    put(alg, kAC, kAC, {{kA, ends}, {kC, ends}, {kAC, mid}});
  }

  put(alg, kAB, kBC,
      {{kA, q * L(3) * be},
       {kB, q * (L(6) * ps - ga)},
       {kC, q * L(3) * al},
       {kAB, q * L(-2) * be},
       {kBC, q * L(-2) * al},
       {kAC, -q},
       {kBAC, q * L(-2)}});
  put(alg, kBC, kAC,
      {{kA, q * be},
       {kB, q * ga},
       {kC, q * (L(6) * ps - L(3) * al)},
       {kAB, -q},
       {kBC, q * L(-2) * ga},
       {kAC, q * L(-2) * be},
       {kABC, q * L(2)},
       {kBAC, q * L(2)}});
  put(alg, kAB, kAC,
      {{kA, q * (L(6) * ps - be)},
       {kB, q * L(3) * ga},
       {kC, q * L(3) * al},
       {kAB, q * L(-2) * ga},
       {kBC, -q},
       {kAC, q * L(-2) * al},
       {kABC, q * L(-2)}});

  put(alg, kAB, kABC,
      {{kA, e * (L(12) * al * be - L(2) * be + L(6) * ga - L(6) * ps)},
       {kB, e * (L(6) * ps - L(2) * be)},
       {kC, -e},
       {kAB, e * L(-4) * (be + ps)},
       {kBC, e * (L(6) * al + L(1))},
       {kAC, e * L(-2)},
       {kABC, e * (L(2) - L(4) * al)}});
  put(alg, kAB, kBAC,
      {{kA, e * (L(6) * ps - L(2) * ga)},
       {kB, e * (L(12) * al * ga + L(6) * be - L(2) * ga - L(6) * ps)},
       {kC, -e},
       {kAB, e * L(-4) * (ga + ps)},
       {kBC, e * L(-2)},
       {kAC, e * (L(6) * al + L(1))},
       {kBAC, e * (L(2) - L(4) * al)}});
  put(alg, kBC, kABC,
      {{kA, e * (L(4) * be * be - L(2) * be + L(2))},
       {kAB, e * (L(1) - L(6) * be)},
       {kBC, e * L(8) * ps},
       {kAC, e * (L(1) - L(6) * be)},
       {kABC, e * (L(4) * be + L(2))}});
  put(alg, kBC, kBAC,
      {{kA, -e},
       {kB, e * (L(12) * be * ga + L(6) * al - L(2) * ga - L(6) * ps)},
       {kC, e * (L(6) * ps - L(2) * ga)},
       {kAB, e * L(-2)},
       {kBC, e * L(-4) * (ga + ps)},
       {kAC, e * (L(6) * be + L(1))},
       {kBAC, e * (L(2) - L(4) * be)}});
  put(alg, kAC, kABC,
      {{kA, e * (L(12) * be * ga + L(6) * al - L(2) * be - L(6) * ps)},
       {kB, -e},
       {kC, e * (L(6) * ps - L(2) * be)},
       {kAB, e * L(-2)},
       {kBC, e * (L(6) * ga + L(1))},
       {kAC, e * L(-4) * (be + ps)},
       {kABC, e * (L(2) - L(4) * ga)}});
  put(alg, kAC, kBAC,
      {{kB, e * (L(4) * ga * ga - L(2) * ga + L(2))},
       {kAB, e * (L(1) - L(6) * ga)},
       {kBC, e * (L(1) - L(6) * ga)},
       {kAC, e * L(8) * ps},
       {kBAC, e * (L(4) * ga + L(2))}});

  put(alg, kABC, kABC,
      {{kA, x * (L(36) * al * be - L(4) * be * be + L(36) * be * ga - L(24) * be * ps -
                 L(6) * al + L(2) * be - L(6) * ga - L(12) * ps - L(2))},
       {kB, x * (L(1) - L(6) * be)},
       {kC, x * (L(1) - L(6) * be)},
       {kAB, x * L(2) * (L(1) - L(6) * be)},
       {kAC, x * L(2) * (L(1) - L(6) * be)},
       {kBC, x * (L(4) * be + L(24) * ps + L(2))},
       {kABC, x * (L(8) * be - L(16) * ps + L(4))}});
  put(alg, kBAC, kBAC,
      {{kA, x * (L(1) - L(6) * ga)},
       {kC, x * (L(1) - L(6) * ga)},
       {kB, x * (L(36) * al * ga + L(36) * be * ga - L(4) * ga * ga - L(24) * ga * ps -
                 L(6) * al - L(6) * be + L(2) * ga - L(12) * ps - L(2))},
       {kAB, x * (L(2) - L(12) * ga)},
       {kBC, x * (L(2) - L(12) * ga)},
       {kAC, x * (L(4) * ga + L(24) * ps + L(2))},
       {kBAC, x * (L(8) * ga - L(16) * ps + L(4))}});
  put(alg, kABC, kBAC,
      {{kA, x * (L(12) * be * ps - L(6) * al * be - L(2) * be * be - L(14) * be * ga +
                 be + L(6) * ga + L(6) * ps + L(1))},
       {kB, x * (L(12) * ga * ps - L(6) * al * ga - L(14) * be * ga - L(2) * ga * ga +
                 L(6) * be + ga + L(6) * ps + L(1))},
       {kC, x * (L(18) * al * al + L(6) * al * be + L(6) * al * ga - L(36) * al * ps +
                 L(3) * al - L(6) * ps - L(2))},
       {kAB, x * (L(6) * ga - L(6) * al + L(6) * be - L(32) * be * ga + L(12) * ps - L(1))},
       {kBC, x * (L(24) * al * ga - L(6) * al + L(2) * be + L(6) * ga - L(12) * ps - L(1))},
       {kAC, x * (L(24) * al * be - L(6) * al + L(6) * be + L(2) * ga - L(12) * ps - L(1))},
       {kABC, x * (L(8) * ga - L(12) * al - L(4) * be + L(16) * ps - L(4))},
       {kBAC, x * (L(8) * be - L(12) * al - L(4) * ga + L(16) * ps - L(4))}});

  return alg;
}

/// The 8-dimensional algebra for eta != -1 (all form parameters forced to 1),
/// products transcribed from its table.
template <class Ctx, class S = typename Ctx::scalar_type>
Algebra<S> build_three_generic(const Ctx& ctx, const S& eta) {
  using catalog_detail::put;
  catalog_detail::require_admissible(eta, ctx);
  require(!(eta == ctx.of_long(-1)), errc::inadmissible_eta,
          "eta = -1 has its own construction; use the four-parameter family");
  auto L = [&](long x) { return ctx.of_long(x); };
  const S h = ctx.of_ratio(1, 2);
  const S q = ctx.of_ratio(1, 4);
  const S e = ctx.of_ratio(1, 8);
  const S x = ctx.of_ratio(1, 16);
  const S n = eta, n2 = eta * eta;

  Algebra<S> alg(ctx, {"a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)"}, eta);

  put(alg, kA, kA, {{kA, L(1)}});
  put(alg, kB, kB, {{kB, L(1)}});
  put(alg, kC, kC, {{kC, L(1)}});
  put(alg, kA, kB, {{kAB, L(1)}});
  put(alg, kA, kC, {{kAC, L(1)}});
  put(alg, kB, kC, {{kBC, L(1)}});

  put(alg, kA, kBC, {{kABC, L(1)}});
  put(alg, kB, kAC, {{kBAC, L(1)}});
  // c(ab) = (eta+1)(ab+bc+ac) - eta(a+b+c) - a(bc) - b(ac)
  put(alg, kC, kAB,
      {{kAB, n + L(1)},
       {kBC, n + L(1)},
       {kAC, n + L(1)},
       {kA, -n},
       {kB, -n},
       {kC, -n},
       {kABC, L(-1)},
       {kBAC, L(-1)}});

  // x(xy) = 1/2((1-eta)x - eta y + (1+2 eta) xy)
  const S own = h * (L(1) - n), oth = -h * n, mix = h * (L(1) + L(2) * n);
  put(alg, kA, kAB, {{kA, own}, {kB, oth}, {kAB, mix}});
  put(alg, kA, kAC, {{kA, own}, {kC, oth}, {kAC, mix}});
  put(alg, kB, kAB, {{kB, own}, {kA, oth}, {kAB, mix}});
  put(alg, kB, kBC, {{kB, own}, {kC, oth}, {kBC, mix}});
  put(alg, kC, kAC, {{kC, own}, {kA, oth}, {kAC, mix}});
  put(alg, kC, kBC, {{kC, own}, {kB, oth}, {kBC, mix}});
  put(alg, kA, kABC, {{kA, own}, {kBC, oth}, {kABC, mix}});
  put(alg, kB, kBAC, {{kB, own}, {kAC, oth}, {kBAC, mix}});

  put(alg, kB, kABC,
      {{kA, -q * n},
       {kB, q * (L(1) - L(2) * n2)},
       {kC, q * (n - L(2) * n2)},
       {kAB, q * L(2) * n},
       {kBC, q * (L(4) * n2 - L(2) * n)},
       {kAC, -q},
       {kABC, q * L(2)},
       {kBAC, q * L(2)}});
  put(alg, kC, kABC,
      {{kA, q * L(-3) * n},
       {kC, -q * (L(2) * n2 + L(2) * n - L(1))},
       {kAB, q * (L(2) * n + L(1))},
       {kAC, q * (L(2) * n + L(1)) * L(2)},
       {kB, -q * (L(2) * n + L(1)) * n},
       {kBC, q * (L(4) * n2 + L(2))},
       {kBAC, q * L(-2)}});
  put(alg, kA, kBAC,
      {{kA, q * (L(1) - L(2) * n2)},
       {kB, -q * n},
       {kC, q * (n - L(2) * n2)},
       {kAB, q * L(2) * n},
       {kBC, -q},
       {kAC, q * (L(4) * n2 - L(2) * n)},
       {kABC, q * L(2)},
       {kBAC, q * L(2)}});
  put(alg, kC, kBAC,
      {{kB, q * L(-3) * n},
       {kC, -q * (L(2) * n2 + L(2) * n - L(1))},
       {kAB, q * (L(2) * n + L(1))},
       {kBC, q * (L(2) * n + L(1)) * L(2)},
       {kA, -q * (L(2) * n + L(1)) * n},
       {kAC, q * (L(4) * n2 + L(2))},
       {kABC, q * L(-2)}});

  // (xy)^2 = 1/4((1-4 eta)(x+y) + (8 eta+2) xy)
  const S sq_ends = q * (L(1) - L(4) * n), sq_mid = q * (L(8) * n + L(2));
  put(alg, kAB, kAB, {{kA, sq_ends}, {kB, sq_ends}, {kAB, sq_mid}});
  put(alg, kBC, kBC, {{kB, sq_ends}, {kC, sq_ends}, {kBC, sq_mid}});
  put(alg, kAC, kAC, {{kA, sq_ends}, {kC, sq_ends}, {kAC, sq_mid}});

  put(alg, kAB, kBC,
      {{kA, q * L(-3) * n},
       {kC, q * L(-3) * n},
       {kB, q * (L(1) - L(4) * n)},
       {kAB, q * (L(2) * n + L(1)) * L(2)},
       {kBC, q * (L(2) * n + L(1)) * L(2)},
       {kAC, q * (L(2) * n + L(1))},
       {kBAC, q * L(-2)}});
  put(alg, kAB, kAC,
      {{kA, q * (L(1) - L(4) * n)},
       {kB, q * L(-3) * n},
       {kC, q * L(-3) * n},
       {kAB, q * (L(2) * n + L(1)) * L(2)},
       {kBC, q * (L(2) * n + L(1))},
       {kAC, q * (L(2) * n + L(1)) * L(2)},
       {kABC, q * L(-2)}});
  put(alg, kBC, kAC,
      {{kA, -q * n},
       {kB, -q * n},
       {kC, q * (L(1) - L(2) * n)},
       {kAB, -q},
       {kBC, q * L(2) * n},
       {kAC, q * L(2) * n},
       {kABC, q * L(2)},
       {kBAC, q * L(2)}});

  put(alg, kAB, kABC,
      {{kA, e * (L(2) - L(8) * n)},
       {kB, -e * (L(2) * n2 + L(5) * n - L(1))},
       {kC, -e * (L(2) * n2 + n)},
       {kAB, e * (L(10) * n + L(2))},
       {kBC, e * (L(4) * n2 - L(2) * n + L(1))},
       {kAC, e * L(2) * n},
       {kABC, e * (L(4) * n + L(2))}});
  put(alg, kBC, kABC,
      {{kA, e * L(-4) * n},
       {kB, -e * (L(4) * n2 + L(3) * n - L(1))},
       {kC, -e * (L(4) * n2 + L(3) * n - L(1))},
       {kAB, e * (L(4) * n - L(1))},
       {kAC, e * (L(4) * n - L(1))},
       {kBC, e * (L(8) * n2 + L(2) * n + L(2))},
       {kABC, e * L(6)}});
  put(alg, kAC, kABC,
      {{kA, e * (L(2) - L(8) * n)},
       {kB, -e * (L(2) * n2 + n)},
       {kC, -e * (L(2) * n2 + L(5) * n - L(1))},
       {kAB, e * L(2) * n},
       {kBC, e * (L(4) * n2 - L(2) * n + L(1))},
       {kAC, e * (L(10) * n + L(2))},
       {kABC, e * (L(4) * n + L(2))}});
  put(alg, kAB, kBAC,
      {{kA, e * (L(1) - L(5) * n - L(2) * n2)},
       {kB, e * (L(2) - L(8) * n)},
       {kC, -e * (L(2) * n2 + n)},
       {kAB, e * (L(10) * n + L(2))},
       {kBC, e * L(2) * n},
       {kAC, e * (L(4) * n2 - L(2) * n + L(1))},
       {kBAC, e * (L(4) * n + L(2))}});
  put(alg, kBC, kBAC,
      {{kA, -e * (L(2) * n2 + n)},
       {kB, e * (L(2) - L(8) * n)},
       {kC, e * (L(1) - L(5) * n - L(2) * n2)},
       {kAB, e * L(2) * n},
       {kBC, e * (L(10) * n + L(2))},
       {kAC, e * (L(4) * n2 - L(2) * n + L(1))},
       {kBAC, e * (L(4) * n + L(2))}});
  put(alg, kAC, kBAC,
      {{kA, e * (L(1) - L(3) * n - L(4) * n2)},
       {kC, e * (L(1) - L(3) * n - L(4) * n2)},
       {kB, e * L(-4) * n},
       {kAB, e * (L(4) * n - L(1))},
       {kBC, e * (L(4) * n - L(1))},
       {kAC, e * (L(8) * n2 + L(2) * n + L(2))},
       {kBAC, e * L(6)}});

  put(alg, kABC, kABC,
      {{kA, x * (L(4) - L(16) * n)},
       {kB, x * (L(1) - L(2) * n - L(8) * n2)},
       {kC, x * (L(1) - L(2) * n - L(8) * n2)},
       {kAB, x * (L(8) * n - L(2))},
       {kAC, x * (L(8) * n - L(2))},
       {kBC, x * (L(8) * n - L(2)) * (L(2) * n - L(1))},
       {kABC, x * (L(16) * n + L(12))}});
  put(alg, kBAC, kBAC,
      {{kA, x * (L(1) - L(2) * n - L(8) * n2)},
       {kC, x * (L(1) - L(2) * n - L(8) * n2)},
       {kB, x * (L(4) - L(16) * n)},
       {kAB, x * (L(8) * n - L(2))},
       {kBC, x * (L(8) * n - L(2))},
       {kAC, x * (L(8) * n - L(2)) * (L(2) * n - L(1))},
       {kBAC, x * (L(16) * n + L(12))}});
  put(alg, kABC, kBAC,
      {{kA, x * (L(2) - L(8) * n - L(6) * n2)},
       {kB, x * (L(2) - L(8) * n - L(6) * n2)},
       {kC, x * (L(1) - L(12) * n2)},
       {kAB, x * (L(12) * n - L(3))},
       {kBC, x * (L(12) * n2 - L(2) * n - L(1))},
       {kAC, x * (L(12) * n2 - L(2) * n - L(1))},
       {kABC, x * (L(4) * n + L(8))},
       {kBAC, x * (L(4) * n + L(8))}});

  return alg;
}

/// Gram matrix of the eta = -1 family over (a, b, c, ab, bc, ac, a(bc),
/// b(ac)), transcribed entrywise.
template <class Ctx, class S = typename Ctx::scalar_type>
BilinearForm<S> gram_three_minus_one(const Ctx& ctx, const FormValues<S>& v) {
  auto L = [&](long x) { return ctx.of_long(x); };
  const S h = ctx.of_ratio(1, 2);
  const S q = ctx.of_ratio(1, 4);
  const S e = ctx.of_ratio(1, 8);
  const S &al = v.alpha, &be = v.beta, &ga = v.gamma, &ps = v.psi;

  Matrix<S> g = zero_matrix<S>(8, 8);
  auto set = [&](int i, int j, const S& val) {
    g(i, j) = val;
    g(j, i) = val;
  };
  set(kA, kA, L(1));
  set(kA, kB, al);
  set(kA, kC, ga);
  set(kA, kAB, al);
  set(kA, kBC, ps);
  set(kA, kAC, ga);
  set(kA, kABC, ps);
  set(kA, kBAC, al * ga + h * (be - ps));

  set(kB, kB, L(1));
  set(kB, kC, be);
  set(kB, kAB, al);
  set(kB, kBC, be);
  set(kB, kAC, ps);
  set(kB, kABC, al * be + h * (ga - ps));
  set(kB, kBAC, ps);

  set(kC, kC, L(1));
  set(kC, kAB, ps);
  set(kC, kBC, be);
  set(kC, kAC, ga);
  set(kC, kABC, be * ga + h * (al - ps));
  set(kC, kBAC, be * ga + h * (al - ps));

  set(kAB, kAB, h * (L(2) * al * al - al + L(1)));
  set(kAB, kBC, h * (L(2) * al * be + ga - ps));
  set(kAB, kAC, h * (L(2) * al * ga + be - ps));
  set(kAB, kABC, q * (L(4) * al * ps + L(2) * be + ps - L(2) * al * be - ga));
  set(kAB, kBAC, q * (L(4) * al * ps + L(2) * ga + ps - L(2) * al * ga - be));

  set(kBC, kBC, h * (L(2) * be * be - be + L(1)));
  set(kBC, kAC, h * (L(2) * be * ga + al - ps));
  set(kBC, kABC, q * ((L(6) * be - L(1)) * (al + ga) - (L(4) * be + L(2)) * ps));
  set(kBC, kBAC, q * (L(4) * be * ps + L(2) * ga + ps - L(2) * be * ga - al));

  set(kAC, kAC, h * (L(2) * ga * ga - ga + L(1)));
  set(kAC, kABC, q * (L(4) * ga * ps + L(2) * be + ps - L(2) * be * ga - al));
  set(kAC, kBAC, q * ((L(6) * ga - L(1)) * (al + be) - (L(4) * ga + L(2)) * ps));

  set(kABC, kABC,
      e * (L(4) * be * be - L(6) * be * ga - L(6) * al * be + L(4) * be * ps +
           L(8) * ps * ps + al - L(2) * be + ga + L(2) * ps + L(2)));
  set(kABC, kBAC,
      e * (L(8) * al * be * ga + L(6) * al * al - L(6) * al * ps - L(2) * be * be +
           L(6) * be * ga + L(2) * be * ps - L(2) * ga * ga + L(2) * ga * ps -
           L(4) * ps * ps - L(2) * al + be + ga - ps - L(1)));
  set(kBAC, kBAC,
      e * (L(4) * ga * ga - L(6) * al * ga - L(6) * be * ga + L(4) * ga * ps +
           L(8) * ps * ps + al + be - L(2) * ga + L(2) * ps + L(2)));
  return BilinearForm<S>{std::move(g)};
}

/// For eta != -1 every pairing of two basis words equals 1 (each basis word
/// has weight 1 and the form factors through the weight), so the Gram matrix
/// over the standard basis is all ones.
template <class Ctx, class S = typename Ctx::scalar_type>
BilinearForm<S> gram_three_generic(const Ctx& ctx) {
  Matrix<S> g = Matrix<S>::Constant(8, 8, ctx.of_long(1));
  return BilinearForm<S>{std::move(g)};
}

/// 3/2^9 (alpha+beta+gamma-2 psi-1)^4 (12 alpha beta gamma - 2 alpha^2
/// - 2 beta^2 - 2 gamma^2 - 2 psi^2 + 2 alpha beta + 2 beta gamma
/// + 2 alpha gamma - 4 alpha psi - 4 beta psi - 4 gamma psi
/// + alpha + beta + gamma - 2 psi + 1)^3.
template <class Ctx, class S = typename Ctx::scalar_type>
S expected_gram_determinant(const Ctx& ctx, const FormValues<S>& v) {
  auto L = [&](long x) { return ctx.of_long(x); };
  const S &al = v.alpha, &be = v.beta, &ga = v.gamma, &ps = v.psi;
  const S quartic = al + be + ga - L(2) * ps - L(1);
  const S cubic = L(12) * al * be * ga - L(2) * al * al - L(2) * be * be - L(2) * ga * ga -
                  L(2) * ps * ps + L(2) * al * be + L(2) * be * ga + L(2) * al * ga -
                  L(4) * al * ps - L(4) * be * ps - L(4) * ga * ps + al + be + ga -
                  L(2) * ps + L(1);
  S out = ctx.of_ratio(3, 512);
  for (int i = 0; i < 4; ++i) out = out * quartic;
  for (int i = 0; i < 3; ++i) out = out * cubic;
  return out;
}

/// The displayed eigenvectors of ad(a) for a 3-generated algebra: three
/// eta-eigenvectors and four 1/2-eigenvectors. Each is verified against the
/// structure tensor, and together with the axis a they must form a basis
/// whose coordinate matrix has determinant exactly 16(eta - 1/2)^3.
template <class S>
std::pair<std::vector<Vector<S>>, std::vector<Vector<S>>> eigenbasis_theorem2(
    const Algebra<S>& alg, const FormValues<S>& v, const S& eta) {
  const auto& ctx = alg.context();
  auto L = [&](long x) { return ctx.of_long(x); };
  require(alg.dim() == 8, errc::dimension_mismatch, "needs a 3-generated catalog algebra");
  const S &al = v.alpha, &be = v.beta, &ga = v.gamma, &ps = v.psi;

  auto vec = [&](std::initializer_list<std::pair<int, S>> terms) {
    Vector<S> out = zero_vector<S>(8);
    for (const auto& [k, c] : terms) out(k) = c;
    return out;
  };
  std::vector<Vector<S>> eta_vecs{
      vec({{kA, al}, {kB, L(1)}, {kAB, L(-2)}}),
      vec({{kA, ga}, {kC, L(1)}, {kAC, L(-2)}}),
      vec({{kA, ps}, {kBC, L(1)}, {kABC, L(-2)}}),
  };
  std::vector<Vector<S>> half_vecs{
      vec({{kA, al * (eta - L(1))}, {kB, -eta}, {kAB, L(1)}}),
      vec({{kA, ga * (eta - L(1))}, {kC, -eta}, {kAC, L(1)}}),
      vec({{kA, ps * (eta - L(1))}, {kBC, -eta}, {kABC, L(1)}}),
      vec({{kA, (L(2) * eta * eta - L(1)) * (L(2) * ps - be)},
           {kB, -eta * ga},
           {kC, (eta - L(2) * eta * eta) * al},
           {kBC, L(-1)},
           {kBAC, L(2)}}),
  };

  const Matrix<S> ad_a = alg.basis_adjoint(kA);
  auto check = [&](const Vector<S>& u, const S& lambda) {
    require(same_entries((ad_a * u).eval(), (u * lambda).eval()), errc::not_eigenvector,
            "displayed vector is not an exact eigenvector");
  };
  for (const auto& u : eta_vecs) check(u, eta);
  const S half = ctx.of_ratio(1, 2);
  for (const auto& u : half_vecs) check(u, half);

  Matrix<S> rows = zero_matrix<S>(8, 8);
  rows.row(0) = unit_vector<S>(8, kA).transpose();
  for (int i = 0; i < 3; ++i) rows.row(1 + i) = eta_vecs[static_cast<size_t>(i)].transpose();
  for (int i = 0; i < 4; ++i) rows.row(4 + i) = half_vecs[static_cast<size_t>(i)].transpose();
  const S expected = L(16) * (eta - half) * (eta - half) * (eta - half);
  require(determinant(rows) == expected, errc::not_eigenvector,
          "eigenvector matrix determinant is not 16(eta-1/2)^3");

  return {std::move(eta_vecs), std::move(half_vecs)};
}

/// Matrices (acting on coordinate columns over basis a, b, ab) of the two
/// Miyamoto involutions of the 2-generated algebra.
template <class Ctx, class S = typename Ctx::scalar_type>
Matrix<S> expected_miyamoto_two_generated(const Ctx& ctx, const S& eta, const S& alpha,
                                          int axis_index) {
  auto L = [&](long x) { return ctx.of_long(x); };
  const S d = (L(1) - L(2) * eta).inverse();
  Matrix<S> m = zero_matrix<S>(3, 3);
  enum { A, B, AB };
  if (axis_index == 0) {
    // columns are the images of a, b, ab under tau_a
    m(A, A) = L(1);
    m(A, B) = d * L(4) * alpha * (L(1) - eta);
    m(B, B) = d * (L(1) + L(2) * eta);
    m(AB, B) = d * L(-4);
    m(A, AB) = d * L(2) * alpha * (L(1) - eta);
    m(B, AB) = d * L(2) * eta;
    m(AB, AB) = -d * (L(1) + L(2) * eta);
  } else {
    m(B, B) = L(1);
    m(B, A) = d * L(4) * alpha * (L(1) - eta);
    m(A, A) = d * (L(1) + L(2) * eta);
    m(AB, A) = d * L(-4);
    m(B, AB) = d * L(2) * alpha * (L(1) - eta);
    m(A, AB) = d * L(2) * eta;
    m(AB, AB) = -d * (L(1) + L(2) * eta);
  }
  return m;
}

}  // namespace axial
