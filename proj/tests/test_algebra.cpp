#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "axial/algebra_io.hpp"
#include "axial/catalog.hpp"
#include "axial/identities.hpp"

using namespace axial;

namespace {

const RationalContext kQ;

FormValues<Rational> generic_values() {
  return {Rational(2), Rational(3), Rational(5), Rational(7)};
}

Vector<Rational> coords(std::initializer_list<long> xs) {
  Vector<Rational> v = zero_vector<Rational>(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace

TEST_CASE("multiply follows the structure table") {
  // beta = 1 turns the b*bc row into b + c/2 - bc/2
  Algebra<Rational> alg =
      build_three_minus_one(kQ, {Rational(2), Rational(1), Rational(5), Rational(7)});
  Element<Rational> b = alg.basis_element(kB), bc = alg.basis_element(kBC);
  Vector<Rational> expect = zero_vector<Rational>(8);
  expect(kB) = Rational(1);
  expect(kC) = Rational(1, 2);
  expect(kBC) = Rational(-1, 2);
  CHECK(same_entries((b * bc).coords(), expect));

  Element<Rational> a = alg.basis_element(kA);
  CHECK(a * a == a);

  CHECK_THROWS_AS((void)(a * build_two_dim_degenerate(kQ, TwoDimKind::half).basis_element(0)),
                  AxialError);
}

TEST_CASE("(ab)^2 at eta = 0 from the generic table") {
  Algebra<Rational> alg = build_three_generic(kQ, Rational(0));
  Element<Rational> ab = alg.basis_element(kAB);
  Vector<Rational> expect = zero_vector<Rational>(8);
  expect(kA) = Rational(1, 4);
  expect(kB) = Rational(1, 4);
  expect(kAB) = Rational(1, 2);
  CHECK(same_entries((ab * ab).coords(), expect));
}

TEST_CASE("adjoint matrix") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg =
      build_two_generated(ctx, ctx.variable("eta"), ctx.variable("alpha"));
  Element<RationalFunction> a = alg.basis_element(0);
  Matrix<RationalFunction> ad = adjoint_matrix(a);
  // ad_a applied to b is ab
  Vector<RationalFunction> b = unit_vector<RationalFunction>(3, 1);
  Vector<RationalFunction> ab = unit_vector<RationalFunction>(3, 2);
  CHECK(same_entries((ad * b).eval(), ab));
  CHECK(all_zero(adjoint_matrix(alg.zero())));

  Algebra<Rational> three = build_three_minus_one(kQ, generic_values());
  Matrix<Rational> ad_a = adjoint_matrix(three.basis_element(kA));
  CHECK(same_entries((ad_a * unit_vector<Rational>(8, kBC)).eval(),
                     unit_vector<Rational>(8, kABC)));
}

TEST_CASE("adjoint agrees with multiply on random elements") {
  Algebra<Rational> alg = build_three_minus_one(kQ, generic_values());
  ElementSampler<Rational> sampler(alg, 2024);
  for (int t = 0; t < 10; ++t) {
    Element<Rational> x = sampler.next(), y = sampler.next();
    CHECK(same_entries((adjoint_matrix(x) * y.coords()).eval(), (x * y).coords()));
  }
}

TEST_CASE("commutativity and bilinearity on random elements") {
  Algebra<Rational> alg = build_three_generic(kQ, Rational(2));
  ElementSampler<Rational> sampler(alg, 555);
  for (int t = 0; t < 10; ++t) {
    Element<Rational> x = sampler.next(), y = sampler.next(), z = sampler.next();
    CHECK(x * y == y * x);
    CHECK((x + z) * y == x * y + z * y);
  }
  CHECK(alg.tensor_is_commutative());
}

TEST_CASE("idempotents") {
  Algebra<Rational> alg = build_two_dim_degenerate(kQ, TwoDimKind::half);
  Element<Rational> a = alg.basis_element(0), b = alg.basis_element(1);
  CHECK(is_idempotent(a));
  CHECK(is_idempotent(alg.zero()));
  Element<Rational> mid = Rational(1, 2) * (a + b);
  CHECK(is_idempotent(mid));  // (a+b)/2 = ab is again an idempotent here
  CHECK(a * b == mid);
}

TEST_CASE("principal powers") {
  Algebra<Rational> alg = build_three_generic(kQ, Rational(0));
  Element<Rational> a = alg.basis_element(kA), b = alg.basis_element(kB);
  Element<Rational> x = a + b;
  CHECK(principal_power(x, 1) == x);
  CHECK(principal_power(a, 5) == a);
  CHECK_THROWS_AS(principal_power(x, 0), AxialError);

  // train identity oracle at eta = 0: w(x) = 2, so x^3 = 2 x^2
  Element<Rational> lhs = principal_power(x, 3);
  Element<Rational> rhs = Rational(2) * (x * x);
  CHECK(lhs == rhs);
}

TEST_CASE("closure of the two-generated algebra") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg =
      build_two_generated(ctx, ctx.variable("eta"), ctx.variable("alpha"));
  auto result = subalgebra_closure<RationalFunction>({alg.basis_element(0), alg.basis_element(1)});
  CHECK(result.dim == 3);
  CHECK(result.basis[0] == alg.basis_element(0));
  CHECK(result.basis[1] == alg.basis_element(1));
  CHECK(result.basis[2] == alg.basis_element(0) * alg.basis_element(1));

  auto single = subalgebra_closure<RationalFunction>({alg.basis_element(0)});
  CHECK(single.dim == 1);
}

TEST_CASE("closure of the three-generated algebra is eight dimensional") {
  Algebra<Rational> alg = build_three_minus_one(kQ, generic_values());
  std::vector<Element<Rational>> gens{alg.basis_element(kA), alg.basis_element(kB),
                                      alg.basis_element(kC)};
  auto result = subalgebra_closure(gens);
  CHECK(result.dim == 8);
  // closed under products: every pairwise product solves in the closure span
  Matrix<Rational> span = zero_matrix<Rational>(8, result.dim);
  for (Eigen::Index c = 0; c < result.dim; ++c) span.col(c) = result.basis[static_cast<size_t>(c)].coords();
  for (size_t i = 0; i < result.basis.size(); ++i) {
    for (size_t j = i; j < result.basis.size(); ++j) {
      CHECK(in_column_span(span, (result.basis[i] * result.basis[j]).coords()));
    }
  }
  CHECK_THROWS_AS(subalgebra_closure(gens, 4), AxialError);
}

TEST_CASE("algebra json round trip") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
  json j = algebra_to_json(alg);
  CHECK(peek_field(j).kind == FieldKind::function);
  Algebra<RationalFunction> back = algebra_from_json(j, ctx);
  CHECK(back.basis_labels() == alg.basis_labels());
  CHECK(back.eta() == alg.eta());
  for (Eigen::Index i = 0; i < 8; ++i)
    for (Eigen::Index jj = i; jj < 8; ++jj)
      CHECK(same_entries(back.product(i, jj), alg.product(i, jj)));

  // byte stability of the serialized form
  CHECK(algebra_to_json(alg).dump(2) == j.dump(2));
}

TEST_CASE("loader rejects bad files") {
  json good = algebra_to_json(build_two_dim_degenerate(kQ, TwoDimKind::negsum));

  json conflict = good;
  conflict["structure"].push_back({{"i", 1}, {"j", 0}, {"k", 0}, {"v", "5"}});
  CHECK_THROWS_AS(algebra_from_json(conflict, kQ), AxialError);

  json out_of_range = good;
  out_of_range["structure"].push_back({{"i", 0}, {"j", 2}, {"k", 0}, {"v", "1"}});
  CHECK_THROWS_AS(algebra_from_json(out_of_range, kQ), AxialError);

  json missing = good;
  missing.erase("structure");
  CHECK_THROWS_AS(algebra_from_json(missing, kQ), AxialError);

  json bad_scalar = good;
  bad_scalar["structure"][0]["v"] = "eta";
  CHECK_THROWS_AS(algebra_from_json(bad_scalar, kQ), AxialError);

  // duplicate equal entries are tolerated
  json dup = good;
  json entry = dup["structure"][0];
  std::swap(entry["i"], entry["j"]);
  dup["structure"].push_back(entry);
  CHECK_NOTHROW(algebra_from_json(dup, kQ));
}

TEST_CASE("element constructors validate dimensions") {
  Algebra<Rational> alg = build_two_dim_degenerate(kQ, TwoDimKind::half);
  CHECK_THROWS_AS(alg.element(coords({1, 2, 3})), AxialError);
  CHECK(alg.element(coords({1, 0})) == alg.basis_element(0));
}
