#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axial/catalog.hpp"
#include "axial/identities.hpp"

using namespace axial;

namespace {

const RationalContext kQ;

FormValues<Rational> generic_values() {
  return {Rational(2), Rational(3), Rational(5), Rational(7)};
}

FormValues<RationalFunction> symbolic_values(const FunctionFieldContext& ctx) {
  return {ctx.variable("alpha"), ctx.variable("beta"), ctx.variable("gamma"),
          ctx.variable("psi")};
}

}  // namespace

TEST_CASE("a(ax) expansion holds symbolically on both catalog families") {
  FunctionFieldContext ctx(canonical_variables());
  {
    Algebra<RationalFunction> alg = build_three_minus_one(ctx, symbolic_values(ctx));
    BilinearForm<RationalFunction> form = gram_three_minus_one(ctx, symbolic_values(ctx));
    IdentityReport report = check_a_ax(alg, alg.basis_element(kA), form);
    CAPTURE(report.to_json().dump());
    CHECK(report.pass());
  }
  {
    Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
    BilinearForm<RationalFunction> form = gram_three_generic(ctx);
    IdentityReport report = check_a_ax(alg, alg.basis_element(kA), form);
    CHECK(report.pass());
  }
}

TEST_CASE("a(ax) expansion holds on the two-generated algebra") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg =
      build_two_generated(ctx, ctx.variable("eta"), ctx.variable("alpha"));
  auto axes =
      axis_spanning_set<RationalFunction>(alg, {alg.basis_element(0), alg.basis_element(1)});
  BilinearForm<RationalFunction> form = frobenius_from_axes(alg, axes);
  CHECK(check_a_ax(alg, alg.basis_element(0), form).pass());
}

TEST_CASE("eigencomponent pairings") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg = build_three_minus_one(ctx, symbolic_values(ctx));
  BilinearForm<RationalFunction> form = gram_three_minus_one(ctx, symbolic_values(ctx));
  Element<RationalFunction> a = alg.basis_element(kA);

  // trivial pair: the axis has no eta component at all
  CHECK(check_eigencomponent_pairings(alg, a, form, a, a).pass());

  // (b_eta, c_eta) = (alpha gamma + beta - 2 psi)/3 at eta = -1; oracle is a
  // direct form evaluation of the projected components
  {
    PeirceDecomposition<RationalFunction> d = peirce_decompose(alg, a);
    const Matrix<RationalFunction> basis = d.eigenbasis();
    const Matrix<RationalFunction> basis_inv = inverse(basis);
    Vector<RationalFunction> comps = basis_inv * unit_vector<RationalFunction>(8, kB);
    Vector<RationalFunction> b_eta = zero_vector<RationalFunction>(8);
    for (int k = 1; k <= 3; ++k) b_eta += comps(k) * basis.col(k);
    comps = basis_inv * unit_vector<RationalFunction>(8, kC);
    Vector<RationalFunction> c_eta = zero_vector<RationalFunction>(8);
    for (int k = 1; k <= 3; ++k) c_eta += comps(k) * basis.col(k);
    RationalFunction expected =
        (ctx.variable("alpha") * ctx.variable("gamma") + ctx.variable("beta") -
         ctx.of_long(2) * ctx.variable("psi")) /
        ctx.of_long(3);
    CHECK(form(b_eta, c_eta) == expected);
  }
  CHECK(check_eigencomponent_pairings(alg, a, form, alg.basis_element(kB),
                                      alg.basis_element(kC))
            .pass());
  CHECK(check_eigencomponent_pairings_all(alg, a, form).pass());
}

TEST_CASE("half component pairing vanishes at all-ones parameters") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
  BilinearForm<RationalFunction> form = gram_three_generic(ctx);
  Element<RationalFunction> a = alg.basis_element(kA);
  Element<RationalFunction> b = alg.basis_element(kB), c = alg.basis_element(kC);
  CHECK(check_eigencomponent_pairings(alg, a, form, b, c).pass());

  // 2((eta-1)*1 - eta*1 + 1)/(1-2 eta) = 0: the half components pair to zero
  PeirceDecomposition<RationalFunction> d = peirce_decompose(alg, a);
  const Matrix<RationalFunction> basis = d.eigenbasis();
  const Matrix<RationalFunction> basis_inv = inverse(basis);
  auto half_component = [&](Eigen::Index idx) {
    Vector<RationalFunction> comps = basis_inv * unit_vector<RationalFunction>(8, idx);
    Vector<RationalFunction> out = zero_vector<RationalFunction>(8);
    for (int k = 4; k < 8; ++k) out += comps(k) * basis.col(k);
    return out;
  };
  CHECK(form(half_component(kB), half_component(kC)).is_zero());
}

TEST_CASE("triple product identity") {
  FunctionFieldContext ctx(canonical_variables());
  {
    Algebra<RationalFunction> alg = build_three_minus_one(ctx, symbolic_values(ctx));
    BilinearForm<RationalFunction> form = gram_three_minus_one(ctx, symbolic_values(ctx));
    CHECK(check_triple_product(alg, alg.basis_element(kA), form).pass());
  }
  {
    Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
    BilinearForm<RationalFunction> form = gram_three_generic(ctx);
    CHECK(check_triple_product(alg, alg.basis_element(kA), form).pass());
  }
}

TEST_CASE("pseudo-composition identity") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg = build_three_minus_one(ctx, symbolic_values(ctx));
  BilinearForm<RationalFunction> form = gram_three_minus_one(ctx, symbolic_values(ctx));
  IdentityReport report = check_pseudo_composition(alg, form);
  CAPTURE(report.to_json().dump());
  CHECK(report.pass());

  // explicit cubic oracle at rational parameters: x = a + 2b - c
  Algebra<Rational> conc = build_three_minus_one(kQ, generic_values());
  BilinearForm<Rational> gq = gram_three_minus_one(kQ, generic_values());
  Element<Rational> x = conc.basis_element(kA) + Rational(2) * conc.basis_element(kB) -
                        conc.basis_element(kC);
  CHECK(principal_power(x, 3) == gq(x, x) * x);

  // the train check refuses eta = -1 input
  CHECK_THROWS_AS(check_train(conc, gq), AxialError);
}

TEST_CASE("pseudo-composition over prime fields (sampled)") {
  for (uint32_t p : {5u, 7u, 11u}) {
    PrimeFieldContext gf(p);
    FormValues<Gf> v{gf.of_long(2), gf.of_long(3), gf.of_long(5), gf.of_long(7)};
    Algebra<Gf> alg = build_three_minus_one(gf, v);
    BilinearForm<Gf> form = gram_three_minus_one(gf, v);
    IdentityReport report = check_pseudo_composition(alg, form);
    CAPTURE(p);
    CHECK(report.pass());
  }
}

TEST_CASE("train identity symbolically and at sample etas") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
  BilinearForm<RationalFunction> form = gram_three_generic(ctx);
  IdentityReport report = check_train(alg, form);
  CAPTURE(report.to_json().dump());
  CHECK(report.pass());

  for (const Rational& eta :
       {Rational(0), Rational(2), Rational(-2), Rational(1, 3)}) {
    Algebra<Rational> conc = build_three_generic(kQ, eta);
    BilinearForm<Rational> gq = gram_three_generic(kQ);
    CHECK(check_train(conc, gq).pass());
    CHECK(check_weight_homomorphism(conc, gq, conc.basis_element(kA)).pass());
  }

  // characteristic 3: only the linearized identity is asserted
  PrimeFieldContext gf3(3);
  Algebra<Gf> mod3 = build_three_generic(gf3, Gf(0, 3));
  BilinearForm<Gf> g3 = gram_three_generic(gf3);
  IdentityReport r3 = check_train(mod3, g3);
  CHECK(r3.pass());
  CHECK(r3.universe.find("cubic skipped") != std::string::npos);

  // the pseudo-composition check refuses eta != -1 input
  CHECK_THROWS_AS(check_pseudo_composition(build_three_generic(kQ, Rational(0)),
                                           gram_three_generic(kQ)),
                  AxialError);
}

TEST_CASE("(ax)(ay) expansion matches the tables") {
  FunctionFieldContext ctx(canonical_variables());
  {
    Algebra<RationalFunction> alg = build_three_minus_one(ctx, symbolic_values(ctx));
    BilinearForm<RationalFunction> form = gram_three_minus_one(ctx, symbolic_values(ctx));
    CHECK(check_axay(alg, alg.basis_element(kA), form).pass());
  }
  {
    Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
    BilinearForm<RationalFunction> form = gram_three_generic(ctx);
    CHECK(check_axay(alg, alg.basis_element(kA), form).pass());
  }
}

TEST_CASE("fusion restriction for eta != -1") {
  FunctionFieldContext ctx(canonical_variables());
  Algebra<RationalFunction> alg = build_three_generic(ctx, ctx.variable("eta"));
  CHECK(check_fusion_restriction(alg, alg.basis_element(kA)).pass());

  Algebra<Rational> at0 = build_three_generic(kQ, Rational(0));
  CHECK(check_fusion_restriction(at0, at0.basis_element(kA)).pass());

  Algebra<Rational> pc = build_three_minus_one(kQ, generic_values());
  CHECK_THROWS_AS(check_fusion_restriction(pc, pc.basis_element(kA)), AxialError);
}

TEST_CASE("identities are degree-3 homogeneous in the element") {
  Algebra<Rational> alg = build_three_minus_one(kQ, generic_values());
  BilinearForm<Rational> form = gram_three_minus_one(kQ, generic_values());
  ElementSampler<Rational> sampler(alg, 31);
  for (int t = 0; t < 10; ++t) {
    Element<Rational> x = sampler.next();
    Element<Rational> two_x = Rational(2) * x;
    CHECK(principal_power(two_x, 3) == Rational(8) * principal_power(x, 3));
    CHECK(form(two_x, two_x) * two_x == Rational(8) * (form(x, x) * x));
  }
}

TEST_CASE("reports serialize with the documented shape") {
  Algebra<Rational> alg = build_three_generic(kQ, Rational(0));
  BilinearForm<Rational> form = gram_three_generic(kQ);
  IdentityReport report = check_train(alg, form, 42);
  nlohmann::json j = report.to_json();
  CHECK(j["name"] == "train identity");
  CHECK(j["pass"] == true);
  CHECK(j.contains("universe"));
  CHECK(j["violations"].is_array());
  CHECK(j["seed"] == 42);

  // a violating report carries the offending inputs
  Vector<Rational> tweaked = alg.product(kAB, kAB);
  tweaked(kC) = Rational(1);
  alg.set_product(kAB, kAB, tweaked);
  IdentityReport bad = check_train(alg, form, 42);
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.to_json()["violations"].empty());
}
