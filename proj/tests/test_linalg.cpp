#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "axial/linalg.hpp"

using namespace axial;

namespace {

// independent oracle: determinant by cofactor expansion along the first row
template <class S>
S cofactor_det(const Matrix<S>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  S out(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrix<S> minor = zero_matrix<S>(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    S term = m(0, j) * cofactor_det(minor);
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix<Rational> m = zero_matrix<Rational>(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(d(rng));
  return m;
}

Matrix<RationalFunction> random_rf_matrix(std::mt19937_64& rng, const FunctionFieldContext& ctx,
                                          Eigen::Index n) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::uniform_int_distribution<int> pick(0, 3);
  RationalFunction eta = ctx.variable("eta");
  Matrix<RationalFunction> m = zero_matrix<RationalFunction>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      RationalFunction entry = ctx.of_long(d(rng));
      if (pick(rng) == 0) entry = entry * eta + ctx.of_long(d(rng));
      if (pick(rng) == 1) entry = entry / (eta * eta + ctx.of_long(1));
      m(i, j) = entry;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  Matrix<Rational> m = zero_matrix<Rational>(2, 2);
  m(0, 0) = Rational(2);
  m(0, 1) = Rational(4);
  m(1, 0) = Rational(1);
  m(1, 1) = Rational(2);
  auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<Eigen::Index>{0});
  CHECK(r.reduced(0, 0) == Rational(1));
  CHECK(r.reduced(0, 1) == Rational(2));
  CHECK(r.reduced(1, 0) == Rational(0));
  CHECK(r.reduced(1, 1) == Rational(0));

  Matrix<Rational> id = identity_matrix<Rational>(3);
  auto ri = rref(id);
  CHECK(ri.rank == 3);
  CHECK(same_entries(ri.reduced, id));
}

TEST_CASE("rref over a function field") {
  FunctionFieldContext ctx(canonical_variables());
  RationalFunction eta = ctx.variable("eta");
  Matrix<RationalFunction> m = zero_matrix<RationalFunction>(2, 2);
  m(0, 0) = ctx.of_long(1);
  m(0, 1) = eta;
  m(1, 0) = eta;
  m(1, 1) = eta * eta;
  CHECK(rref(m).rank == 1);
}

TEST_CASE("kernel examples") {
  Matrix<Rational> ones = Matrix<Rational>::Constant(2, 2, Rational(1));
  auto k = kernel_basis(ones);
  REQUIRE(k.size() == 1);
  CHECK(k[0](0) == -k[0](1));
  CHECK(!k[0](0).is_zero());

  CHECK(kernel_basis(identity_matrix<Rational>(3)).empty());
  CHECK(kernel_basis(zero_matrix<Rational>(2, 2)).size() == 2);
}

TEST_CASE("kernel vectors annihilate and count matches") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<int> sz(1, 5);
    Matrix<Rational> m = random_matrix(rng, sz(rng), sz(rng));
    auto r = rref(m);
    auto k = kernel_basis(m);
    CHECK(static_cast<Eigen::Index>(k.size()) == m.cols() - r.rank);
    for (const auto& v : k) CHECK(all_zero((m * v).eval()));
    // kernel vectors are independent by construction: stack and check rank
    if (!k.empty()) {
      Matrix<Rational> km = zero_matrix<Rational>(m.cols(), static_cast<Eigen::Index>(k.size()));
      for (size_t c = 0; c < k.size(); ++c) km.col(static_cast<Eigen::Index>(c)) = k[c];
      CHECK(rank(km) == static_cast<Eigen::Index>(k.size()));
    }
  }
}

TEST_CASE("determinant examples") {
  FunctionFieldContext ctx(canonical_variables());
  RationalFunction alpha = ctx.variable("alpha");
  Matrix<RationalFunction> m = zero_matrix<RationalFunction>(2, 2);
  m(0, 0) = ctx.of_long(1);
  m(0, 1) = alpha;
  m(1, 0) = alpha;
  m(1, 1) = ctx.of_long(1);
  CHECK(determinant(m) == ctx.of_long(1) - alpha * alpha);
  CHECK_THROWS_AS(determinant(zero_matrix<RationalFunction>(2, 3)), AxialError);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(11);
  for (Eigen::Index n = 2; n <= 4; ++n) {
    for (int t = 0; t < 12; ++t) {
      Matrix<Rational> m = random_matrix(rng, n, n);
      CHECK(determinant(m) == cofactor_det(m));
    }
  }
  FunctionFieldContext ctx(canonical_variables());
  for (Eigen::Index n = 2; n <= 3; ++n) {
    for (int t = 0; t < 6; ++t) {
      Matrix<RationalFunction> m = random_rf_matrix(rng, ctx, n);
      CHECK(determinant(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    Matrix<Rational> a = random_matrix(rng, 3, 3);
    Matrix<Rational> b = random_matrix(rng, 3, 3);
    CHECK(determinant((a * b).eval()) == determinant(a) * determinant(b));
  }
}

TEST_CASE("solve examples") {
  Vector<Rational> b = zero_vector<Rational>(3);
  b(0) = Rational(4);
  b(2) = Rational(-2);
  auto x = solve(identity_matrix<Rational>(3), b);
  REQUIRE(x.has_value());
  CHECK(same_entries(*x, b));

  Matrix<Rational> wide = zero_matrix<Rational>(1, 2);
  wide(0, 0) = Rational(1);
  wide(0, 1) = Rational(1);
  Vector<Rational> two = zero_vector<Rational>(1);
  two(0) = Rational(2);
  auto y = solve(wide, two);
  REQUIRE(y.has_value());
  CHECK((*y)(0) == Rational(2));  // free variable pinned to zero
  CHECK((*y)(1) == Rational(0));

  Matrix<Rational> tall = zero_matrix<Rational>(2, 1);
  tall(0, 0) = Rational(1);
  tall(1, 0) = Rational(1);
  Vector<Rational> rhs = zero_vector<Rational>(2);
  rhs(0) = Rational(1);
  rhs(1) = Rational(2);
  CHECK(!solve(tall, rhs).has_value());

  CHECK_THROWS_AS(solve(tall, two), AxialError);
}

TEST_CASE("solve on random consistent systems") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> m = random_matrix(rng, 4, 3);
    Matrix<Rational> xs = random_matrix(rng, 3, 1);
    Vector<Rational> b = m * xs.col(0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(same_entries((m * *x).eval(), b));
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 10; ++t) {
    Matrix<Rational> m = random_matrix(rng, 4, 4);
    if (determinant(m).is_zero()) continue;
    CHECK(same_entries((m * inverse(m)).eval(), identity_matrix<Rational>(4)));
  }
  CHECK_THROWS_AS(inverse(zero_matrix<Rational>(2, 2)), AxialError);

  // inverse over rational functions keeps exact entries
  FunctionFieldContext ctx(canonical_variables());
  Matrix<RationalFunction> m = random_rf_matrix(rng, ctx, 3);
  if (!determinant(m).is_zero()) {
    CHECK(same_entries((m * inverse(m)).eval(), identity_matrix<RationalFunction>(3)));
  }
}

TEST_CASE("rref cross-check between field and fraction-free paths") {
  // the generic path runs fraction-free updates; over Q this must coincide
  // with textbook Gauss-Jordan, which solve() exercises via random systems
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    Matrix<Rational> m = random_matrix(rng, 3, 5);
    auto r = rref(m);
    // every pivot column is a unit vector
    for (Eigen::Index pi = 0; pi < r.rank; ++pi) {
      Eigen::Index c = r.pivot_cols[static_cast<size_t>(pi)];
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        CHECK(r.reduced(i, c) == (i == pi ? Rational(1) : Rational(0)));
      }
    }
    // row space is preserved: each original row solves against the rref rows
    Matrix<Rational> rt = r.reduced.transpose();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      CHECK(solve(rt, m.row(i).transpose().eval()).has_value());
    }
  }
}
