#pragma once

#include <Eigen/Dense>

#include "axial/field.hpp"

namespace Eigen {

namespace axial_detail {

template <class S>
struct ExactNumTraits : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Literal = S;
  using Nested = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20,
  };
  static inline S epsilon() { return S(0); }
  static inline S dummy_precision() { return S(0); }
  static inline int digits10() { return 0; }
};

}  // namespace axial_detail

template <>
struct NumTraits<axial::Rational> : axial_detail::ExactNumTraits<axial::Rational> {};
template <>
struct NumTraits<axial::Gf> : axial_detail::ExactNumTraits<axial::Gf> {};
template <>
struct NumTraits<axial::Polynomial> : axial_detail::ExactNumTraits<axial::Polynomial> {};
template <>
struct NumTraits<axial::RationalFunction>
    : axial_detail::ExactNumTraits<axial::RationalFunction> {};

}  // namespace Eigen

namespace axial {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Matrix<S> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}

template <class S>
Vector<S> zero_vector(Eigen::Index n) {
  return Vector<S>::Constant(n, S(0));
}

template <class S>
Matrix<S> identity_matrix(Eigen::Index n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
Vector<S> unit_vector(Eigen::Index n, Eigen::Index i) {
  Vector<S> v = zero_vector<S>(n);
  v(i) = S(1);
  return v;
}

template <class A, class B>
bool same_entries(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class A>
bool all_zero(const Eigen::MatrixBase<A>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

}  // namespace axial
