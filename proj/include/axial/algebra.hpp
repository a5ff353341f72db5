#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

template <class S>
class Element;

/// Finite-dimensional commutative algebra presented by structure constants
/// on a labelled basis: e_i * e_j = sum_k c[i][j][k] e_k.
///
/// The tensor is stored as one left-multiplication matrix per basis vector,
/// ad(i)(k,j) = c[i][j][k], and is symmetrized on construction so the
/// product is commutative by representation. Algebras are immutable once
/// built (builders fill the tensor through set_product before handing the
/// algebra out).
template <class S>
class Algebra {
 public:
  using Context = context_for_t<S>;

  Algebra(Context ctx, std::vector<std::string> basis_labels, S eta)
      : ctx_(std::move(ctx)), labels_(std::move(basis_labels)), eta_(std::move(eta)) {
    require(!labels_.empty(), errc::load_error, "algebra needs at least one basis vector");
    ad_.assign(labels_.size(), zero_matrix<S>(dim(), dim()));
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Context& context() const { return ctx_; }
  const S& eta() const { return eta_; }

  /// Sets e_i * e_j (and e_j * e_i) to the given coordinate vector.
  void set_product(Eigen::Index i, Eigen::Index j, const Vector<S>& coords) {
    require(coords.size() == dim(), errc::dimension_mismatch, "bad product vector length");
    for (Eigen::Index k = 0; k < dim(); ++k) {
      ad_[static_cast<size_t>(i)](k, j) = coords(k);
      ad_[static_cast<size_t>(j)](k, i) = coords(k);
    }
  }

  /// Coordinates of e_i * e_j.
  Vector<S> product(Eigen::Index i, Eigen::Index j) const {
    return ad_[static_cast<size_t>(i)].col(j);
  }

  /// Matrix of left multiplication by e_i.
  const Matrix<S>& basis_adjoint(Eigen::Index i) const { return ad_[static_cast<size_t>(i)]; }

  /// c[i][j][k] = c[j][i][k] for all triples; true by construction for
  /// builder-made algebras, checked explicitly by the JSON loader.
  bool tensor_is_commutative() const {
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = i + 1; j < dim(); ++j)
        if (!same_entries(ad_[static_cast<size_t>(i)].col(j), ad_[static_cast<size_t>(j)].col(i)))
          return false;
    return true;
  }

  Element<S> element(Vector<S> coords) const;
  Element<S> basis_element(Eigen::Index i) const;
  Element<S> zero() const;

  Eigen::Index index_of_label(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<Eigen::Index>(i);
    fail(errc::load_error, "no basis vector labelled '" + label + "'");
  }

 private:
  Context ctx_;
  std::vector<std::string> labels_;
  S eta_;
  std::vector<Matrix<S>> ad_;
};

/// An element of a fixed algebra, held as a coordinate vector over its basis.
template <class S>
class Element {
 public:
  Element(const Algebra<S>* algebra, Vector<S> coords)
      : algebra_(algebra), coords_(std::move(coords)) {
    require(coords_.size() == algebra_->dim(), errc::dimension_mismatch,
            "coordinate vector does not match algebra dimension");
  }

  const Algebra<S>& algebra() const { return *algebra_; }
  const Vector<S>& coords() const { return coords_; }
  bool is_zero() const { return all_zero(coords_); }

  friend Element operator+(const Element& a, const Element& b) {
    a.check_same(b);
    return Element(a.algebra_, a.coords_ + b.coords_);
  }
  friend Element operator-(const Element& a, const Element& b) {
    a.check_same(b);
    return Element(a.algebra_, a.coords_ - b.coords_);
  }
  Element operator-() const { return Element(algebra_, -coords_); }
  friend Element operator*(const S& c, const Element& x) {
    return Element(x.algebra_, (x.coords_ * c).eval());
  }
  friend Element operator*(const Element& a, const Element& b) {
    a.check_same(b);
    return Element(a.algebra_, multiply_coords(*a.algebra_, a.coords_, b.coords_));
  }
  friend bool operator==(const Element& a, const Element& b) {
    a.check_same(b);
    return same_entries(a.coords_, b.coords_);
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Coordinates of x*y in the ambient basis via the structure tensor.
  static Vector<S> multiply_coords(const Algebra<S>& alg, const Vector<S>& x,
                                   const Vector<S>& y) {
    Vector<S> out = zero_vector<S>(alg.dim());
    for (Eigen::Index i = 0; i < alg.dim(); ++i) {
      if (x(i).is_zero()) continue;
      out += x(i) * (alg.basis_adjoint(i) * y);
    }
    return out;
  }

 private:
  const Algebra<S>* algebra_;
  Vector<S> coords_;

  void check_same(const Element& o) const {
    require(algebra_ == o.algebra_, errc::algebra_mismatch,
            "elements belong to different algebras");
  }
};

template <class S>
Element<S> Algebra<S>::element(Vector<S> coords) const {
  return Element<S>(this, std::move(coords));
}

template <class S>
Element<S> Algebra<S>::basis_element(Eigen::Index i) const {
  return Element<S>(this, unit_vector<S>(dim(), i));
}

template <class S>
Element<S> Algebra<S>::zero() const {
  return Element<S>(this, zero_vector<S>(dim()));
}

/// Matrix of left multiplication by x in the algebra basis.
template <class S>
Matrix<S> adjoint_matrix(const Element<S>& x) {
  const Algebra<S>& alg = x.algebra();
  Matrix<S> m = zero_matrix<S>(alg.dim(), alg.dim());
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    if (x.coords()(i).is_zero()) continue;
    m += x.coords()(i) * alg.basis_adjoint(i);
  }
  return m;
}

template <class S>
bool is_idempotent(const Element<S>& x) {
  return x * x == x;
}

/// Left-iterated principal power x^1 = x, x^k = x^{k-1} x.
template <class S>
Element<S> principal_power(const Element<S>& x, int k) {
  require(k >= 1, errc::invalid_exponent, "principal power needs k >= 1");
  Element<S> out = x;
  for (int i = 1; i < k; ++i) out = out * x;
  return out;
}

template <class S>
struct ClosureResult {
  std::vector<Element<S>> basis;
  Eigen::Index dim = 0;
  int iterations = 0;  // products examined
};

/// Grows the span of the generators to a product-closed subspace. Basis pairs
/// (i <= j) are processed in lexicographic order and new directions appended
/// immediately; throws CapExceeded when the basis would grow beyond cap.
template <class S>
ClosureResult<S> subalgebra_closure(const std::vector<Element<S>>& generators, int cap = 64) {
  require(!generators.empty(), errc::load_error, "closure needs at least one generator");
  const Algebra<S>& alg = generators.front().algebra();

  ClosureResult<S> out;
  Matrix<S> span = zero_matrix<S>(alg.dim(), 0);
  auto append = [&](const Element<S>& x) {
    require(static_cast<int>(out.basis.size()) < cap, errc::cap_exceeded,
            "closure exceeded cap " + std::to_string(cap));
    span.conservativeResize(Eigen::NoChange, span.cols() + 1);
    span.col(span.cols() - 1) = x.coords();
    out.basis.push_back(x);
  };
  for (const Element<S>& g : generators) {
    require(&g.algebra() == &alg, errc::algebra_mismatch, "generators from different algebras");
    if (!in_column_span(span, g.coords())) append(g);
  }

  std::set<std::pair<size_t, size_t>> pending;
  auto queue_pairs_with = [&](size_t n) {
    for (size_t k = 0; k <= n; ++k) pending.insert({k, n});
  };
  for (size_t n = 0; n < out.basis.size(); ++n) queue_pairs_with(n);
  while (!pending.empty()) {
    auto [i, j] = *pending.begin();
    pending.erase(pending.begin());
    Element<S> p = out.basis[i] * out.basis[j];
    ++out.iterations;
    if (!in_column_span(span, p.coords())) {
      append(p);
      queue_pairs_with(out.basis.size() - 1);
    }
  }
  out.dim = static_cast<Eigen::Index>(out.basis.size());
  return out;
}

}  // namespace axial
