#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/algebra.hpp"

namespace axial {

/// The three adjoint eigenvalues of an axis: 1, eta, 1/2.
enum class Eig : int { one = 0, eta = 1, half = 2 };

inline const char* eig_name(Eig e) {
  switch (e) {
    case Eig::one: return "1";
    case Eig::eta: return "eta";
    case Eig::half: return "1/2";
  }
  return "?";
}

/// Fusion law on the eigenvalue set {1, eta, 1/2}: table(l, m) is the set of
/// eigenvalues allowed in a product of an l-eigenvector and an m-eigenvector.
class FusionLaw {
 public:
  /// 1*1={1}, 1*eta={eta}, 1*1/2={1/2}, eta*eta={1}, eta*1/2={1/2},
  /// 1/2*1/2={eta,1}.
  static FusionLaw pc() {
    FusionLaw law;
    law.set(Eig::one, Eig::one, {Eig::one});
    law.set(Eig::one, Eig::eta, {Eig::eta});
    law.set(Eig::one, Eig::half, {Eig::half});
    law.set(Eig::eta, Eig::eta, {Eig::one});
    law.set(Eig::eta, Eig::half, {Eig::half});
    law.set(Eig::half, Eig::half, {Eig::eta, Eig::one});
    return law;
  }

  bool allows(Eig l, Eig m, Eig out) const {
    return (table_[idx(l)][idx(m)] >> idx(out)) & 1u;
  }

 private:
  std::array<std::array<uint8_t, 3>, 3> table_{};

  static size_t idx(Eig e) { return static_cast<size_t>(e); }
  void set(Eig l, Eig m, std::initializer_list<Eig> outs) {
    uint8_t mask = 0;
    for (Eig o : outs) mask |= static_cast<uint8_t>(1u << idx(o));
    table_[idx(l)][idx(m)] = mask;
    table_[idx(m)][idx(l)] = mask;
  }
};

/// Eigenspace bases of the adjoint of an idempotent, one list per eigenvalue.
/// The dimensions always sum to the algebra dimension (enforced at
/// construction time), so the concatenated eigenbasis is a basis.
template <class S>
struct PeirceDecomposition {
  Vector<S> axis;
  std::vector<Vector<S>> eigen_one, eigen_eta, eigen_half;

  Eigen::Index dim() const {
    return static_cast<Eigen::Index>(eigen_one.size() + eigen_eta.size() + eigen_half.size());
  }

  /// Columns: the 1-eigenvectors, then the eta ones, then the 1/2 ones.
  Matrix<S> eigenbasis() const {
    Matrix<S> m = zero_matrix<S>(axis.size(), dim());
    Eigen::Index c = 0;
    for (const auto& v : eigen_one) m.col(c++) = v;
    for (const auto& v : eigen_eta) m.col(c++) = v;
    for (const auto& v : eigen_half) m.col(c++) = v;
    return m;
  }

  std::vector<Eig> eigenvalue_labels() const {
    std::vector<Eig> out;
    out.insert(out.end(), eigen_one.size(), Eig::one);
    out.insert(out.end(), eigen_eta.size(), Eig::eta);
    out.insert(out.end(), eigen_half.size(), Eig::half);
    return out;
  }
};

/// Splits the algebra into the eigenspaces A_1, A_eta, A_1/2 of ad(axis),
/// each computed as the kernel of (ad(axis) - lambda I). Throws
/// NotDiagonalizable when the dimensions do not add up, NotIdempotent when
/// the axis is not one.
template <class S>
PeirceDecomposition<S> peirce_decompose(const Algebra<S>& alg, const Element<S>& axis) {
  require(is_idempotent(axis), errc::not_idempotent, "axis is not an idempotent");
  const auto& ctx = alg.context();
  const S one = ctx.of_long(1);
  const S half = ctx.of_ratio(1, 2);
  const S eta = alg.eta();
  require(!(eta == one) && !(eta == half), errc::inadmissible_eta,
          "eigenvalues 1, eta, 1/2 must be pairwise distinct");

  Matrix<S> ad = adjoint_matrix(axis);
  const Matrix<S> id = identity_matrix<S>(alg.dim());
  PeirceDecomposition<S> d;
  d.axis = axis.coords();
  d.eigen_one = kernel_basis<S>(ad - id);
  d.eigen_eta = kernel_basis<S>(ad - (id * eta).eval());
  d.eigen_half = kernel_basis<S>(ad - (id * half).eval());
  require(d.dim() == alg.dim(), errc::not_diagonalizable,
          "adjoint eigenspace dimensions sum to " + std::to_string(d.dim()) + " of " +
              std::to_string(alg.dim()));
  return d;
}

/// A primitive axis has a one-dimensional 1-eigenspace spanned by itself.
template <class S>
bool is_primitive(const Algebra<S>& alg, const PeirceDecomposition<S>& d) {
  if (d.eigen_one.size() != 1) return false;
  Matrix<S> pair = zero_matrix<S>(alg.dim(), 2);
  pair.col(0) = d.eigen_one.front();
  pair.col(1) = d.axis;
  return rank(pair) == 1;
}

struct FusionViolation {
  Eig lambda, mu;
  int component;
  std::string coefficient;
};

struct FusionReport {
  std::vector<FusionViolation> violations;
  bool pass() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Multiplies every unordered pair of eigenbasis vectors and decomposes the
/// product over the full eigenbasis; coefficients outside the fused
/// eigenvalue set are violations. Bilinearity makes checking basis vectors
/// sufficient.
template <class S>
FusionReport check_fusion(const Algebra<S>& alg, const PeirceDecomposition<S>& d,
                          const FusionLaw& law) {
  FusionReport report;
  const Matrix<S> basis = d.eigenbasis();
  const Matrix<S> basis_inv = inverse(basis);
  const std::vector<Eig> labels = d.eigenvalue_labels();
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    for (Eigen::Index j = i; j < basis.cols(); ++j) {
      Vector<S> prod = Element<S>::multiply_coords(alg, basis.col(i), basis.col(j));
      Vector<S> comps = basis_inv * prod;
      for (Eigen::Index k = 0; k < comps.size(); ++k) {
        if (comps(k).is_zero()) continue;
        if (law.allows(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)],
                       labels[static_cast<size_t>(k)]))
          continue;
        report.violations.push_back({labels[static_cast<size_t>(i)],
                                     labels[static_cast<size_t>(j)], static_cast<int>(k),
                                     comps(k).str()});
      }
    }
  }
  return report;
}

/// Coefficient of the axis in the eigen-decomposition of x (the projection
/// of x onto A_1 is this coefficient times the axis). Needs a primitive
/// decomposition.
template <class S>
S projection_coefficient(const Algebra<S>& alg, const PeirceDecomposition<S>& d,
                         const Element<S>& x) {
  require(is_primitive(alg, d), errc::not_primitive, "projection needs a primitive axis");
  Vector<S> comps = inverse(d.eigenbasis()) * x.coords();
  // eigen_one holds a single vector proportional to the axis
  const Vector<S>& u = d.eigen_one.front();
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (!d.axis(k).is_zero()) return comps(0) * u(k) / d.axis(k);
  }
  fail(errc::not_primitive, "axis is zero");
}

/// Matrix (acting on coordinate columns) of the Miyamoto involution: the map
/// fixing A_1 + A_eta and negating A_1/2. The result is verified to be an
/// algebra automorphism on all basis pairs.
template <class S>
Matrix<S> miyamoto(const Algebra<S>& alg, const PeirceDecomposition<S>& d) {
  const Matrix<S> basis = d.eigenbasis();
  const Matrix<S> basis_inv = inverse(basis);
  Matrix<S> signs = zero_matrix<S>(d.dim(), d.dim());
  const std::vector<Eig> labels = d.eigenvalue_labels();
  for (Eigen::Index k = 0; k < d.dim(); ++k) {
    signs(k, k) = labels[static_cast<size_t>(k)] == Eig::half ? S(-1) : S(1);
  }
  Matrix<S> tau = basis * signs * basis_inv;
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = i; j < alg.dim(); ++j) {
      Vector<S> lhs = tau * alg.product(i, j);
      Vector<S> rhs = Element<S>::multiply_coords(alg, tau.col(i), tau.col(j));
      require(same_entries(lhs, rhs), errc::not_automorphism,
              "tau(e_i e_j) != tau(e_i) tau(e_j) at i=" + std::to_string(i) +
                  ", j=" + std::to_string(j));
    }
  }
  return tau;
}

/// Closes a set of primitive axes under the Miyamoto involutions of members
/// already in the set until the linear span is the whole algebra, then
/// returns an independent spanning subset in discovery order. Throws
/// SpanIncomplete if the orbit stops growing (or the 4*dim size guard trips)
/// before the span is full.
template <class S>
std::vector<Element<S>> axis_spanning_set(const Algebra<S>& alg,
                                          const std::vector<Element<S>>& axes) {
  require(!axes.empty(), errc::span_incomplete, "no axes supplied");
  const size_t cap = static_cast<size_t>(4 * alg.dim());

  std::vector<Element<S>> found;
  std::vector<std::optional<Matrix<S>>> taus;  // computed on first use
  auto add_axis = [&](const Element<S>& x) -> bool {
    for (const Element<S>& y : found) {
      if (y == x) return false;
    }
    if (found.size() >= cap) return false;
    PeirceDecomposition<S> d = peirce_decompose(alg, x);
    require(is_primitive(alg, d), errc::not_primitive, "inputs must be primitive axes");
    found.push_back(x);
    taus.emplace_back();
    return true;
  };
  auto tau_of = [&](size_t t) -> const Matrix<S>& {
    if (!taus[t]) taus[t] = miyamoto(alg, peirce_decompose(alg, found[t]));
    return *taus[t];
  };
  for (const Element<S>& a : axes) add_axis(a);

  Matrix<S> span = zero_matrix<S>(alg.dim(), 0);
  std::vector<Element<S>> independent;
  auto span_dim = [&]() { return span.cols(); };
  auto absorb = [&](const Element<S>& x) {
    if (in_column_span(span, x.coords())) return;
    span.conservativeResize(Eigen::NoChange, span.cols() + 1);
    span.col(span.cols() - 1) = x.coords();
    independent.push_back(x);
  };
  for (const Element<S>& a : found) absorb(a);

  while (span_dim() < alg.dim()) {
    bool grew = false;
    for (size_t t = 0; t < found.size() && span_dim() < alg.dim(); ++t) {
      for (size_t x = 0; x < found.size() && span_dim() < alg.dim(); ++x) {
        if (x == t) continue;
        Element<S> image = alg.element((tau_of(t) * found[x].coords()).eval());
        if (add_axis(image)) {
          absorb(image);
          grew = true;
        }
      }
    }
    if (span_dim() >= alg.dim()) break;
    if (!grew) {
      fail(errc::span_incomplete,
           "Miyamoto orbit spans only " + std::to_string(span_dim()) + " of " +
               std::to_string(alg.dim()) + " dimensions");
    }
  }
  return independent;
}

/// Symmetric bilinear form given by its Gram matrix over the algebra basis.
template <class S>
struct BilinearForm {
  Matrix<S> gram;

  S operator()(const Vector<S>& x, const Vector<S>& y) const {
    S out(0);
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      if (x(i).is_zero()) continue;
      for (Eigen::Index j = 0; j < gram.cols(); ++j) {
        if (y(j).is_zero()) continue;
        out = out + x(i) * gram(i, j) * y(j);
      }
    }
    return out;
  }
  S operator()(const Element<S>& x, const Element<S>& y) const {
    return (*this)(x.coords(), y.coords());
  }
};

/// Checks (xy,z) = (x,yz) on all basis triples.
template <class S>
bool is_frobenius(const Algebra<S>& alg, const BilinearForm<S>& form) {
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = 0; j < alg.dim(); ++j) {
      for (Eigen::Index k = 0; k < alg.dim(); ++k) {
        S lhs = form(alg.product(i, j), unit_vector<S>(alg.dim(), k));
        S rhs = form(unit_vector<S>(alg.dim(), i), alg.product(j, k));
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

/// Builds the Frobenius form from an independent spanning set of primitive
/// axes: (a_i, a_j) is the projection coefficient of a_j on the 1-eigenspace
/// of a_i, extended bilinearly to the algebra basis. Postconditions checked:
/// symmetry, (a,a)=1 on the input axes, and the Frobenius identity on all
/// basis triples.
template <class S>
BilinearForm<S> frobenius_from_axes(const Algebra<S>& alg,
                                    const std::vector<Element<S>>& axis_basis) {
  const Eigen::Index n = alg.dim();
  require(static_cast<Eigen::Index>(axis_basis.size()) == n, errc::dimension_mismatch,
          "need exactly dim(A) axes");
  Matrix<S> p = zero_matrix<S>(n, n);
  for (Eigen::Index j = 0; j < n; ++j) p.col(j) = axis_basis[static_cast<size_t>(j)].coords();

  Matrix<S> gram_axes = zero_matrix<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    PeirceDecomposition<S> d = peirce_decompose(alg, axis_basis[static_cast<size_t>(i)]);
    require(is_primitive(alg, d), errc::not_primitive, "axis basis must be primitive");
    const Matrix<S> basis_inv = inverse(d.eigenbasis());
    // rescale so that the projection comes out relative to the axis itself
    S unit_scale(0);
    const Vector<S>& u = d.eigen_one.front();
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!d.axis(k).is_zero()) {
        unit_scale = u(k) / d.axis(k);
        break;
      }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      S comp(0);
      for (Eigen::Index k = 0; k < n; ++k) {
        comp = comp + basis_inv(0, k) * axis_basis[static_cast<size_t>(j)].coords()(k);
      }
      gram_axes(i, j) = comp * unit_scale;
    }
  }
  require(same_entries(gram_axes, gram_axes.transpose().eval()), errc::not_symmetric,
          "projection coefficients are not symmetric");
  for (Eigen::Index i = 0; i < n; ++i) {
    require(gram_axes(i, i).is_one(), errc::not_frobenius, "(a,a) != 1 on an input axis");
  }

  const Matrix<S> p_inv = inverse(p);  // throws SingularMatrix when axes are dependent
  BilinearForm<S> form{(p_inv.transpose() * gram_axes * p_inv).eval()};
  require(same_entries(form.gram, form.gram.transpose().eval()), errc::not_symmetric,
          "Gram matrix is not symmetric");
  require(is_frobenius(alg, form), errc::not_frobenius,
          "(xy,z) = (x,yz) fails on a basis triple");
  return form;
}

/// w_axis(x) = (axis, x).
template <class S>
S weight_of(const BilinearForm<S>& form, const Element<S>& axis, const Element<S>& x) {
  return form(axis, x);
}

}  // namespace axial
