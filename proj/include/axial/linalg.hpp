#pragma once

#include <optional>
#include <vector>

#include "axial/eigen_support.hpp"

namespace axial {

namespace detail {

/// Row scaling applied before elimination. For rational functions each row is
/// multiplied by the product of its entry denominators, which keeps all
/// fraction-free intermediates polynomial; the returned factor is the scalar
/// the row was multiplied by. Scaling a row by a nonzero scalar changes
/// neither row space, kernel, nor pivot structure.
template <class S>
struct RowClearing {
  template <class M>
  static S clear(M&& /*row*/) {
    return S(1);
  }
};

template <>
struct RowClearing<RationalFunction> {
  template <class M>
  static RationalFunction clear(M&& row) {
    Polynomial factor(1);
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      if (!row(j).denominator().is_one()) factor *= row(j).denominator();
    }
    if (factor.is_one()) return RationalFunction(1);
    RationalFunction f{factor};
    for (Eigen::Index j = 0; j < row.size(); ++j) row(j) *= f;
    return f;
  }
};

/// Kernel vectors are only defined up to scale, so they can be rescaled to a
/// cheaper representative (polynomial entries for rational functions).
template <class S>
void normalize_direction(Vector<S>& /*v*/) {}

inline void normalize_direction(Vector<RationalFunction>& v) {
  RowClearing<RationalFunction>::clear(v);
}

}  // namespace detail

template <class S>
struct RrefResult {
  Matrix<S> reduced;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_cols;
};

/// Reduced row echelon form by fraction-free Gauss-Jordan elimination
/// (one-step Bareiss updates on all off-pivot rows, with a final scaling of
/// the pivot rows). Pivots are chosen as the first nonzero entry in row-major
/// scan order, so results are deterministic.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index i = 0; i < rows; ++i) detail::RowClearing<S>::clear(m.row(i));

  RrefResult<S> out;
  S prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!m(i, col).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != rank) m.row(rank).swap(m.row(pr));
    const S pivot = m(rank, col);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const S head = m(i, col);
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (j == col) continue;
        m(i, j) = (pivot * m(i, j) - head * m(rank, j)) / prev;
      }
      m(i, col) = S(0);
    }
    prev = pivot;
    out.pivot_cols.push_back(col);
    ++rank;
  }
  // all pivot entries now equal the last pivot; scale rows to leading ones
  for (Eigen::Index r = 0; r < rank; ++r) {
    const S inv = S(1) / m(r, out.pivot_cols[static_cast<size_t>(r)]);
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    }
  }
  out.reduced = std::move(m);
  out.rank = rank;
  return out;
}

template <class S>
Eigen::Index rank(const Matrix<S>& m) {
  return rref(m).rank;
}

/// Basis of the right kernel; one vector per free column, with a 1 in the
/// free coordinate and zeros in the other free coordinates.
template <class S>
std::vector<Vector<S>> kernel_basis(const Matrix<S>& m) {
  RrefResult<S> r = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vector<S>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vector<S> v = zero_vector<S>(cols);
    v(f) = S(1);
    for (Eigen::Index pr = 0; pr < r.rank; ++pr) {
      v(r.pivot_cols[static_cast<size_t>(pr)]) = -r.reduced(pr, f);
    }
    detail::normalize_direction(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact determinant by fraction-free Bareiss elimination; rows of rational
/// functions are cleared to polynomials first and the clearing factors are
/// divided back out at the end.
template <class S>
S determinant(const Matrix<S>& m) {
  require(m.rows() == m.cols(), errc::not_square, "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  Matrix<S> a = m;
  S clearing(1);
  for (Eigen::Index i = 0; i < n; ++i) clearing = clearing * detail::RowClearing<S>::clear(a.row(i));

  bool negate = false;
  S prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (!a(i, k).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) return S(0);
    if (pr != k) {
      a.row(k).swap(a.row(pr));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  S det = a(n - 1, n - 1) / clearing;
  return negate ? -det : det;
}

/// Particular solution of m x = b with free variables set to zero; nullopt
/// when the system is inconsistent.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
  require(m.rows() == b.size(), errc::dimension_mismatch, "solve: rows(m) != len(b)");
  Matrix<S> aug = zero_matrix<S>(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RrefResult<S> r = rref(std::move(aug));
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector<S> x = zero_vector<S>(m.cols());
  for (Eigen::Index pr = 0; pr < r.rank; ++pr) {
    x(r.pivot_cols[static_cast<size_t>(pr)]) = r.reduced(pr, m.cols());
  }
  return x;
}

/// True when v lies in the column span of m.
template <class S>
bool in_column_span(const Matrix<S>& m, const Vector<S>& v) {
  return solve(m, v).has_value();
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  require(m.rows() == m.cols(), errc::not_square, "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<S> aug = zero_matrix<S>(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_matrix<S>(n);
  RrefResult<S> r = rref(std::move(aug));
  require(r.rank == n && (n == 0 || r.pivot_cols[static_cast<size_t>(n - 1)] == n - 1),
          errc::singular_matrix, "matrix is singular");
  return r.reduced.rightCols(n);
}

}  // namespace axial
