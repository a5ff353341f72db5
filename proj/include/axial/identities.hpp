#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/axial.hpp"

namespace axial {

inline constexpr uint64_t kDefaultSeed = 123456789;

/// Reads AXIAL_LAB_SEED when set, otherwise the default.
uint64_t default_seed_from_env();

struct IdentityViolation {
  std::string inputs;
  std::string residual;
};

struct IdentityReport {
  std::string name;
  std::string universe;
  std::vector<IdentityViolation> violations;
  std::optional<uint64_t> seed;

  bool pass() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Random algebra elements with coordinates drawn uniformly from {-9,...,9}.
template <class S>
class ElementSampler {
 public:
  ElementSampler(const Algebra<S>& alg, uint64_t seed) : alg_(&alg), rng_(seed) {}

  Element<S> next() {
    Vector<S> v = zero_vector<S>(alg_->dim());
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (Eigen::Index i = 0; i < alg_->dim(); ++i) v(i) = alg_->context().of_long(coeff(rng_));
    return alg_->element(std::move(v));
  }

 private:
  const Algebra<S>* alg_;
  std::mt19937_64 rng_;
};

namespace identities_detail {

template <class S>
std::string coords_str(const Vector<S>& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i).str();
  os << ")";
  return os.str();
}

template <class S>
void record(IdentityReport& report, const std::string& inputs, const Element<S>& residual) {
  if (residual.is_zero()) return;
  report.violations.push_back({inputs, coords_str(residual.coords())});
}

}  // namespace identities_detail

/// a(ax) = (a,x)(1-eta)/2 a - eta/2 x + (1+2 eta)/2 ax, checked on every
/// basis element and 20 seeded random elements.
template <class S>
IdentityReport check_a_ax(const Algebra<S>& alg, const Element<S>& axis,
                          const BilinearForm<S>& form, uint64_t seed = kDefaultSeed) {
  IdentityReport report{"a(ax) expansion", "all basis elements + 20 random elements", {}, seed};
  const auto& ctx = alg.context();
  const S eta = alg.eta();
  const S half = ctx.of_ratio(1, 2);
  const S one = ctx.of_long(1);
  auto check_one = [&](const Element<S>& x, const std::string& label) {
    Element<S> ax = axis * x;
    Element<S> lhs = axis * ax;
    Element<S> rhs = (form(axis, x) * (one - eta) * half) * axis + (-eta * half) * x +
                     ((one + ctx.of_long(2) * eta) * half) * ax;
    identities_detail::record(report, label, lhs - rhs);
  };
  for (Eigen::Index i = 0; i < alg.dim(); ++i)
    check_one(alg.basis_element(i), "x = " + alg.basis_labels()[static_cast<size_t>(i)]);
  ElementSampler<S> sampler(alg, seed);
  for (int t = 0; t < 20; ++t) check_one(sampler.next(), "x = sample #" + std::to_string(t));
  return report;
}

/// Both displayed pairings of eigencomponents for one pair (x, y):
/// (x_eta, y_eta) = (ag + b - 2p)/(1-2 eta) and
/// (x_1/2, y_1/2) = 2((eta-1) ag - eta b + p)/(1-2 eta)
/// with a = (axis,x), g = (axis,y), b = (x,y), p = (axis,xy).
template <class S>
IdentityReport check_eigencomponent_pairings(const Algebra<S>& alg, const Element<S>& axis,
                                             const BilinearForm<S>& form, const Element<S>& x,
                                             const Element<S>& y) {
  IdentityReport report{"eigencomponent pairings", "one pair", {}, std::nullopt};
  PeirceDecomposition<S> d = peirce_decompose(alg, axis);
  require(is_primitive(alg, d), errc::not_primitive, "pairing lemma needs a primitive axis");
  const Matrix<S> basis = d.eigenbasis();
  const Matrix<S> basis_inv = inverse(basis);
  const std::vector<Eig> labels = d.eigenvalue_labels();

  auto component = [&](const Element<S>& z, Eig which) {
    Vector<S> comps = basis_inv * z.coords();
    Vector<S> out = zero_vector<S>(alg.dim());
    for (Eigen::Index k = 0; k < comps.size(); ++k) {
      if (labels[static_cast<size_t>(k)] == which) out += comps(k) * basis.col(k);
    }
    return alg.element(out);
  };

  const auto& ctx = alg.context();
  const S eta = alg.eta();
  const S one = ctx.of_long(1);
  const S two = ctx.of_long(2);
  const S denom = one - two * eta;
  const S a = form(axis, x), g = form(axis, y), b = form(x, y), p = form(axis, x * y);

  Element<S> xe = component(x, Eig::eta), ye = component(y, Eig::eta);
  Element<S> xh = component(x, Eig::half), yh = component(y, Eig::half);
  S lhs_eta = form(xe, ye);
  S rhs_eta = (a * g + b - two * p) / denom;
  if (!(lhs_eta == rhs_eta)) {
    report.violations.push_back({"eta components", (lhs_eta - rhs_eta).str()});
  }
  S lhs_half = form(xh, yh);
  S rhs_half = two * ((eta - one) * a * g - eta * b + p) / denom;
  if (!(lhs_half == rhs_half)) {
    report.violations.push_back({"half components", (lhs_half - rhs_half).str()});
  }
  return report;
}

/// Runs the pairing check over all unordered basis pairs.
template <class S>
IdentityReport check_eigencomponent_pairings_all(const Algebra<S>& alg, const Element<S>& axis,
                                                 const BilinearForm<S>& form) {
  IdentityReport report{"eigencomponent pairings", "all unordered basis pairs", {}, std::nullopt};
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = i; j < alg.dim(); ++j) {
      IdentityReport one = check_eigencomponent_pairings(alg, axis, form, alg.basis_element(i),
                                                         alg.basis_element(j));
      for (auto& viol : one.violations) {
        viol.inputs = "x = " + alg.basis_labels()[static_cast<size_t>(i)] +
                      ", y = " + alg.basis_labels()[static_cast<size_t>(j)] + ": " + viol.inputs;
        report.violations.push_back(std::move(viol));
      }
    }
  }
  return report;
}

/// a(xy) + x(ay) + y(ax) against its closed form, on all unordered basis
/// pairs, plus the eta = -1 / eta != -1 specializations.
template <class S>
IdentityReport check_triple_product(const Algebra<S>& alg, const Element<S>& axis,
                                    const BilinearForm<S>& form) {
  IdentityReport report{"triple product", "all unordered basis pairs", {}, std::nullopt};
  const auto& ctx = alg.context();
  const S eta = alg.eta();
  const S one = ctx.of_long(1);
  const bool eta_is_minus_one = eta == ctx.of_long(-1);
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = i; j < alg.dim(); ++j) {
      Element<S> x = alg.basis_element(i), y = alg.basis_element(j);
      const std::string pair_label = "x = " + alg.basis_labels()[static_cast<size_t>(i)] +
                                     ", y = " + alg.basis_labels()[static_cast<size_t>(j)];
      Element<S> xy = x * y, ax = axis * x, ay = axis * y;
      Element<S> lhs = axis * xy + x * ay + y * ax;
      const S a = form(axis, x), g = form(axis, y), b = form(x, y), p = form(axis, xy);
      Element<S> rhs = ((one + eta) * (p - a * g) - eta * b) * axis + (-g * eta) * x +
                       (-a * eta) * y + (one + eta) * (xy + g * ax + a * ay);
      identities_detail::record(report, pair_label, lhs - rhs);
      if (eta_is_minus_one) {
        Element<S> cor = b * axis + g * x + a * y;
        identities_detail::record(report, pair_label + " (eta=-1 form)", lhs - cor);
      } else {
        Element<S> cor = (one + eta) * (a * ay + g * ax + xy) -
                         (eta * p) * axis - (eta * g) * x - (eta * a) * y;
        identities_detail::record(report, pair_label + " (weight form)", lhs - cor);
      }
    }
  }
  return report;
}

/// Full linearization x(yz) + y(zx) + z(xy) = (y,z)x + (x,z)y + (x,y)z on all
/// ordered basis triples, then x^3 = (x,x)x on 100 seeded random elements.
template <class S>
IdentityReport check_pseudo_composition(const Algebra<S>& alg, const BilinearForm<S>& form,
                                        uint64_t seed = kDefaultSeed) {
  require(alg.eta() == alg.context().of_long(-1), errc::inadmissible_eta,
          "pseudo-composition law lives at eta = -1");
  IdentityReport report{
      "pseudo-composition", "all ordered basis triples + 100 random elements", {}, seed};
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = 0; j < alg.dim(); ++j) {
      for (Eigen::Index k = 0; k < alg.dim(); ++k) {
        Element<S> x = alg.basis_element(i), y = alg.basis_element(j), z = alg.basis_element(k);
        Element<S> lhs = x * (y * z) + y * (z * x) + z * (x * y);
        Element<S> rhs = form(y, z) * x + form(x, z) * y + form(x, y) * z;
        identities_detail::record(report,
                                  "triple (" + std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(k) + ")",
                                  lhs - rhs);
      }
    }
  }
  ElementSampler<S> sampler(alg, seed);
  for (int t = 0; t < 100; ++t) {
    Element<S> x = sampler.next();
    Element<S> residual = principal_power(x, 3) - form(x, x) * x;
    identities_detail::record(report, "cubic sample #" + std::to_string(t), residual);
  }
  return report;
}

/// Linearized train identity on all ordered basis triples; when 3 is
/// invertible also the cubic x^3 = (eta+1)w(x)x^2 - eta w(x)^2 x on 100
/// seeded random elements. The weight is w(x) = (axis, x).
template <class S>
IdentityReport check_train(const Algebra<S>& alg, const BilinearForm<S>& form,
                           const Element<S>& axis, uint64_t seed = kDefaultSeed) {
  const auto& ctx = alg.context();
  const S eta = alg.eta();
  require(!(eta == ctx.of_long(-1)), errc::inadmissible_eta,
          "train identity lives at eta != -1");
  const bool char3 = ctx.characteristic() == 3;
  IdentityReport report{"train identity",
                        std::string("all ordered basis triples") +
                            (char3 ? " (cubic skipped: characteristic 3)"
                                   : " + 100 random elements"),
                        {},
                        seed};
  auto w = [&](const Element<S>& z) { return form(axis, z); };
  const S one = ctx.of_long(1);
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = 0; j < alg.dim(); ++j) {
      for (Eigen::Index k = 0; k < alg.dim(); ++k) {
        Element<S> x = alg.basis_element(i), y = alg.basis_element(j), z = alg.basis_element(k);
        Element<S> yz = y * z, xz = x * z, xy = x * y;
        Element<S> lhs = x * yz + y * xz + z * xy;
        Element<S> rhs = (eta + one) * (w(x) * yz + w(y) * xz + w(z) * xy) -
                         (w(yz) * eta) * x - (w(xz) * eta) * y - (w(xy) * eta) * z;
        identities_detail::record(report,
                                  "triple (" + std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(k) + ")",
                                  lhs - rhs);
      }
    }
  }
  if (!char3) {
    ElementSampler<S> sampler(alg, seed);
    for (int t = 0; t < 100; ++t) {
      Element<S> x = sampler.next();
      Element<S> x2 = x * x;
      S wx = w(x);
      Element<S> residual = principal_power(x, 3) - ((eta + one) * wx) * x2 + (eta * wx * wx) * x;
      identities_detail::record(report, "cubic sample #" + std::to_string(t), residual);
    }
  }
  return report;
}

/// Variant that picks the first idempotent basis element as the weight axis.
template <class S>
IdentityReport check_train(const Algebra<S>& alg, const BilinearForm<S>& form,
                           uint64_t seed = kDefaultSeed) {
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    Element<S> e = alg.basis_element(i);
    if (is_idempotent(e)) return check_train(alg, form, e, seed);
  }
  fail(errc::not_idempotent, "no idempotent basis element to define the weight");
}

/// (ax)(ay) against its closed form on all unordered basis pairs; the shape
/// of the right side depends on whether eta is -1.
template <class S>
IdentityReport check_axay(const Algebra<S>& alg, const Element<S>& axis,
                          const BilinearForm<S>& form) {
  IdentityReport report{"(ax)(ay) expansion", "all unordered basis pairs", {}, std::nullopt};
  const auto& ctx = alg.context();
  const S eta = alg.eta();
  const S quarter = ctx.of_ratio(1, 4);
  const S two = ctx.of_long(2);
  const bool eta_is_minus_one = eta == ctx.of_long(-1);
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = i; j < alg.dim(); ++j) {
      Element<S> x = alg.basis_element(i), y = alg.basis_element(j);
      Element<S> ax = axis * x, ay = axis * y, xy = x * y;
      Element<S> lhs = ax * ay;
      const S wx = form(axis, x), wy = form(axis, y), wxy = form(axis, xy);
      Element<S> rhs = alg.zero();
      if (eta_is_minus_one) {
        const S six = ctx.of_long(6), three = ctx.of_long(3);
        rhs = quarter * ((six * wxy - three * form(x, y)) * axis + wy * x + wx * y -
                         (two * wy) * ax - (two * wx) * ay - xy + two * (x * ay) +
                         two * (y * ax));
      } else {
        const S one = ctx.of_long(1);
        rhs = quarter * (((one - two * eta) * wxy) * axis - (eta * wy) * x - (eta * wx) * y +
                         (two * eta * wy) * ax + (two * eta * wx) * ay - xy + two * (x * ay) +
                         two * (y * ax));
      }
      identities_detail::record(report,
                                "x = " + alg.basis_labels()[static_cast<size_t>(i)] +
                                    ", y = " + alg.basis_labels()[static_cast<size_t>(j)],
                                lhs - rhs);
    }
  }
  return report;
}

/// For eta != -1: products of eta-eigenvectors vanish and products of
/// 1/2-eigenvectors land inside the eta-eigenspace.
template <class S>
IdentityReport check_fusion_restriction(const Algebra<S>& alg, const Element<S>& axis) {
  require(!(alg.eta() == alg.context().of_long(-1)), errc::inadmissible_eta,
          "fusion restriction applies only for eta != -1");
  IdentityReport report{"fusion restriction", "all eigenbasis pairs", {}, std::nullopt};
  PeirceDecomposition<S> d = peirce_decompose(alg, axis);
  Matrix<S> eta_span = zero_matrix<S>(alg.dim(), static_cast<Eigen::Index>(d.eigen_eta.size()));
  for (size_t c = 0; c < d.eigen_eta.size(); ++c)
    eta_span.col(static_cast<Eigen::Index>(c)) = d.eigen_eta[c];

  for (size_t i = 0; i < d.eigen_eta.size(); ++i) {
    for (size_t j = i; j < d.eigen_eta.size(); ++j) {
      Vector<S> prod = Element<S>::multiply_coords(alg, d.eigen_eta[i], d.eigen_eta[j]);
      if (!all_zero(prod)) {
        report.violations.push_back(
            {"eta pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
             identities_detail::coords_str(prod)});
      }
    }
  }
  for (size_t i = 0; i < d.eigen_half.size(); ++i) {
    for (size_t j = i; j < d.eigen_half.size(); ++j) {
      Vector<S> prod = Element<S>::multiply_coords(alg, d.eigen_half[i], d.eigen_half[j]);
      if (!in_column_span(eta_span, prod)) {
        report.violations.push_back(
            {"half pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
             identities_detail::coords_str(prod)});
      }
    }
  }
  return report;
}

/// w(e_i e_j) = w(e_i) w(e_j) on all basis pairs, and w_axis = w_b for every
/// other basis element b that is itself a primitive idempotent.
template <class S>
IdentityReport check_weight_homomorphism(const Algebra<S>& alg, const BilinearForm<S>& form,
                                         const Element<S>& axis) {
  IdentityReport report{"weight homomorphism", "all basis pairs", {}, std::nullopt};
  auto w = [&](const Element<S>& z) { return form(axis, z); };
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index j = i; j < alg.dim(); ++j) {
      S lhs = w(alg.basis_element(i) * alg.basis_element(j));
      S rhs = w(alg.basis_element(i)) * w(alg.basis_element(j));
      if (!(lhs == rhs)) {
        report.violations.push_back({"pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
                                     (lhs - rhs).str()});
      }
    }
  }
  for (Eigen::Index b = 0; b < alg.dim(); ++b) {
    Element<S> other = alg.basis_element(b);
    if (other == axis || !is_idempotent(other)) continue;
    PeirceDecomposition<S> d = peirce_decompose(alg, other);
    if (!is_primitive(alg, d)) continue;
    for (Eigen::Index i = 0; i < alg.dim(); ++i) {
      S lhs = w(alg.basis_element(i));
      S rhs = form(other, alg.basis_element(i));
      if (!(lhs == rhs)) {
        report.violations.push_back(
            {"axis independence vs " + alg.basis_labels()[static_cast<size_t>(b)] + " at e_" +
                 std::to_string(i),
             (lhs - rhs).str()});
      }
    }
  }
  return report;
}

}  // namespace axial
