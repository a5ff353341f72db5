#pragma once

#include <string>

#include <json.hpp>

#include "axial/algebra.hpp"
#include "axial/parse.hpp"

namespace axial {

using nlohmann::json;

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

/// Reads just the field description of an algebra file, for dispatching.
FieldSpec peek_field(const json& j);

template <class S>
std::string scalar_str(const S& s) {
  return s.str();
}

/// {"field": ..., "eta": "...", "basis": [...], "structure": [{i,j,k,v}...]}
/// with only i <= j entries and zero coefficients omitted.
template <class S>
json algebra_to_json(const Algebra<S>& alg) {
  json j;
  j["field"] = field_to_json(alg.context().spec());
  j["eta"] = scalar_str(alg.eta());
  j["basis"] = alg.basis_labels();
  json entries = json::array();
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    for (Eigen::Index jj = i; jj < alg.dim(); ++jj) {
      Vector<S> p = alg.product(i, jj);
      for (Eigen::Index k = 0; k < alg.dim(); ++k) {
        if (p(k).is_zero()) continue;
        entries.push_back({{"i", i}, {"j", jj}, {"k", k}, {"v", scalar_str(p(k))}});
      }
    }
  }
  j["structure"] = std::move(entries);
  return j;
}

/// Loads an algebra over the field the context describes. The structure list
/// is symmetrized; conflicting duplicate entries (in either index order) and
/// out-of-range indices are rejected.
template <class Ctx>
Algebra<typename Ctx::scalar_type> algebra_from_json(const json& j, const Ctx& ctx) {
  using S = typename Ctx::scalar_type;
  require(j.contains("basis") && j["basis"].is_array(), errc::load_error, "missing basis list");
  std::vector<std::string> labels = j["basis"].get<std::vector<std::string>>();
  require(!labels.empty(), errc::load_error, "empty basis list");

  S eta = ctx.of_long(-1);
  if (j.contains("eta")) eta = parse_scalar(j["eta"].get<std::string>(), ctx);

  Algebra<S> alg(ctx, labels, eta);
  const Eigen::Index n = alg.dim();

  std::vector<std::vector<std::vector<std::optional<S>>>> c(
      static_cast<size_t>(n),
      std::vector<std::vector<std::optional<S>>>(static_cast<size_t>(n),
                                                 std::vector<std::optional<S>>(
                                                     static_cast<size_t>(n))));
  require(j.contains("structure") && j["structure"].is_array(), errc::load_error,
          "missing structure list");
  for (const json& e : j["structure"]) {
    require(e.contains("i") && e.contains("j") && e.contains("k") && e.contains("v"),
            errc::load_error, "structure entry needs i, j, k, v");
    long i = e["i"].get<long>(), jj = e["j"].get<long>(), k = e["k"].get<long>();
    require(i >= 0 && i < n && jj >= 0 && jj < n && k >= 0 && k < n, errc::load_error,
            "structure index out of range");
    S v = parse_scalar(e["v"].get<std::string>(), ctx);
    // store symmetrically, rejecting contradictions between (i,j) and (j,i)
    auto a = static_cast<size_t>(std::min(i, jj));
    auto b = static_cast<size_t>(std::max(i, jj));
    auto& slot = c[a][b][static_cast<size_t>(k)];
    if (slot && !(*slot == v)) {
      fail(errc::load_error, "structure constants violate commutativity at (" +
                                 std::to_string(i) + "," + std::to_string(jj) + "," +
                                 std::to_string(k) + ")");
    }
    slot = std::move(v);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index jj = i; jj < n; ++jj) {
      Vector<S> p = zero_vector<S>(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto& slot = c[static_cast<size_t>(i)][static_cast<size_t>(jj)][static_cast<size_t>(k)];
        if (slot) p(k) = *slot;
      }
      alg.set_product(i, jj, p);
    }
  }
  return alg;
}

}  // namespace axial
