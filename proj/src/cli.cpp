#include "axial/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "axial/algebra_io.hpp"
#include "axial/catalog.hpp"
#include "axial/identities.hpp"

namespace axial {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitInadmissibleEta = 3;
constexpr int kExitLoadFailure = 4;

struct BuildOptions {
  std::string family;
  std::string field = "q";
  std::string out;
  std::optional<std::string> eta, alpha, beta, gamma, psi;
};

struct VerifyOptions {
  std::string path;
  std::string suite = "all";
  std::string axis = "a";
  uint64_t seed = 0;
  bool json_output = false;
};

struct ReportOptions {
  std::string path;
  std::string what;
  std::string axis = "a";
  std::string generators = "a,b,c";
  bool check_determinant = false;
  bool json_output = false;
};

/// Parameter resolution for `build`: an explicit flag wins, the symbolic
/// field falls back to its own variable, concrete fields to the documented
/// default value.
template <class Ctx>
typename Ctx::scalar_type resolve_param(const Ctx& ctx, const std::optional<std::string>& flag,
                                        const char* var_name, long fallback) {
  if (flag) return parse_scalar(*flag, ctx);
  if constexpr (std::is_same_v<Ctx, FunctionFieldContext>) {
    return ctx.variable(var_name);
  } else {
    return ctx.of_long(fallback);
  }
}

template <class Ctx>
int do_build(const Ctx& ctx, const BuildOptions& opt) {
  using S = typename Ctx::scalar_type;
  json out;
  if (opt.family == "two-gen") {
    S eta = resolve_param(ctx, opt.eta, "eta", -1);
    S alpha = resolve_param(ctx, opt.alpha, "alpha", 2);
    out = algebra_to_json(build_two_generated(ctx, eta, alpha));
  } else if (opt.family == "two-dim-half" || opt.family == "two-dim-negsum") {
    if (opt.eta && !(parse_scalar(*opt.eta, ctx) == ctx.of_long(-1))) {
      std::cerr << "error: this family is defined at eta = -1\n";
      return kExitBadFlags;
    }
    TwoDimKind kind = opt.family == "two-dim-half" ? TwoDimKind::half : TwoDimKind::negsum;
    out = algebra_to_json(build_two_dim_degenerate(ctx, kind));
  } else if (opt.family == "three-minus-one") {
    if (opt.eta && !(parse_scalar(*opt.eta, ctx) == ctx.of_long(-1))) {
      std::cerr << "error: this family is defined at eta = -1\n";
      return kExitBadFlags;
    }
    FormValues<S> v{resolve_param(ctx, opt.alpha, "alpha", 2),
                    resolve_param(ctx, opt.beta, "beta", 3),
                    resolve_param(ctx, opt.gamma, "gamma", 5),
                    resolve_param(ctx, opt.psi, "psi", 7)};
    out = algebra_to_json(build_three_minus_one(ctx, v));
  } else if (opt.family == "three-generic") {
    S eta = resolve_param(ctx, opt.eta, "eta", 0);
    out = algebra_to_json(build_three_generic(ctx, eta));
  } else {
    std::cerr << "error: unknown family '" << opt.family
              << "' (expected two-gen, two-dim-half, two-dim-negsum, three-minus-one, "
                 "three-generic)\n";
    return kExitBadFlags;
  }

  std::ofstream f(opt.out);
  if (!f) {
    std::cerr << "error: cannot write '" << opt.out << "'\n";
    return kExitBadFlags;
  }
  f << out.dump(2) << "\n";
  return kExitOk;
}

struct CheckOutcome {
  std::string name;
  bool pass;
  json detail;
};

class CheckList {
 public:
  void add(const std::string& name, bool pass, json detail = json::object()) {
    outcomes_.push_back({name, pass, std::move(detail)});
  }
  void add(const IdentityReport& report) {
    outcomes_.push_back({report.name, report.pass(), report.to_json()});
  }

  /// Runs fn and records a failed check instead of propagating AxialError.
  template <class F>
  void guarded(const std::string& name, F&& fn) {
    try {
      fn();
    } catch (const AxialError& e) {
      add(name, false, {{"error", e.what()}});
    }
  }

  bool all_pass() const {
    for (const auto& o : outcomes_) {
      if (!o.pass) return false;
    }
    return true;
  }

  int finish(bool json_output) const {
    if (json_output) {
      json arr = json::array();
      for (const auto& o : outcomes_) {
        json entry = o.detail;
        entry["name"] = o.name;
        entry["pass"] = o.pass;
        arr.push_back(std::move(entry));
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& o : outcomes_) {
        std::cout << (o.pass ? "PASS  " : "FAIL  ") << o.name << "\n";
        if (!o.pass && o.detail.contains("violations")) {
          for (const auto& v : o.detail["violations"]) {
            std::cout << "      " << v.dump() << "\n";
          }
        }
        if (!o.pass && o.detail.contains("error")) {
          std::cout << "      " << o.detail["error"].get<std::string>() << "\n";
        }
      }
    }
    return all_pass() ? kExitOk : kExitViolations;
  }

 private:
  std::vector<CheckOutcome> outcomes_;
};

template <class S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
void print_matrix(const Matrix<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::cout << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) std::cout << (j ? ", " : "") << m(i, j).str();
    std::cout << "]\n";
  }
}

/// Seed axes for form construction: every basis element that is a primitive
/// idempotent.
template <class S>
std::vector<Element<S>> basis_axes(const Algebra<S>& alg) {
  std::vector<Element<S>> axes;
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    Element<S> e = alg.basis_element(i);
    if (!is_idempotent(e)) continue;
    try {
      if (is_primitive(alg, peirce_decompose(alg, e))) axes.push_back(e);
    } catch (const AxialError&) {
      // not diagonalizable over {1, eta, 1/2}; unusable as a form seed
    }
  }
  return axes;
}

template <class S>
BilinearForm<S> form_from_basis_axes(const Algebra<S>& alg) {
  std::vector<Element<S>> axes = basis_axes(alg);
  require(!axes.empty(), errc::span_incomplete, "no primitive idempotent basis elements");
  return frobenius_from_axes(alg, axis_spanning_set(alg, axes));
}

template <class S>
void run_peirce_suite(const Algebra<S>& alg, const Element<S>& axis, CheckList& checks) {
  checks.guarded("peirce decomposition", [&] {
    PeirceDecomposition<S> d = peirce_decompose(alg, axis);
    json detail{{"dims",
                 {static_cast<int>(d.eigen_one.size()), static_cast<int>(d.eigen_eta.size()),
                  static_cast<int>(d.eigen_half.size())}}};
    checks.add("peirce decomposition", true, detail);
    checks.add("axis is primitive", is_primitive(alg, d));
  });
}

template <class S>
void run_fusion_suite(const Algebra<S>& alg, const Element<S>& axis, CheckList& checks) {
  checks.guarded("fusion law", [&] {
    PeirceDecomposition<S> d = peirce_decompose(alg, axis);
    FusionReport report = check_fusion(alg, d, FusionLaw::pc());
    checks.add("fusion law", report.pass(), report.to_json());
    if (!(alg.eta() == alg.context().of_long(-1))) {
      checks.add(check_fusion_restriction(alg, axis));
    }
  });
}

template <class S>
void run_frobenius_suite(const Algebra<S>& alg, const Element<S>& axis, CheckList& checks) {
  checks.guarded("frobenius form", [&] {
    BilinearForm<S> form = form_from_basis_axes(alg);
    checks.add("frobenius form", true, {{"gram", matrix_to_json(form.gram)}});

    PeirceDecomposition<S> d = peirce_decompose(alg, axis);
    Matrix<S> tau = miyamoto(alg, d);
    checks.add("form is miyamoto invariant",
               same_entries((tau.transpose() * form.gram * tau).eval(), form.gram));

    bool orthogonal = true;
    const Matrix<S> basis = d.eigenbasis();
    const std::vector<Eig> labels = d.eigenvalue_labels();
    for (Eigen::Index i = 0; i < basis.cols() && orthogonal; ++i) {
      for (Eigen::Index j = i + 1; j < basis.cols() && orthogonal; ++j) {
        if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)]) continue;
        orthogonal = form(basis.col(i).eval(), basis.col(j).eval()).is_zero();
      }
    }
    checks.add("eigenspaces are orthogonal", orthogonal);
  });
}

template <class S>
void run_identities_suite(const Algebra<S>& alg, const Element<S>& axis, uint64_t seed,
                          CheckList& checks) {
  checks.guarded("identities", [&] {
    BilinearForm<S> form = form_from_basis_axes(alg);
    checks.add(check_a_ax(alg, axis, form, seed));
    checks.add(check_eigencomponent_pairings_all(alg, axis, form));
    checks.add(check_triple_product(alg, axis, form));
    checks.add(check_axay(alg, axis, form));
    if (alg.eta() == alg.context().of_long(-1)) {
      checks.add(check_pseudo_composition(alg, form, seed));
    } else {
      checks.add(check_train(alg, form, axis, seed));
      checks.add(check_fusion_restriction(alg, axis));
      checks.add(check_weight_homomorphism(alg, form, axis));
    }
  });
}

template <class Ctx>
int do_verify(const Ctx& ctx, const json& file, const VerifyOptions& opt) {
  using S = typename Ctx::scalar_type;
  Algebra<S> alg = algebra_from_json(file, ctx);
  Eigen::Index axis_index;
  try {
    axis_index = alg.index_of_label(opt.axis);
  } catch (const AxialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }
  Element<S> axis = alg.basis_element(axis_index);

  CheckList checks;
  if (opt.suite == "peirce" || opt.suite == "all") run_peirce_suite(alg, axis, checks);
  if (opt.suite == "fusion" || opt.suite == "all") run_fusion_suite(alg, axis, checks);
  if (opt.suite == "frobenius" || opt.suite == "all") run_frobenius_suite(alg, axis, checks);
  if (opt.suite == "identities" || opt.suite == "all")
    run_identities_suite(alg, axis, opt.seed, checks);
  return checks.finish(opt.json_output);
}

template <class Ctx>
int do_report(const Ctx& ctx, const json& file, const ReportOptions& opt) {
  using S = typename Ctx::scalar_type;
  Algebra<S> alg = algebra_from_json(file, ctx);
  json out;
  bool ok = true;

  if (opt.what == "peirce") {
    Element<S> axis = alg.basis_element(alg.index_of_label(opt.axis));
    PeirceDecomposition<S> d = peirce_decompose(alg, axis);
    out["dims"] = {static_cast<int>(d.eigen_one.size()), static_cast<int>(d.eigen_eta.size()),
                   static_cast<int>(d.eigen_half.size())};
    auto vecs = [&](const std::vector<Vector<S>>& vs) {
      json arr = json::array();
      for (const auto& v : vs) {
        json row = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).str());
        arr.push_back(std::move(row));
      }
      return arr;
    };
    out["eigen_1"] = vecs(d.eigen_one);
    out["eigen_eta"] = vecs(d.eigen_eta);
    out["eigen_half"] = vecs(d.eigen_half);
    if (!opt.json_output) {
      std::cout << "peirce dims at axis " << opt.axis << ": " << d.eigen_one.size() << "/"
                << d.eigen_eta.size() << "/" << d.eigen_half.size() << "\n";
    }
  } else if (opt.what == "gram") {
    BilinearForm<S> form = form_from_basis_axes(alg);
    out["gram"] = matrix_to_json(form.gram);
    if (!opt.json_output) print_matrix(form.gram);
    if (opt.check_determinant) {
      S det = determinant(form.gram);
      out["determinant"] = det.str();
      if (!opt.json_output) std::cout << "determinant: " << det.str() << "\n";
      if (alg.eta() == ctx.of_long(-1) && alg.dim() >= 3) {
        Element<S> a = alg.basis_element(0), b = alg.basis_element(1), c = alg.basis_element(2);
        FormValues<S> v{form(a, b), form(b, c), form(a, c), form(a, b * c)};
        bool matches = det == expected_gram_determinant(ctx, v);
        out["matches_formula"] = matches;
        ok = ok && matches;
        if (!opt.json_output)
          std::cout << "matches formula: " << (matches ? "true" : "false") << "\n";
      } else {
        out["matches_formula"] = nullptr;
        if (!opt.json_output)
          std::cout << "matches formula: n/a (closed form applies at eta = -1)\n";
      }
    }
  } else if (opt.what == "closure") {
    std::vector<Element<S>> gens;
    std::stringstream ss(opt.generators);
    std::string label;
    while (std::getline(ss, label, ',')) {
      gens.push_back(alg.basis_element(alg.index_of_label(label)));
    }
    ClosureResult<S> closure = subalgebra_closure(gens);
    out["dim"] = static_cast<int>(closure.dim);
    out["iterations"] = closure.iterations;
    json basis = json::array();
    for (const auto& e : closure.basis) {
      json row = json::array();
      for (Eigen::Index i = 0; i < e.coords().size(); ++i) row.push_back(e.coords()(i).str());
      basis.push_back(std::move(row));
    }
    out["basis"] = std::move(basis);
    if (!opt.json_output) {
      std::cout << "closure dim: " << closure.dim
                << " (products examined: " << closure.iterations << ")\n";
    }
  } else if (opt.what == "miyamoto") {
    Element<S> axis = alg.basis_element(alg.index_of_label(opt.axis));
    Matrix<S> tau = miyamoto(alg, peirce_decompose(alg, axis));
    out["miyamoto"] = matrix_to_json(tau);
    if (!opt.json_output) print_matrix(tau);
  } else {
    std::cerr << "error: unknown report '" << opt.what
              << "' (expected peirce, gram, closure, miyamoto)\n";
    return kExitBadFlags;
  }

  if (opt.json_output) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitViolations;
}

std::optional<json> read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  json j = json::parse(f, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

template <class F>
int dispatch_file_command(const std::string& path, F&& fn) {
  std::optional<json> file = read_json_file(path);
  if (!file) {
    std::cerr << "error: cannot read algebra file '" << path << "'\n";
    return kExitLoadFailure;
  }
  try {
    FieldSpec spec = peek_field(*file);
    return with_field_context(spec, [&](const auto& ctx) { return fn(ctx, *file); });
  } catch (const AxialError& e) {
    if (e.code() == errc::load_error || e.code() == errc::parse_error ||
        e.code() == errc::mixed_fields || e.code() == errc::unknown_variable ||
        e.code() == errc::dimension_mismatch) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitLoadFailure;
    }
    throw;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact construction and verification of PC(eta) axial algebras"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  CLI::App* build = app.add_subcommand("build", "construct a catalog algebra as JSON");
  build->add_option("--family", build_opt.family,
                    "two-gen | two-dim-half | two-dim-negsum | three-minus-one | three-generic")
      ->required();
  build->add_option("--field", build_opt.field, "q | gf:P | symbolic");
  build->add_option("--eta", build_opt.eta);
  build->add_option("--alpha", build_opt.alpha);
  build->add_option("--beta", build_opt.beta);
  build->add_option("--gamma", build_opt.gamma);
  build->add_option("--psi", build_opt.psi);
  build->add_option("-o,--out", build_opt.out, "output path")->required();

  VerifyOptions verify_opt;
  verify_opt.seed = default_seed_from_env();
  CLI::App* verify = app.add_subcommand("verify", "run verification suites on an algebra file");
  verify->add_option("algebra", verify_opt.path, "algebra JSON file")->required();
  verify->add_option("--suite", verify_opt.suite, "all | fusion | frobenius | identities | peirce")
      ->check(CLI::IsMember({"all", "fusion", "frobenius", "identities", "peirce"}));
  verify->add_option("--axis", verify_opt.axis, "basis label of the axis (default a)");
  verify->add_option("--seed", verify_opt.seed, "seed for sampled checks");
  verify->add_flag("--json", verify_opt.json_output, "machine-readable output");

  ReportOptions report_opt;
  CLI::App* report = app.add_subcommand("report", "print derived objects of an algebra file");
  report->add_option("algebra", report_opt.path, "algebra JSON file")->required();
  report->add_option("what", report_opt.what, "peirce | gram | closure | miyamoto")->required();
  report->add_option("--axis", report_opt.axis, "basis label of the axis (default a)");
  report->add_option("--generators", report_opt.generators, "comma separated basis labels");
  report->add_flag("--check-determinant", report_opt.check_determinant,
                   "compare the Gram determinant with its closed form (eta = -1)");
  report->add_flag("--json", report_opt.json_output, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadFlags;
  }

  try {
    if (build->parsed()) {
      FieldSpec spec;
      try {
        spec = FieldSpec::from_cli(build_opt.field);
      } catch (const AxialError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
      }
      return with_field_context(spec, [&](const auto& ctx) { return do_build(ctx, build_opt); });
    }
    if (verify->parsed()) {
      return dispatch_file_command(verify_opt.path, [&](const auto& ctx, const json& j) {
        return do_verify(ctx, j, verify_opt);
      });
    }
    return dispatch_file_command(report_opt.path, [&](const auto& ctx, const json& j) {
      return do_report(ctx, j, report_opt);
    });
  } catch (const AxialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::inadmissible_eta:
        return kExitInadmissibleEta;
      case errc::parse_error:
      case errc::unknown_variable:
        return kExitBadFlags;
      case errc::load_error:
        return kExitLoadFailure;
      default:
        return kExitViolations;
    }
  }
}

}  // namespace axial
