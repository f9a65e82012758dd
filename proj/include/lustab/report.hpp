// Copyright 2026 The lustab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// One-call analysis of a state: kernel, block decomposition, structure
// predicates, factor structure and bound classification, plus JSON I/O.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lustab/factor.hpp"
#include "lustab/ket_io.hpp"
#include "lustab/stabilizer.hpp"

namespace lustab {

enum class ModeRequest { Auto, Exact, Float };

inline ModeRequest mode_request_from_string(std::string_view s) {
  if (s == "auto") return ModeRequest::Auto;
  if (s == "exact") return ModeRequest::Exact;
  if (s == "float") return ModeRequest::Float;
  throw std::invalid_argument("mode must be exact, float or auto");
}

struct AnalysisOptions {
  ModeRequest mode = ModeRequest::Auto;
  double tol = kDefaultRankTol;
  /// Largest n for which the parity predicate enumerates all qubit subsets.
  int parity_max_qubits = 10;
};

inline constexpr double kMembershipTol = 1e-8;
inline constexpr double kClosureTol = 1e-8;

/// Results of the structure-theorem predicates on one state.
struct LemmaChecks {
  double max_membership_residual = 0.0;  // max ||dPhi(X)|| / (||psi|| ||X||) over the basis
  bool kernel_membership = true;
  bool trichotomy = true;          // projection dims in {0,1,3}, 3 exactly on block qubits
  bool evenness = true;            // every block has even size
  bool block_subalgebra = true;    // dim(K cap g_S) = 3 and U,V,W relations hold
  bool splitting = true;           // dim K = dim(K cap g_S) + dim(K cap gbar_S) per block
  bool dimension_formula = true;   // dim K = 3p + residual
  bool residual_bound = true;      // residual <= n - b
  bool residual_bound_no_single = true;  // residual <= n - b - 1 when b < n and no single-qubit factor
  bool closure = true;             // bracket-closure residual within tolerance
  bool parity = true;              // sum of A_j over a set in K implies even set size
  bool bounds = true;              // every applicable maximum-dimension bound holds
  bool singlet_blocks_agree = true;  // 2-qubit blocks == singlet factors

  bool all() const {
    return kernel_membership && trichotomy && evenness && block_subalgebra && splitting && dimension_formula &&
           residual_bound && residual_bound_no_single && closure && parity && bounds && singlet_blocks_agree;
  }
};

struct StabilizerReport {
  int n = 0;
  Mode mode = Mode::Float;
  double tol = kDefaultRankTol;
  BlockReport blocks;
  std::vector<std::vector<double>> kernel_basis;
  /// Exact basis (RREF) when mode is Exact.
  std::vector<std::vector<Rational>> exact_kernel_basis;
  double closure_residual = 0.0;
  bool stable = true;
  std::vector<std::string> warnings;
  Classification classification;
  LemmaChecks checks;

  std::size_t kernel_dim() const { return blocks.kernel_dim; }
  /// Dimension of the local unitary orbit through psi, 3n+1 - dim K.
  std::size_t orbit_dim() const { return algebra_dimension(n) - blocks.kernel_dim; }
};

namespace detail {

/// Every bound that the factor structure makes applicable.
inline bool all_bounds_hold(const Classification& c) {
  const int n = c.n;
  const int d = static_cast<int>(c.kernel_dim);
  bool ok = d <= (3 * n) / 2;
  if (c.singlet_pairs.empty()) ok = ok && d <= n;
  if (c.singlet_pairs.empty() && !c.has_single_qubit_factor()) ok = ok && d <= n - 1;
  if (!c.is_product && n >= 3) ok = ok && d <= n - 1;
  if (!c.is_product && n == 1) ok = ok && d <= 1;
  if (!c.is_product && n == 2) ok = ok && d <= 3;
  return ok;
}

template <class T>
bool action_vanishes(const PureState& psi, const BasicAlgebraElement<T>& x, double psi_norm) {
  if constexpr (is_exact_v<T>) {
    for (const auto& z : apply_element<T>(psi, x))
      if (!z.is_zero()) return false;
    return true;
  } else {
    return action_norm(psi, x) <= kMembershipTol * psi_norm * norm2(x.span());
  }
}

/// For each nonempty qubit set S with sum_{j in S} A_j in K, |S| is even.
template <class T>
bool parity_lemma_holds(const PureState& psi) {
  const int n = psi.num_qubits();
  const double nrm = psi.norm();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    BasicAlgebraElement<T> x(n);
    int m = 0;
    for (int j = 1; j <= n; ++j)
      if (mask & (std::size_t{1} << (j - 1))) {
        x[coordinate_index(Generator::A, j)] = T(1);
        ++m;
      }
    if (m % 2 == 1 && action_vanishes(psi, x, nrm)) return false;
  }
  return true;
}

template <class T>
StabilizerReport analyze_in(const PureState& psi, const AnalysisOptions& opts) {
  StabilizerReport rep;
  rep.n = psi.num_qubits();
  rep.mode = is_exact_v<T> ? Mode::Exact : Mode::Float;
  rep.tol = opts.tol;

  KernelOptions kopts;
  kopts.tol = opts.tol;
  const Kernel<T> kernel = compute_kernel<T>(psi, kopts);
  rep.stable = kernel.stable;
  if (!kernel.stable) rep.warnings.push_back(kernel.warning());
  const Subspace<T>& k = kernel.space;

  const double nrm = psi.norm();
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const auto x = k.element(i);
    rep.kernel_basis.push_back(to_float(x).coords());
    if constexpr (is_exact_v<T>) rep.exact_kernel_basis.push_back(x.coords());
    const double xn = norm2(to_float(x).span());
    rep.checks.max_membership_residual = std::max(rep.checks.max_membership_residual, action_norm(psi, x) / (nrm * xn));
    if constexpr (is_exact_v<T>) rep.checks.kernel_membership = rep.checks.kernel_membership && action_vanishes(psi, x, nrm);
  }
  if constexpr (!is_exact_v<T>) rep.checks.kernel_membership = rep.checks.max_membership_residual <= kMembershipTol;

  rep.blocks = detect_su2_blocks(k);
  const BlockReport& b = rep.blocks;
  rep.closure_residual = bracket_closure_residual(k);
  rep.checks.closure = is_exact_v<T> ? rep.closure_residual == 0.0 : rep.closure_residual <= kClosureTol;

  for (int j = 1; j <= rep.n; ++j) {
    const int d = b.per_qubit_projection_dims[j - 1];
    const bool in_block = std::find(b.block_qubits.begin(), b.block_qubits.end(), j) != b.block_qubits.end();
    rep.checks.trichotomy = rep.checks.trichotomy && (d == 0 || d == 1 || d == 3) && ((d == 3) == in_block);
  }
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    const auto& s = b.blocks[i];
    rep.checks.evenness = rep.checks.evenness && s.size() % 2 == 0;
    rep.checks.block_subalgebra = rep.checks.block_subalgebra && b.block_subalgebra_dims[i] == 3;
    rep.checks.splitting =
        rep.checks.splitting && k.dim() == intersect_support(k, s, false).dim() + intersect_complement(k, s).dim();
  }
  rep.checks.block_subalgebra = rep.checks.block_subalgebra && b.max_generator_error <= kGeneratorTol;
  rep.checks.dimension_formula = b.formula_holds;

  const Factorization f = finest_factorization(psi, opts.tol);
  rep.classification = classify(psi, f, k.dim());
  const Classification& c = rep.classification;

  const std::size_t nb = b.block_qubits.size();
  rep.checks.residual_bound = b.residual_dim <= static_cast<std::size_t>(rep.n) - nb;
  if (nb < static_cast<std::size_t>(rep.n) && !c.has_single_qubit_factor())
    rep.checks.residual_bound_no_single = b.residual_dim + 1 <= static_cast<std::size_t>(rep.n) - nb;
  rep.checks.bounds = all_bounds_hold(c);

  std::vector<std::pair<int, int>> two_blocks;
  for (const auto& s : b.blocks)
    if (s.size() == 2) two_blocks.emplace_back(s[0], s[1]);
  std::sort(two_blocks.begin(), two_blocks.end());
  rep.checks.singlet_blocks_agree = two_blocks == c.singlet_pairs;

  if (rep.n <= opts.parity_max_qubits) rep.checks.parity = parity_lemma_holds<T>(psi);
  return rep;
}

}  // namespace detail

/// Field chosen for a state under a mode request.
inline Mode resolve_mode(const PureState& psi, ModeRequest req) {
  switch (req) {
    case ModeRequest::Auto: return psi.mode();
    case ModeRequest::Float: return Mode::Float;
    case ModeRequest::Exact:
      if (!psi.is_exact()) throw Error("exact mode requires Gaussian-rational amplitudes");
      return Mode::Exact;
  }
  return Mode::Float;
}

/// Full stabilizer report. Propagates StructureViolation from the engine.
inline StabilizerReport stabilizer_report(const PureState& psi, const AnalysisOptions& opts = {}) {
  if (resolve_mode(psi, opts.mode) == Mode::Exact) return detail::analyze_in<Rational>(psi, opts);
  return detail::analyze_in<double>(psi.is_exact() ? psi.to_float() : psi, opts);
}

/// Kernel dimension in the resolved mode.
inline std::size_t kernel_dimension(const PureState& psi, ModeRequest req = ModeRequest::Auto,
                                    double tol = kDefaultRankTol) {
  KernelOptions kopts;
  kopts.tol = tol;
  if (resolve_mode(psi, req) == Mode::Exact) return compute_kernel<Rational>(psi, kopts).dim();
  return compute_kernel<double>(psi.is_exact() ? psi.to_float() : psi, kopts).dim();
}

inline Classification classify(const PureState& psi, const AnalysisOptions& opts = {}) {
  return classify(psi, finest_factorization(psi, opts.tol), kernel_dimension(psi, opts.mode, opts.tol));
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Classification& c) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : c.singlet_pairs) pairs.push_back({a, b});
  return {{"n", c.n},
          {"is_product", c.is_product},
          {"parts", c.parts},
          {"singlet_pairs", pairs},
          {"single_qubit_factors", c.single_qubit_factors},
          {"bound_name", bound_name(c.bound)},
          {"bound_value", c.bound_value},
          {"kernel_dim", c.kernel_dim},
          {"saturated", c.saturated}};
}

inline Classification classification_from_json(const nlohmann::json& j) {
  Classification c;
  c.n = j.at("n").get<int>();
  c.is_product = j.at("is_product").get<bool>();
  c.parts = j.at("parts").get<std::vector<std::vector<int>>>();
  for (const auto& p : j.at("singlet_pairs")) c.singlet_pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  c.single_qubit_factors = j.at("single_qubit_factors").get<std::vector<int>>();
  c.bound = bound_kind_from_name(j.at("bound_name").get<std::string>());
  c.bound_value = j.at("bound_value").get<int>();
  c.kernel_dim = j.at("kernel_dim").get<std::size_t>();
  c.saturated = j.at("saturated").get<bool>();
  return c;
}

inline nlohmann::json to_json(const LemmaChecks& k) {
  return {{"max_membership_residual", k.max_membership_residual},
          {"kernel_membership", k.kernel_membership},
          {"trichotomy", k.trichotomy},
          {"evenness", k.evenness},
          {"block_subalgebra", k.block_subalgebra},
          {"splitting", k.splitting},
          {"dimension_formula", k.dimension_formula},
          {"residual_bound", k.residual_bound},
          {"residual_bound_no_single", k.residual_bound_no_single},
          {"closure", k.closure},
          {"parity", k.parity},
          {"bounds", k.bounds},
          {"singlet_blocks_agree", k.singlet_blocks_agree}};
}

inline LemmaChecks lemma_checks_from_json(const nlohmann::json& j) {
  LemmaChecks k;
  k.max_membership_residual = j.at("max_membership_residual").get<double>();
  k.kernel_membership = j.at("kernel_membership").get<bool>();
  k.trichotomy = j.at("trichotomy").get<bool>();
  k.evenness = j.at("evenness").get<bool>();
  k.block_subalgebra = j.at("block_subalgebra").get<bool>();
  k.splitting = j.at("splitting").get<bool>();
  k.dimension_formula = j.at("dimension_formula").get<bool>();
  k.residual_bound = j.at("residual_bound").get<bool>();
  k.residual_bound_no_single = j.at("residual_bound_no_single").get<bool>();
  k.closure = j.at("closure").get<bool>();
  k.parity = j.at("parity").get<bool>();
  k.bounds = j.at("bounds").get<bool>();
  k.singlet_blocks_agree = j.at("singlet_blocks_agree").get<bool>();
  return k;
}

inline nlohmann::json to_json(const StabilizerReport& r) {
  nlohmann::json basis = nlohmann::json::array();
  if (r.mode == Mode::Exact) {
    for (const auto& row : r.exact_kernel_basis) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& q : row) jr.push_back(to_string(q));
      basis.push_back(jr);
    }
  } else {
    for (const auto& row : r.kernel_basis) basis.push_back(row);
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.blocks.generators) gens.push_back({g.u.coords(), g.v.coords(), g.w.coords()});
  return {{"n", r.n},
          {"kernel_dim", r.blocks.kernel_dim},
          {"orbit_dim", r.orbit_dim()},
          {"blocks", r.blocks.blocks},
          {"p", r.blocks.p},
          {"block_qubits", r.blocks.block_qubits},
          {"residual_dim", r.blocks.residual_dim},
          {"per_qubit_projection_dims", r.blocks.per_qubit_projection_dims},
          {"block_subalgebra_dims", r.blocks.block_subalgebra_dims},
          {"max_generator_error", r.blocks.max_generator_error},
          {"formula_holds", r.blocks.formula_holds},
          {"closure_residual", r.closure_residual},
          {"kernel_basis", basis},
          {"generators", gens},
          {"mode", std::string(to_string(r.mode))},
          {"tol", r.tol},
          {"stable", r.stable},
          {"warnings", r.warnings},
          {"checks", to_json(r.checks)},
          {"classification", to_json(r.classification)}};
}

inline StabilizerReport report_from_json(const nlohmann::json& j) {
  StabilizerReport r;
  r.n = j.at("n").get<int>();
  r.mode = mode_from_string(j.at("mode").get<std::string>());
  r.tol = j.at("tol").get<double>();
  auto& b = r.blocks;
  b.n = r.n;
  b.kernel_dim = j.at("kernel_dim").get<std::size_t>();
  b.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  b.p = j.at("p").get<int>();
  b.block_qubits = j.at("block_qubits").get<std::vector<int>>();
  b.residual_dim = j.at("residual_dim").get<std::size_t>();
  b.per_qubit_projection_dims = j.at("per_qubit_projection_dims").get<std::vector<int>>();
  b.block_subalgebra_dims = j.at("block_subalgebra_dims").get<std::vector<std::size_t>>();
  b.max_generator_error = j.at("max_generator_error").get<double>();
  b.formula_holds = j.at("formula_holds").get<bool>();
  for (const auto& g : j.at("generators"))
    b.generators.push_back({AlgebraElement(r.n, g.at(0).get<std::vector<double>>()),
                            AlgebraElement(r.n, g.at(1).get<std::vector<double>>()),
                            AlgebraElement(r.n, g.at(2).get<std::vector<double>>())});
  for (const auto& row : j.at("kernel_basis")) {
    std::vector<double> d;
    std::vector<Rational> q;
    for (const auto& v : row) {
      if (v.is_string()) {
        q.push_back(parse_rational(v.get<std::string>()));
        d.push_back(to_double(q.back()));
      } else {
        d.push_back(v.get<double>());
      }
    }
    r.kernel_basis.push_back(std::move(d));
    if (r.mode == Mode::Exact) r.exact_kernel_basis.push_back(std::move(q));
  }
  r.closure_residual = j.at("closure_residual").get<double>();
  r.stable = j.at("stable").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.checks = lemma_checks_from_json(j.at("checks"));
  r.classification = classification_from_json(j.at("classification"));
  return r;
}

}  // namespace lustab
