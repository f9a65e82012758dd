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

// Executable forms of the structure lemmas and dimension bounds, run over the
// catalog and seeded random constructions, plus the stabilizer-dimension
// table. Failures are data: each property records its counterexamples.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lustab/catalog.hpp"
#include "lustab/ket_io.hpp"
#include "lustab/oracle.hpp"
#include "lustab/report.hpp"

namespace lustab {

// ---------------------------------------------------------------------------
// Labeled random constructions
// ---------------------------------------------------------------------------

/// A state built as a permuted tensor product of known factors, with the
/// ground truth its analysis must reproduce.
struct LabeledState {
  std::string label;
  PureState state;
  std::vector<std::vector<int>> parts;
  std::vector<std::pair<int, int>> singlet_pairs;
};

namespace detail {

struct Factor {
  std::string label;
  PureState state;
  bool singlet = false;
};

inline Factor random_factor(Rng& rng, int max_size, bool singlet_only) {
  struct Kind {
    const char* label;
    int size;
    bool singlet;
  };
  static constexpr Kind kinds[] = {
      {"singlet", 2, true}, {"bell", 2, true},  {"lu_singlet", 2, true}, {"haar1", 1, false},
      {"haar2", 2, false},  {"haar3", 3, false}, {"basis1", 1, false},    {"ghz3", 3, false},
      {"ghz4", 4, false},   {"w3", 3, false},    {"block4", 4, false}};
  std::vector<Kind> allowed;
  for (const auto& k : kinds)
    if (k.size <= max_size && (!singlet_only || k.singlet)) allowed.push_back(k);
  const Kind k = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
  const std::string label = k.label;
  if (label == "singlet") return {label, singlet_state(), true};
  if (label == "bell") return {label, bell_state(), true};
  if (label == "lu_singlet") return {label, random_lu_transform(singlet_state(), rng), true};
  if (label == "haar1") return {label, haar_state(1, rng)};
  if (label == "haar2") return {label, haar_state(2, rng)};
  if (label == "haar3") return {label, haar_state(3, rng)};
  if (label == "basis1") return {label, basis_state(std::uniform_int_distribution<int>(0, 1)(rng) ? "1" : "0")};
  if (label == "ghz3") return {label, ghz_state(3, 1, 2)};
  if (label == "ghz4") return {label, ghz_state(4, 2, 3)};
  if (label == "w3") return {label, w_state(3)};
  return {label, block4_state()};
}

}  // namespace detail

/// Random tensor product of catalog and Haar factors on n qubits, with qubits
/// shuffled. With `with_singlet`, the first factor is singlet-equivalent.
inline LabeledState random_labeled_state(int n, Rng& rng, bool with_singlet = false) {
  std::vector<detail::Factor> factors;
  int left = n;
  while (left > 0) {
    const bool force = with_singlet && factors.empty() && left >= 2;
    factors.push_back(detail::random_factor(rng, left, force));
    left -= factors.back().state.num_qubits();
  }
  PureState psi = factors.front().state;
  for (std::size_t f = 1; f < factors.size(); ++f) psi = tensor(psi, factors[f].state);
  const auto perm = random_permutation(n, rng);

  LabeledState out{"", permute_qubits(psi, perm), {}, {}};
  int next = 1;
  for (const auto& f : factors) {
    std::vector<int> part;
    for (int q = 0; q < f.state.num_qubits(); ++q) part.push_back(perm[next + q - 1]);
    std::sort(part.begin(), part.end());
    if (f.singlet) out.singlet_pairs.emplace_back(part[0], part[1]);
    out.parts.push_back(std::move(part));
    next += f.state.num_qubits();
    out.label += (out.label.empty() ? "" : "*") + f.label;
  }
  std::sort(out.parts.begin(), out.parts.end());
  std::sort(out.singlet_pairs.begin(), out.singlet_pairs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
};

struct SuiteReport {
  std::vector<PropertyResult> properties;

  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failures == 0; });
  }
  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties)
      if (p.name == name) return &p;
    return nullptr;
  }
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int n_max = 7;
  /// Local-unitary transforms per catalog state.
  int lu_trials = 100;
  /// Local-unitary transforms per catalog state for the classification check.
  int classify_lu_trials = 10;
  /// Random product constructions for the structure and bound predicates.
  int random_states = 500;
  /// Constructions containing a singlet-equivalent factor.
  int cross_states = 200;
  /// Haar states per n in [2, n_max] for the oracle comparison.
  int haar_per_n = 50;
  /// Counterexamples stored per property.
  int max_counterexamples = 5;
};

inline nlohmann::json to_json(const PropertyResult& p) {
  return {{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}, {"counterexamples", p.counterexamples}};
}

inline nlohmann::json to_json(const SuiteReport& s) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : s.properties) props.push_back(to_json(p));
  return {{"passed", s.passed()}, {"properties", props}};
}

namespace detail {

class Recorder {
 public:
  explicit Recorder(int max_cex) : max_cex_(max_cex) {}

  void record(const std::string& name, bool ok, const std::string& label, const PureState* psi,
              const std::string& why = {}) {
    PropertyResult& p = get(name);
    ++p.trials;
    if (ok) return;
    ++p.failures;
    if (static_cast<int>(p.counterexamples.size()) >= max_cex_) return;
    nlohmann::json cex = psi ? state_to_json(*psi) : nlohmann::json::object();
    cex["label"] = label;
    if (!why.empty()) cex["reason"] = why;
    p.counterexamples.push_back(std::move(cex));
  }

  SuiteReport finish() && { return {std::move(props_)}; }

 private:
  PropertyResult& get(const std::string& name) {
    for (auto& p : props_)
      if (p.name == name) return p;
    props_.push_back({name});
    return props_.back();
  }

  int max_cex_;
  std::vector<PropertyResult> props_;
};

inline const std::vector<std::string>& structure_property_names() {
  static const std::vector<std::string> names = {
      "kernel_membership", "projection_trichotomy", "block_evenness",    "block_subalgebra",
      "splitting_identity", "dimension_formula",    "residual_bound",    "residual_bound_no_single",
      "bracket_closure",   "parity_lemma",          "dimension_bounds",  "singlet_blocks_agree"};
  return names;
}

inline void check_structure(Recorder& rec, const std::string& label, const PureState& psi) {
  const auto& names = structure_property_names();
  try {
    const StabilizerReport r = stabilizer_report(psi);
    const LemmaChecks& c = r.checks;
    const bool flags[] = {c.kernel_membership, c.trichotomy, c.evenness, c.block_subalgebra,
                          c.splitting,         c.dimension_formula, c.residual_bound, c.residual_bound_no_single,
                          c.closure,           c.parity,     c.bounds,   c.singlet_blocks_agree};
    for (std::size_t k = 0; k < names.size(); ++k) rec.record(names[k], flags[k], label, &psi);
  } catch (const StructureViolation& e) {
    for (const auto& name : names) rec.record(name, false, label, &psi, e.what());
  }
}

struct Signature {
  std::size_t kernel_dim = 0;
  int p = 0;
  std::vector<int> block_sizes;
  bool operator==(const Signature&) const = default;
};

inline Signature float_signature(const PureState& psi, bool& stable) {
  const Kernel<double> k = compute_kernel<double>(psi.is_exact() ? psi.to_float() : psi);
  stable = k.stable;
  const BlockReport b = detect_su2_blocks(k.space);
  return {b.kernel_dim, b.p, b.block_sizes()};
}

/// span{A_1 - A_j : j = 2..n}, the GHZ kernel.
template <class T>
Subspace<T> ghz_reference_kernel(int n) {
  Matrix<T> rows(0, algebra_dimension(n));
  for (int j = 2; j <= n; ++j) {
    std::vector<T> v(algebra_dimension(n), T(0));
    v[coordinate_index(Generator::A, 1)] = T(1);
    v[coordinate_index(Generator::A, j)] = T(-1);
    rows.append_row(v);
  }
  return Subspace<T>::span_of(n, rows);
}

}  // namespace detail

/// Runs every property over the catalog and seeded random families.
inline SuiteReport verify_suite(const VerifyConfig& cfg = {}) {
  if (cfg.n_max < 2 || cfg.n_max > oracle::kMaxQubits) throw std::invalid_argument("n_max must lie in [2, 10]");
  detail::Recorder rec(cfg.max_counterexamples);
  std::vector<CatalogEntry> cat;
  for (auto& e : catalog())
    if (e.make().num_qubits() <= cfg.n_max) cat.push_back(std::move(e));

  // Structure lemmas and bounds: catalog plus random product constructions.
  for (const auto& e : cat) detail::check_structure(rec, e.label, e.make());
  {
    Rng rng(derive_seed(cfg.seed, 1));
    std::uniform_int_distribution<int> pick_n(1, cfg.n_max);
    for (int t = 0; t < cfg.random_states; ++t) {
      const LabeledState s = random_labeled_state(pick_n(rng), rng);
      detail::check_structure(rec, s.label, s.state);
      const Factorization f = finest_factorization(s.state);
      rec.record("factorization_ground_truth", f.parts == s.parts, s.label, &s.state);
    }
  }

  // 2-qubit blocks versus singlet-equivalent factors.
  {
    Rng rng(derive_seed(cfg.seed, 2));
    std::uniform_int_distribution<int> pick_n(2, cfg.n_max);
    for (int t = 0; t < cfg.cross_states; ++t) {
      const LabeledState s = random_labeled_state(pick_n(rng), rng, true);
      bool ok = false;
      try {
        const StabilizerReport r = stabilizer_report(s.state);
        std::vector<std::pair<int, int>> two;
        for (const auto& b : r.blocks.blocks)
          if (b.size() == 2) two.emplace_back(b[0], b[1]);
        std::sort(two.begin(), two.end());
        ok = two == s.singlet_pairs && r.classification.singlet_pairs == s.singlet_pairs;
      } catch (const StructureViolation&) {
      }
      rec.record("singlet_cross_validation", ok, s.label, &s.state);
    }
  }

  // LU invariance of (kernel_dim, p, block sizes) with a stable Float kernel.
  {
    Rng rng(derive_seed(cfg.seed, 3));
    for (const auto& e : cat) {
      const PureState psi = e.make();
      const StabilizerReport base = stabilizer_report(psi);
      const detail::Signature want{base.kernel_dim(), base.blocks.p, base.blocks.block_sizes()};
      for (int t = 0; t < cfg.lu_trials; ++t) {
        const PureState moved = random_lu_transform(psi, rng);
        bool ok = false;
        try {
          bool stable = false;
          ok = detail::float_signature(moved, stable) == want && stable;
        } catch (const StructureViolation&) {
        }
        rec.record("lu_invariance", ok, e.label, &moved);
      }
      const Classification want_class = base.classification;
      for (int t = 0; t < cfg.classify_lu_trials; ++t) {
        const PureState moved = random_lu_transform(psi, rng);
        bool ok = false;
        try {
          const Classification c = classify(moved);
          ok = c.bound == want_class.bound && c.saturated == want_class.saturated && c.parts == want_class.parts &&
               c.singlet_pairs == want_class.singlet_pairs;
        } catch (const StructureViolation&) {
        }
        rec.record("classification_lu_invariance", ok, e.label, &moved);
      }
    }
  }

  // Exact and Float engines agree on exact states.
  for (const auto& e : cat) {
    const PureState psi = e.make();
    if (!psi.is_exact()) continue;
    const auto ke = compute_kernel<Rational>(psi);
    const auto kf = compute_kernel<double>(psi.to_float());
    rec.record("exact_float_agreement", same_subspace(ke.space, kf.space), e.label, &psi);
  }

  // Engine versus brute-force oracle.
  {
    auto compare = [&](const std::string& label, const PureState& psi) {
      const PureState f = psi.is_exact() ? psi.to_float() : psi;
      const auto engine = compute_kernel<double>(f).space;
      const auto orc = oracle::kernel<double>(f);
      bool ok = engine.dim() == orc.dim() && same_subspace(engine, orc);
      if (psi.is_exact())
        ok = ok && compute_kernel<Rational>(psi).space.basis() == oracle::kernel<Rational>(psi).basis();
      rec.record("engine_oracle_agreement", ok, label, &psi);
    };
    for (const auto& e : cat) compare(e.label, e.make());
    Rng rng(derive_seed(cfg.seed, 4));
    for (int n = 2; n <= cfg.n_max; ++n)
      for (int t = 0; t < cfg.haar_per_n; ++t) compare("haar(" + std::to_string(n) + ")", haar_state(n, rng));
  }

  // GHZ kernel is {sum t_j A_j : sum t_j = 0} for every ratio.
  for (int n = 3; n <= cfg.n_max; ++n)
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
      const PureState psi = ghz_state(n, a, b);
      const bool exact_ok = compute_kernel<Rational>(psi).space.basis() == detail::ghz_reference_kernel<Rational>(n).basis();
      const bool float_ok = same_subspace(compute_kernel<double>(psi.to_float()).space, detail::ghz_reference_kernel<double>(n));
      rec.record("ghz_kernel_identity", exact_ok && float_ok,
                 "ghz(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")", &psi);
    }

  // Catalog reference values.
  for (const auto& e : cat) {
    if (!e.expected_kernel_dim && !e.expected_blocks) continue;
    const PureState psi = e.make();
    const StabilizerReport r = stabilizer_report(psi);
    bool ok = !e.expected_kernel_dim || r.kernel_dim() == static_cast<std::size_t>(*e.expected_kernel_dim);
    ok = ok && (!e.expected_blocks || r.blocks.block_sizes() == *e.expected_blocks);
    rec.record("catalog_expected_values", ok, e.label, &psi);
  }

  // Serialization round trips.
  for (const auto& e : cat) {
    const PureState psi = e.make();
    if (psi.is_exact()) {
      const bool ket_ok = parse_state(to_ket_string(psi)) == psi;
      const bool json_ok = state_from_json(state_to_json(psi)) == psi;
      rec.record("ket_round_trip", ket_ok && json_ok, e.label, &psi);
    }
    const nlohmann::json j = to_json(stabilizer_report(psi));
    rec.record("report_json_round_trip", to_json(report_from_json(j)) == j, e.label, &psi);
  }

  // Seeded constructors reproduce bit-identical tables.
  for (std::uint64_t s = 0; s < 10; ++s) {
    const NamedParams p{.n = 1 + static_cast<int>(s % 7), .seed = derive_seed(cfg.seed, 100 + s)};
    for (const char* name : {"random_haar", "random_product"}) {
      const PureState a = make_named(name, p), b = make_named(name, p);
      rec.record("random_determinism", a == b && a.float_amplitudes() == b.float_amplitudes(), name, &a);
    }
  }
  return std::move(rec).finish();
}

// ---------------------------------------------------------------------------
// Stabilizer-dimension table
// ---------------------------------------------------------------------------

struct TableConfig {
  int n_max = 7;
  ModeRequest mode = ModeRequest::Auto;
  double tol = kDefaultRankTol;
  std::uint64_t seed = 1;
  /// Haar samples for the generic rows.
  int generic_samples = 20;
};

struct TableRow {
  std::string row;
  int n = 0;
  std::size_t expected = 0;
  /// Kernel dimension of each sample.
  std::vector<std::size_t> computed;
  bool unstable = false;

  bool matches() const {
    return !unstable &&
           std::all_of(computed.begin(), computed.end(), [&](std::size_t d) { return d == expected; });
  }
};

/// Recomputes every table row for n <= n_max. Deterministic given the config.
inline std::vector<TableRow> reproduce_table(const TableConfig& cfg = {}) {
  if (cfg.n_max < 1 || cfg.n_max > kDefaultMaxQubits) throw std::invalid_argument("n_max must lie in [1, 16]");
  std::vector<TableRow> rows;
  auto measure = [&](TableRow& row, const PureState& psi) {
    // Float requests apply to every sample; Exact requests to exact states only.
    ModeRequest req = cfg.mode;
    if (req == ModeRequest::Exact && !psi.is_exact()) req = ModeRequest::Float;
    KernelOptions kopts;
    kopts.tol = cfg.tol;
    if (resolve_mode(psi, req) == Mode::Exact) {
      row.computed.push_back(compute_kernel<Rational>(psi, kopts).dim());
    } else {
      const auto k = compute_kernel<double>(psi.is_exact() ? psi.to_float() : psi, kopts);
      row.computed.push_back(k.dim());
      row.unstable = row.unstable || !k.stable;
    }
  };
  auto add = [&](std::string name, int n, std::size_t expected, const std::vector<PureState>& samples) {
    TableRow row{std::move(name), n, expected, {}, false};
    for (const auto& psi : samples) measure(row, psi);
    rows.push_back(std::move(row));
  };
  Rng rng(derive_seed(cfg.seed, 0));
  auto haar_samples = [&](int n) {
    std::vector<PureState> s;
    for (int t = 0; t < cfg.generic_samples; ++t) s.push_back(haar_state(n, rng));
    return s;
  };

  add("All 1-qubit states", 1, 1, {basis_state("0"), basis_state("1"), haar_state(1, rng), haar_state(1, rng)});
  if (cfg.n_max >= 2) {
    add("Generic 2-qubit state", 2, 1, haar_samples(2));
    add("2-qubit product state", 2, 2, {basis_state("01"), random_product_state(2, rng)});
    add("2-qubit singlet state", 2, 3, {singlet_state(), random_lu_transform(singlet_state(), rng)});
  }
  for (int n = 3; n <= cfg.n_max; ++n) add("Generic n-qubit state", n, 0, haar_samples(n));
  for (int n = 1; n <= cfg.n_max; ++n) {
    std::string bits;
    for (int j = 0; j < n; ++j) bits += std::uniform_int_distribution<int>(0, 1)(rng) ? '1' : '0';
    add("Unentangled states", n, n, {basis_state(bits), random_product_state(n, rng)});
  }
  for (int n = 2; n <= cfg.n_max; ++n) {
    const std::size_t expected = n % 2 == 0 ? 3 * n / 2 : (3 * n - 1) / 2;
    add(n % 2 == 0 ? "Product of singlets, n even" : "Product of singlets, n odd", n, expected,
        {singlet_product_state(n)});
  }
  for (int n = 3; n <= cfg.n_max; ++n) add("n-qubit GHZ", n, n - 1, {ghz_state(n)});
  return rows;
}

}  // namespace lustab
