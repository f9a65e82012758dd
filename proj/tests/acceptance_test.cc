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

// Release gate: prints one PASS/FAIL line per acceptance criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lustab/lustab.hpp"

using namespace lustab;

namespace {

int g_failed = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!ok) ++g_failed;
}

// Zero failures and at least `min_trials` trials on every named property.
bool clean(const SuiteReport& s, const std::vector<std::string>& names, int min_trials, std::string& detail) {
  bool ok = true;
  for (const auto& name : names) {
    const PropertyResult* p = s.find(name);
    if (p == nullptr) {
      detail += name + " missing; ";
      ok = false;
      continue;
    }
    detail += name + " " + std::to_string(p->trials - p->failures) + "/" + std::to_string(p->trials) + "; ";
    ok = ok && p->failures == 0 && p->trials >= min_trials;
  }
  if (!detail.empty()) detail.resize(detail.size() - 2);
  return ok;
}

void table_reproduction() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<TableRow> rows = reproduce_table({.n_max = 7});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool ok = secs < 10.0;
  std::set<std::string> seen;
  int generic_samples = 0;
  for (const auto& r : rows) {
    ok = ok && r.matches();
    seen.insert(r.row);
    if (r.row.starts_with("Generic n-qubit")) generic_samples += static_cast<int>(r.computed.size());
  }
  // 20 Haar samples for each n in 3..7.
  ok = ok && generic_samples >= 100;
  for (const char* need : {"All 1-qubit states", "Generic 2-qubit state", "2-qubit product state",
                           "2-qubit singlet state", "Generic n-qubit state", "Unentangled states",
                           "Product of singlets, n even", "Product of singlets, n odd", "n-qubit GHZ"})
    ok = ok && seen.contains(need);
  report(1, "table reproduction, n <= 7", ok,
         std::to_string(rows.size()) + " rows, " + std::to_string(secs) + " s");
}

void ghz_identity(const SuiteReport& suite) {
  // Checked directly as well as through the suite.
  bool ok = true;
  int cases = 0;
  for (int n = 3; n <= 7; ++n)
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
      Matrix<Rational> rows(0, algebra_dimension(n));
      for (int j = 2; j <= n; ++j) {
        std::vector<Rational> r(algebra_dimension(n), Rational(0));
        r[coordinate_index(Generator::A, 1)] = 1;
        r[coordinate_index(Generator::A, j)] = -1;
        rows.append_row(r);
      }
      const auto reference = Subspace<Rational>::span_of(n, rows);
      ok = ok && compute_kernel<Rational>(ghz_state(n, a, b)).space.basis() == reference.basis();
      ++cases;
    }
  std::string detail;
  ok = clean(suite, {"ghz_kernel_identity"}, 15, detail) && ok;
  report(2, "GHZ kernel identity", ok, std::to_string(cases) + " exact cases; " + detail);
}

void four_qubit_examples() {
  bool ok = true;
  std::string detail;
  AnalysisOptions float_opts;
  float_opts.mode = ModeRequest::Float;
  float_opts.tol = 1e-9;
  for (const auto& [name, psi, opts] :
       {std::tuple{"block4", block4_state(), AnalysisOptions{}}, std::tuple{"m4", m4_state(), float_opts}}) {
    const StabilizerReport r = stabilizer_report(psi, opts);
    bool this_ok = r.kernel_dim() == 3 && r.blocks.blocks == std::vector<std::vector<int>>{{1, 2, 3, 4}};
    std::size_t min_rank = 4;
    for (const auto& s : std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {1, 4}})
      min_rank = std::min(min_rank, bipartition_rank(psi, s));
    this_ok = this_ok && min_rank >= 2 && !r.classification.is_product;
    detail += std::string(name) + " dim " + std::to_string(r.kernel_dim()) + " min rank " + std::to_string(min_rank) +
              "; ";
    ok = ok && this_ok;
  }
  detail.resize(detail.size() - 2);
  report(3, "four-qubit single-block examples", ok, detail);
}

}  // namespace

int main() {
  const VerifyConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport suite = verify_suite(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("verify suite: %zu properties in %.2f s\n", suite.properties.size(), secs);

  const int catalog_size = static_cast<int>(catalog().size());

  table_reproduction();
  ghz_identity(suite);
  four_qubit_examples();

  std::string d4;
  const bool c4 = clean(suite,
                        {"kernel_membership", "projection_trichotomy", "block_evenness", "block_subalgebra",
                         "splitting_identity", "dimension_formula", "residual_bound", "residual_bound_no_single",
                         "bracket_closure", "parity_lemma"},
                        500, d4);
  report(4, "structure lemmas on >= 500 states", c4, d4);

  std::string d5;
  report(5, "dimension bounds", clean(suite, {"dimension_bounds", "singlet_blocks_agree"}, 500, d5), d5);

  std::string d6;
  report(6, "2-qubit blocks match singlet factors", clean(suite, {"singlet_cross_validation"}, 200, d6), d6);

  std::string d7;
  report(7, "LU invariance and Float stability",
         clean(suite, {"lu_invariance"}, cfg.lu_trials * catalog_size, d7), d7);

  std::string d8;
  report(8, "engine and oracle agree",
         clean(suite, {"engine_oracle_agreement"}, catalog_size + cfg.haar_per_n * 6, d8), d8);

  if (!suite.passed()) {
    for (const auto& p : suite.properties)
      if (p.failures != 0) std::printf("supporting property %s: %d failures\n", p.name.c_str(), p.failures);
  }
  return g_failed == 0 && suite.passed() ? 0 : 1;
}
