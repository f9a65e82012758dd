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

// Exploratory search for nonproduct states whose stabilizer reaches the
// nonproduct bound n - 1. Finds hits; proves nothing about their absence.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lustab/catalog.hpp"
#include "lustab/ket_io.hpp"
#include "lustab/report.hpp"

namespace lustab {

struct ScanHit {
  std::string family;
  std::size_t kernel_dim = 0;
  std::vector<std::vector<int>> blocks;
  PureState state;
};

struct ScanFamilyStats {
  std::string family;
  int samples = 0;
  int nonproduct = 0;
  int hits = 0;
};

struct ScanResult {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<ScanFamilyStats> families;
  std::vector<ScanHit> hits;
};

/// alpha|0..0> + e^{i theta} beta|1..1> with random alpha, beta > 0 and theta.
inline PureState random_phase_ghz(int n, Rng& rng) {
  std::uniform_real_distribution<double> mag(0.1, 1.0), phase(0.0, 2.0 * std::numbers::pi);
  PureState::FloatTable amps(std::size_t{1} << n);
  amps.front() = std::polar(mag(rng), phase(rng));
  amps.back() = std::polar(mag(rng), phase(rng));
  return PureState::floating(n, std::move(amps));
}

/// Samples `trials` states from each family, keeping the nonproduct ones with
/// kernel_dim == n - 1. Requires 3 <= n <= 8.
inline ScanResult scan_nonproduct_max(int n, int trials, std::uint64_t seed, bool haar_only = false) {
  if (n < 3 || n > 8) throw std::invalid_argument("scan requires 3 <= n <= 8");
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  ScanResult out{n, trials, seed, {}, {}};

  AnalysisOptions opts;
  opts.mode = ModeRequest::Float;
  opts.parity_max_qubits = 0;
  auto consider = [&](ScanFamilyStats& st, const PureState& psi) {
    ++st.samples;
    const StabilizerReport r = stabilizer_report(psi, opts);
    if (r.classification.is_product) return;
    ++st.nonproduct;
    if (r.kernel_dim() + 1 != static_cast<std::size_t>(n)) return;
    ++st.hits;
    out.hits.push_back({st.family, r.kernel_dim(), r.blocks.blocks, psi});
  };

  struct Family {
    std::string name;
    PureState (*make)(int, Rng&);
  };
  std::vector<Family> families = {{"haar", haar_state}};
  if (!haar_only) {
    families.push_back({"ghz_random_phase", random_phase_ghz});
    families.push_back({"symmetric", random_symmetric_state});
    families.push_back({"even_weight", random_even_weight_state});
  }
  for (std::size_t f = 0; f < families.size(); ++f) {
    ScanFamilyStats st{families[f].name};
    Rng rng(derive_seed(seed, f));
    for (int t = 0; t < trials; ++t) consider(st, families[f].make(n, rng));
    out.families.push_back(st);
  }
  if (n == 4 && !haar_only) {
    // block4 and M4 with random local rotations of each.
    ScanFamilyStats st{"four_qubit_blocks"};
    Rng rng(derive_seed(seed, families.size()));
    consider(st, block4_state());
    consider(st, m4_state());
    for (int t = 0; t < trials; ++t) consider(st, random_lu_transform(t % 2 ? m4_state() : block4_state(), rng));
    out.families.push_back(st);
  }
  return out;
}

inline nlohmann::json to_json(const ScanResult& r) {
  nlohmann::json fams = nlohmann::json::array();
  for (const auto& f : r.families)
    fams.push_back({{"family", f.family}, {"samples", f.samples}, {"nonproduct", f.nonproduct}, {"hits", f.hits}});
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : r.hits)
    hits.push_back({{"family", h.family}, {"kernel_dim", h.kernel_dim}, {"blocks", h.blocks},
                    {"state", state_to_json(h.state)}});
  return {{"n", r.n}, {"trials", r.trials}, {"seed", r.seed}, {"families", fams}, {"hits", hits}};
}

}  // namespace lustab
