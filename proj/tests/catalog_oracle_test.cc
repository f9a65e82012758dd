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

#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "lustab/catalog.hpp"
#include "lustab/oracle.hpp"
#include "lustab/report.hpp"
#include "lustab/scan.hpp"
#include "lustab/verify.hpp"
#include "test_support.hpp"

using namespace lustab;

TEST(catalog, make_named_examples) {
  const PureState g = make_named("ghz", {.n = 3, .alpha = 1, .beta = 2});
  ASSERT_TRUE(g.is_exact());
  EXPECT_EQ(g.num_qubits(), 3);
  EXPECT_EQ(bipartition_rank(g, std::vector<int>{1}), 2u);
  EXPECT_EQ(make_named("singlet_product", {.n = 5}).num_qubits(), 5);
  EXPECT_EQ(make_named("basis", {.n = 2}).num_qubits(), 2);
  EXPECT_FALSE(make_named("m4").is_exact());
  EXPECT_TRUE(make_named("block4").is_exact());

  EXPECT_THROW(make_named("ghz", {.n = 3, .alpha = 0}), std::invalid_argument);
  EXPECT_THROW(make_named("ghz", {.n = 1}), std::invalid_argument);
  EXPECT_THROW(make_named("basis", {.bits = "012"}), std::invalid_argument);
  EXPECT_THROW(make_named("cluster", {.n = 4}), std::invalid_argument);
}

TEST(catalog, every_name_is_constructible) {
  for (const auto& name : named_state_names())
    EXPECT_NO_THROW(make_named(name, {.n = 4, .seed = 1})) << name;
}

TEST(catalog, random_constructions_are_seed_determined) {
  const NamedParams p{.n = 4, .seed = 99};
  EXPECT_EQ(make_named("random_haar", p).float_amplitudes(), make_named("random_haar", p).float_amplitudes());
  EXPECT_NE(make_named("random_haar", p).float_amplitudes(),
            make_named("random_haar", {.n = 4, .seed = 100}).float_amplitudes());
}

TEST(catalog, reference_values) {
  for (const auto& entry : catalog()) {
    if (!entry.expected_kernel_dim) continue;
    EXPECT_EQ(test_support::reference_kernel_dim(entry.make()), static_cast<std::size_t>(*entry.expected_kernel_dim))
        << entry.label;
  }
}

TEST(oracle, generator_matrices) {
  // i I on one qubit, and A_1 on two qubits is diag(i, i, -i, -i).
  const auto phase = oracle::generator_matrix(1, Generator::Phase, 0);
  EXPECT_EQ(phase[0][0], std::complex<int>(0, 1));
  EXPECT_EQ(phase[0][1], std::complex<int>(0));
  const auto a1 = oracle::generator_matrix(2, Generator::A, 1);
  EXPECT_EQ(a1[1][1], std::complex<int>(0, 1));
  EXPECT_EQ(a1[2][2], std::complex<int>(0, -1));
  const auto c2 = oracle::generator_matrix(2, Generator::C, 2);
  EXPECT_EQ(c2[0][1], std::complex<int>(0, 1));
  EXPECT_EQ(c2[0][2], std::complex<int>(0));
}

TEST(oracle, agrees_with_engine_on_examples) {
  EXPECT_EQ(oracle::kernel<Rational>(singlet_state()).dim(), 3u);
  EXPECT_EQ(oracle::kernel<Rational>(w_state(3)).dim(), 1u);
  const PureState h = make_named("random_haar", {.n = 4, .seed = 7});
  EXPECT_EQ(oracle::kernel<double>(h).dim(), 0u);
  EXPECT_THROW(oracle::kernel<Rational>(h), Error);

  for (const auto& entry : catalog()) {
    const PureState psi = entry.make();
    const Kernel<double> k = compute_kernel<double>(psi.is_exact() ? psi.to_float() : psi);
    EXPECT_TRUE(same_subspace(k.space, oracle::kernel<double>(psi))) << entry.label;
    if (psi.is_exact())
      EXPECT_EQ(compute_kernel<Rational>(psi).space.basis(), oracle::kernel<Rational>(psi).basis()) << entry.label;
  }
}

TEST(random_labeled_state, ground_truth_matches_analysis) {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const LabeledState s = random_labeled_state(3 + t % 5, rng, /*with_singlet=*/true);
    ASSERT_FALSE(s.singlet_pairs.empty()) << s.label;
    const PureState& psi = s.state;
    EXPECT_EQ(singlet_pairs(psi, finest_factorization(psi)), s.singlet_pairs) << s.label;
  }
}

TEST(scan, ghz_phases_reach_the_maximum) {
  const ScanResult r = scan_nonproduct_max(3, 20, 5);
  ASSERT_FALSE(r.hits.empty());
  bool ghz = false;
  for (const auto& h : r.hits) {
    EXPECT_EQ(h.kernel_dim, 2u);
    ghz = ghz || h.family == "ghz_random_phase";
  }
  EXPECT_TRUE(ghz);
}

TEST(scan, four_qubit_blocks_are_hits) {
  const ScanResult r = scan_nonproduct_max(4, 6, 5);
  const auto it = std::find_if(r.families.begin(), r.families.end(),
                               [](const auto& f) { return f.family == "four_qubit_blocks"; });
  ASSERT_NE(it, r.families.end());
  EXPECT_EQ(it->hits, it->samples);
  for (const auto& h : r.hits)
    if (h.family == "four_qubit_blocks") EXPECT_EQ(h.blocks, (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
}

TEST(scan, haar_states_do_not_hit) {
  const ScanResult r = scan_nonproduct_max(5, 10, 3, /*haar_only=*/true);
  ASSERT_EQ(r.families.size(), 1u);
  EXPECT_EQ(r.families[0].samples, 10);
  EXPECT_EQ(r.families[0].nonproduct, 10);
  EXPECT_TRUE(r.hits.empty());
  EXPECT_THROW(scan_nonproduct_max(2, 1, 0), std::invalid_argument);
  EXPECT_THROW(scan_nonproduct_max(9, 1, 0), std::invalid_argument);
}
