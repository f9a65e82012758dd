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

#include "lustab/factor.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "lustab/catalog.hpp"
#include "lustab/report.hpp"
#include "lustab/verify.hpp"

using namespace lustab;

using Parts = std::vector<std::vector<int>>;
using Pairs = std::vector<std::pair<int, int>>;

TEST(finest_factorization, examples) {
  EXPECT_EQ(finest_factorization(tensor(basis_state("0"), singlet_state())).parts, (Parts{{1}, {2, 3}}));
  EXPECT_EQ(finest_factorization(ghz_state(4)).parts, (Parts{{1, 2, 3, 4}}));
  EXPECT_EQ(finest_factorization(tensor(singlet_state(), singlet_state())).parts, (Parts{{1, 2}, {3, 4}}));
  EXPECT_FALSE(finest_factorization(block4_state()).is_product());
  EXPECT_EQ(finest_factorization(basis_state("0110")).parts, (Parts{{1}, {2}, {3}, {4}}));
}

TEST(finest_factorization, recovers_shuffled_products) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const LabeledState s = random_labeled_state(2 + t % 6, rng);
    EXPECT_EQ(finest_factorization(s.state).parts, s.parts) << s.label;
  }
}

TEST(finest_factorization, survives_local_unitaries) {
  Rng rng(32);
  const PureState psi = tensor(tensor(ghz_state(3), haar_state(2, rng)), basis_state("1"));
  EXPECT_EQ(finest_factorization(random_lu_transform(psi, rng)).parts, (Parts{{1, 2, 3}, {4, 5}, {6}}));
}

TEST(singlet_pairs, examples) {
  const PureState s0 = tensor(singlet_state(), basis_state("0"));
  EXPECT_EQ(singlet_pairs(s0, finest_factorization(s0)), (Pairs{{1, 2}}));
  const PureState b1 = tensor(bell_state(), basis_state("1"));
  EXPECT_EQ(singlet_pairs(b1, finest_factorization(b1)), (Pairs{{1, 2}}));
  const PureState p = basis_state("000");
  EXPECT_TRUE(singlet_pairs(p, finest_factorization(p)).empty());
  Rng rng(33);
  const PureState h = tensor(haar_state(2, rng), singlet_state());
  EXPECT_EQ(singlet_pairs(h, finest_factorization(h)), (Pairs{{3, 4}}));
}

TEST(classify, examples) {
  const Classification g = classify(ghz_state(6));
  EXPECT_FALSE(g.is_product);
  EXPECT_EQ(g.bound, BoundKind::Nonproduct);
  EXPECT_EQ(g.bound_value, 5);
  EXPECT_EQ(g.kernel_dim, 5u);
  EXPECT_TRUE(g.saturated);

  const Classification s = classify(singlet_product_state(6));
  EXPECT_TRUE(s.is_product);
  EXPECT_EQ(s.bound, BoundKind::General);
  EXPECT_EQ(s.bound_value, 9);
  EXPECT_EQ(s.singlet_pairs, (Pairs{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_TRUE(s.saturated);

  Rng rng(7);
  const Classification h = classify(haar_state(4, rng));
  EXPECT_FALSE(h.is_product);
  EXPECT_EQ(h.bound_value, 3);
  EXPECT_EQ(h.kernel_dim, 0u);
  EXPECT_FALSE(h.saturated);
}

TEST(classify, bound_selection) {
  // Odd singlet products saturate floor(3n/2) = (3n-1)/2.
  const Classification odd = classify(singlet_product_state(5));
  EXPECT_EQ(odd.bound_value, 7);
  EXPECT_TRUE(odd.saturated);

  const Classification unent = classify(basis_state("0101"));
  EXPECT_EQ(unent.bound, BoundKind::NonSinglet);
  EXPECT_EQ(unent.bound_value, 4);
  EXPECT_TRUE(unent.saturated);

  const Classification ghz_pair = classify(tensor(ghz_state(3), ghz_state(2, 1, 2)));
  EXPECT_EQ(ghz_pair.bound, BoundKind::NoSingletNoSingle);
  EXPECT_EQ(ghz_pair.bound_value, 4);
  EXPECT_EQ(ghz_pair.kernel_dim, 3u);
  EXPECT_FALSE(ghz_pair.saturated);

  EXPECT_EQ(classify(singlet_state()).bound, BoundKind::NonproductTwoQubit);
  EXPECT_EQ(classify(basis_state("1")).bound, BoundKind::NonproductOneQubit);
  for (auto k : {BoundKind::General, BoundKind::NonSinglet, BoundKind::NoSingletNoSingle, BoundKind::Nonproduct,
                 BoundKind::NonproductOneQubit, BoundKind::NonproductTwoQubit})
    EXPECT_EQ(bound_kind_from_name(bound_name(k)), k);
}

TEST(classify, excess_dimension_is_a_structure_violation) {
  const PureState psi = ghz_state(4);
  EXPECT_THROW(classify(psi, finest_factorization(psi), 4), StructureViolation);
}

TEST(classify, json_round_trip) {
  const Classification c = classify(tensor(bell_state(), ghz_state(3)));
  const nlohmann::json j = to_json(c);
  for (const char* key : {"is_product", "parts", "singlet_pairs", "single_qubit_factors", "bound_name",
                          "bound_value", "kernel_dim", "saturated"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(to_json(classification_from_json(j)), j);
}
