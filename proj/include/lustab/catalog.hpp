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

// Named states with known stabilizer structure, and the seeded random
// families used by the verification suite and the nonproduct scan.

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lustab/random.hpp"
#include "lustab/state.hpp"

namespace lustab {

struct NamedParams {
  int n = 0;
  Rational alpha{1};
  Rational beta{1};
  std::string bits;
  std::uint64_t seed = 0;
};

inline const std::vector<std::string>& named_state_names() {
  static const std::vector<std::string> names = {"ghz",   "singlet", "singlet_product", "m4",         "block4",
                                                 "w",     "basis",   "bell",            "random_haar", "random_product"};
  return names;
}

/// |00...0> alpha + |11...1> beta.
inline PureState ghz_state(int n, const Rational& alpha = 1, const Rational& beta = 1) {
  if (n < 2) throw std::invalid_argument("ghz needs n >= 2");
  if (alpha == 0 || beta == 0) throw std::invalid_argument("ghz needs nonzero alpha and beta");
  PureState::ExactTable amps(std::size_t{1} << n);
  amps.front() = alpha;
  amps.back() = beta;
  return PureState::exact(n, std::move(amps));
}

/// |01> - |10>.
inline PureState singlet_state() {
  return PureState::exact(2, {ExactComplex(0), ExactComplex(1), ExactComplex(-1), ExactComplex(0)});
}

/// |00> + |11>.
inline PureState bell_state() {
  return PureState::exact(2, {ExactComplex(1), ExactComplex(0), ExactComplex(0), ExactComplex(1)});
}

/// floor(n/2) singlets on qubit pairs (1,2), (3,4), ..., then |0> if n is odd.
inline PureState singlet_product_state(int n) {
  if (n < 2) throw std::invalid_argument("singlet_product needs n >= 2");
  PureState psi = singlet_state();
  for (int k = 1; k < n / 2; ++k) psi = tensor(psi, singlet_state());
  if (n % 2 == 1) psi = tensor(psi, PureState::exact(1, {ExactComplex(1), ExactComplex(0)}));
  return psi;
}

inline PureState basis_state(std::string_view bits) {
  auto idx = MultiIndex::parse(bits);
  if (idx.size() == 0) throw std::invalid_argument("basis state needs at least one digit");
  PureState::ExactTable amps(std::size_t{1} << idx.size());
  amps[idx.linear()] = 1;
  return PureState::exact(idx.size(), std::move(amps));
}

/// Equal superposition of the weight-1 basis states.
inline PureState w_state(int n) {
  if (n < 2) throw std::invalid_argument("w needs n >= 2");
  PureState::ExactTable amps(std::size_t{1} << n);
  for (int j = 1; j <= n; ++j) amps[qubit_mask(j, n)] = 1;
  return PureState::exact(n, std::move(amps));
}

/// |0011> + |0101> - 2|0110> - 2|1001> + |1010> + |1100>: a single 4-qubit block.
inline PureState block4_state() {
  PureState::ExactTable amps(16);
  amps[0b0011] = 1;
  amps[0b0101] = 1;
  amps[0b0110] = -2;
  amps[0b1001] = -2;
  amps[0b1010] = 1;
  amps[0b1100] = 1;
  return PureState::exact(4, std::move(amps));
}

/// (1/sqrt 6)[|0011> + |1100> + w(|1010> + |0101>) + w^2(|1001> + |0110>)], w = exp(2 pi i/3).
inline PureState m4_state() {
  const double s = 1.0 / std::sqrt(6.0);
  const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  PureState::FloatTable amps(16);
  amps[0b0011] = s;
  amps[0b1100] = s;
  amps[0b1010] = s * w;
  amps[0b0101] = s * w;
  amps[0b1001] = s * w * w;
  amps[0b0110] = s * w * w;
  return PureState::floating(4, std::move(amps));
}

/// Product of n independent Haar-random single-qubit states.
inline PureState random_product_state(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_product needs n >= 1");
  PureState psi = haar_state(1, rng);
  for (int j = 1; j < n; ++j) psi = tensor(psi, haar_state(1, rng));
  return psi;
}

/// Random symmetric state: independent complex Gaussian weights on the Dicke
/// states of each Hamming weight.
inline PureState random_symmetric_state(int n, Rng& rng) {
  std::vector<std::complex<double>> weights(n + 1);
  for (auto& c : weights) c = gaussian_complex(rng);
  PureState::FloatTable amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = weights[std::popcount(i)];
  return PureState::floating(n, std::move(amps));
}

/// Random state supported on even-weight multi-indices.
inline PureState random_even_weight_state(int n, Rng& rng) {
  PureState::FloatTable amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (std::popcount(i) % 2 == 0) amps[i] = gaussian_complex(rng);
  return PureState::floating(n, std::move(amps));
}

/// Constructs a named state. Random constructors are reproducible per seed.
inline PureState make_named(std::string_view name, const NamedParams& p = {}) {
  if (name == "ghz") return ghz_state(p.n, p.alpha, p.beta);
  if (name == "singlet") return singlet_state();
  if (name == "bell") return bell_state();
  if (name == "singlet_product") return singlet_product_state(p.n);
  if (name == "m4") return m4_state();
  if (name == "block4") return block4_state();
  if (name == "w") return w_state(p.n);
  if (name == "basis") {
    if (!p.bits.empty()) return basis_state(p.bits);
    if (p.n < 1) throw std::invalid_argument("basis needs bits or n >= 1");
    return basis_state(std::string(p.n, '0'));
  }
  if (name == "random_haar") {
    if (p.n < 1) throw std::invalid_argument("random_haar needs n >= 1");
    Rng rng(p.seed);
    return haar_state(p.n, rng);
  }
  if (name == "random_product") {
    Rng rng(p.seed);
    return random_product_state(p.n, rng);
  }
  throw std::invalid_argument("unknown state name '" + std::string(name) + "'");
}

struct CatalogEntry {
  std::string label;
  std::string name;
  NamedParams params;
  std::optional<int> expected_kernel_dim;
  /// Sorted block sizes.
  std::optional<std::vector<int>> expected_blocks;
  std::string provenance;

  PureState make() const { return make_named(name, params); }
};

/// All named states with their known stabilizer data, n <= 7.
inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string label, std::string name, NamedParams p, std::optional<int> dim,
                 std::optional<std::vector<int>> blocks, std::string prov) {
    c.push_back({std::move(label), std::move(name), std::move(p), dim, std::move(blocks), std::move(prov)});
  };
  const std::string table = "stabilizer dimension table";
  add("basis(0)", "basis", {.bits = "0"}, 1, std::vector<int>{}, table + ": all 1-qubit states, 1");
  add("basis(1)", "basis", {.bits = "1"}, 1, std::vector<int>{}, table + ": all 1-qubit states, 1");
  add("basis(00)", "basis", {.bits = "00"}, 2, std::vector<int>{}, table + ": 2-qubit product states, 2");
  add("singlet", "singlet", {}, 3, std::vector<int>{2}, table + ": 2-qubit singlet state, 3");
  add("bell", "bell", {}, 3, std::vector<int>{2}, "derived: LU-equivalent to the singlet");
  add("basis(000)", "basis", {.bits = "000"}, 3, std::vector<int>{}, table + ": unentangled states, n");
  add("basis(0110101)", "basis", {.bits = "0110101"}, 7, std::vector<int>{}, table + ": unentangled states, n");
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> blocks(n / 2, 2);
    const int dim = n % 2 == 0 ? 3 * n / 2 : (3 * n - 1) / 2;
    add("singlet_product(" + std::to_string(n) + ")", "singlet_product", {.n = n}, dim, blocks,
        table + (n % 2 == 0 ? ": product of singlets, n even, 3n/2" : ": product of singlets, n odd, (3n-1)/2"));
  }
  for (int n = 3; n <= 7; ++n)
    add("ghz(" + std::to_string(n) + ")", "ghz", {.n = n}, n - 1, std::vector<int>{}, table + ": n-qubit GHZ, n-1");
  add("ghz(4,1,2)", "ghz", {.n = 4, .alpha = 1, .beta = 2}, 3, std::vector<int>{}, "generalized GHZ: dim n-1");
  add("ghz(5,2,3)", "ghz", {.n = 5, .alpha = 2, .beta = 3}, 4, std::vector<int>{}, "generalized GHZ: dim n-1");
  add("w(3)", "w", {.n = 3}, 1, std::vector<int>{}, "derived: brute-force kernel of the W state");
  add("w(4)", "w", {.n = 4}, std::nullopt, std::nullopt, "no reference value");
  add("block4", "block4", {}, 3, std::vector<int>{4}, "single 4-qubit su(2) block example");
  add("m4", "m4", {}, 3, std::vector<int>{4}, "M4 state: single 4-qubit su(2) block");
  add("random_product(3)", "random_product", {.n = 3, .seed = 11}, 3, std::vector<int>{},
      "derived: LU-equivalent to an unentangled state");
  add("random_haar(3)", "random_haar", {.n = 3, .seed = 3}, 0, std::vector<int>{}, table + ": generic n-qubit state, 0");
  add("random_haar(4)", "random_haar", {.n = 4, .seed = 7}, 0, std::vector<int>{}, table + ": generic n-qubit state, 0");
  return c;
}

}  // namespace lustab
