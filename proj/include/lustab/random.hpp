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

// Seeded random states and local unitaries. Every sampler takes its generator
// explicitly; the same seed reproduces the same amplitude table bit for bit
// on a given standard library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lustab/state.hpp"

namespace lustab {

using Rng = std::mt19937_64;

/// Decorrelated child seed for stream `stream` of a base seed (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::complex<double> gaussian_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

/// Unitarily invariant random state: 2^(n+1) standard normals, normalized.
inline PureState haar_state(int n, Rng& rng) {
  PureState::FloatTable amps(std::size_t{1} << n);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = gaussian_complex(rng);
    norm2 += std::norm(a);
  }
  const double s = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= s;
  return PureState::floating(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

/// Haar-random element of U(2): QR of a complex Ginibre matrix with the
/// phases of R's diagonal absorbed into Q.
inline Unitary2 haar_unitary2(Rng& rng) {
  Eigen::Matrix2cd g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = gaussian_complex(rng);
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const std::complex<double> d = rr(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

inline std::vector<Unitary2> random_local_unitaries(int n, Rng& rng) {
  std::vector<Unitary2> u;
  u.reserve(n);
  for (int j = 0; j < n; ++j) u.push_back(haar_unitary2(rng));
  return u;
}

/// psi transformed by independent Haar-random single-qubit unitaries.
inline PureState random_lu_transform(const PureState& psi, Rng& rng) {
  const auto u = random_local_unitaries(psi.num_qubits(), rng);
  return apply_local_unitary(psi, u);
}

/// Uniformly random permutation of 1..n.
inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  for (int j = 0; j < n; ++j) p[j] = j + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace lustab
