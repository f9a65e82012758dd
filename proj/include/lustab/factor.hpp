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

// Tensor-product structure of a pure state and the maximum stabilizer
// dimension bounds that apply to it:
//
//   any state                                 dim K <= floor(3n/2)
//   no singlet factor                         dim K <= n
//   no singlet and no single-qubit factor     dim K <= n - 1
//   nonproduct                                dim K <= 1, 3, n - 1  (n = 1, 2, >= 3)

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lustab/state.hpp"

namespace lustab {

struct Factorization {
  /// Qubit sets (1-based, ascending), ordered by smallest member.
  std::vector<std::vector<int>> parts;
  bool finest = true;

  bool is_product() const { return parts.size() > 1; }
};

namespace detail {

// Calls visit(subset) for every k-subset of `pool` in lexicographic order
// until visit returns true.
template <class Visit>
bool for_each_subset(const std::vector<int>& pool, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t m = i; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
}

inline void split_part(const PureState& psi, std::vector<int> part, double tol,
                       std::vector<std::vector<int>>& out) {
  for (std::size_t k = 1; k <= part.size() / 2; ++k) {
    std::vector<int> found;
    bool split = for_each_subset(part, k, [&](const std::vector<int>& s) {
      if (bipartition_rank(psi, s, tol) != 1) return false;
      found = s;
      return true;
    });
    if (split) {
      std::vector<int> rest;
      std::set_difference(part.begin(), part.end(), found.begin(), found.end(), std::back_inserter(rest));
      split_part(psi, std::move(found), tol, out);
      split_part(psi, std::move(rest), tol, out);
      return;
    }
  }
  out.push_back(std::move(part));
}

}  // namespace detail

/// Splits psi into its irreducible tensor factors. A cut through the whole
/// state is a product cut for a part iff it is one for psi, so all rank
/// tests run on psi itself.
inline Factorization finest_factorization(const PureState& psi, double tol = kDefaultRankTol) {
  std::vector<int> all(psi.num_qubits());
  for (int j = 0; j < psi.num_qubits(); ++j) all[j] = j + 1;
  Factorization f;
  detail::split_part(psi, std::move(all), tol, f.parts);
  std::sort(f.parts.begin(), f.parts.end());
  return f;
}

inline constexpr double kMaximallyMixedTol = 1e-8;

/// True when the one-qubit marginal of qubit j is I/2.
inline bool has_maximally_mixed_marginal(const PureState& psi, int j) {
  if (psi.is_exact()) {
    const auto rho = reduced_density_one_qubit_exact(psi, j);
    return rho.h00 == Rational(1, 2) && rho.h11 == Rational(1, 2) && rho.h01.is_zero();
  }
  const auto rho = reduced_density_one_qubit(psi, j);
  return std::abs(rho.h00 - 0.5) <= kMaximallyMixedTol && std::abs(rho.h11 - 0.5) <= kMaximallyMixedTol &&
         std::abs(rho.h01) <= kMaximallyMixedTol;
}

/// 2-qubit factors that are maximally entangled, i.e. LU-equivalent to the
/// singlet. The marginal of a qubit in a factor equals its marginal in psi.
inline std::vector<std::pair<int, int>> singlet_pairs(const PureState& psi, const Factorization& f) {
  std::vector<std::pair<int, int>> out;
  for (const auto& part : f.parts)
    if (part.size() == 2 && has_maximally_mixed_marginal(psi, part[0])) out.emplace_back(part[0], part[1]);
  return out;
}

enum class BoundKind { General, NonSinglet, NoSingletNoSingle, Nonproduct, NonproductOneQubit, NonproductTwoQubit };

inline std::string bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::General: return "3n/2";
    case BoundKind::NonSinglet: return "n (no singlet factor)";
    case BoundKind::NoSingletNoSingle: return "n-1 (no singlet, no single-qubit factor)";
    case BoundKind::Nonproduct: return "n-1 (nonproduct)";
    case BoundKind::NonproductOneQubit: return "1 (nonproduct, n=1)";
    case BoundKind::NonproductTwoQubit: return "3 (nonproduct, n=2)";
  }
  return {};
}

inline BoundKind bound_kind_from_name(const std::string& s) {
  for (auto k : {BoundKind::General, BoundKind::NonSinglet, BoundKind::NoSingletNoSingle, BoundKind::Nonproduct,
                 BoundKind::NonproductOneQubit, BoundKind::NonproductTwoQubit})
    if (bound_name(k) == s) return k;
  throw std::invalid_argument("unknown bound name '" + s + "'");
}

struct Classification {
  int n = 0;
  bool is_product = false;
  std::vector<std::vector<int>> parts;
  std::vector<std::pair<int, int>> singlet_pairs;
  std::vector<int> single_qubit_factors;
  BoundKind bound = BoundKind::General;
  /// Integer bound; dimensions are integers, so 3n/2 is floored.
  int bound_value = 0;
  std::size_t kernel_dim = 0;
  bool saturated = false;

  bool has_single_qubit_factor() const { return !single_qubit_factors.empty(); }
};

/// Chooses the tightest bound for the given factor structure.
inline std::pair<BoundKind, int> applicable_bound(int n, const Factorization& f, bool has_singlet) {
  bool single = false;
  for (const auto& p : f.parts) single = single || p.size() == 1;
  if (!f.is_product()) {
    if (n == 1) return {BoundKind::NonproductOneQubit, 1};
    if (n == 2) return {BoundKind::NonproductTwoQubit, 3};
    return {BoundKind::Nonproduct, n - 1};
  }
  if (has_singlet) return {BoundKind::General, (3 * n) / 2};
  if (!single) return {BoundKind::NoSingletNoSingle, n - 1};
  return {BoundKind::NonSinglet, n};
}

/// Classification from precomputed pieces. Throws StructureViolation when
/// kernel_dim exceeds the applicable bound.
inline Classification classify(const PureState& psi, const Factorization& f, std::size_t kernel_dim) {
  Classification c;
  c.n = psi.num_qubits();
  c.parts = f.parts;
  c.is_product = f.is_product();
  c.singlet_pairs = singlet_pairs(psi, f);
  for (const auto& p : f.parts)
    if (p.size() == 1) c.single_qubit_factors.push_back(p[0]);
  std::tie(c.bound, c.bound_value) = applicable_bound(c.n, f, !c.singlet_pairs.empty());
  c.kernel_dim = kernel_dim;
  c.saturated = static_cast<int>(kernel_dim) == c.bound_value;
  if (static_cast<int>(kernel_dim) > c.bound_value)
    throw StructureViolation("kernel dimension " + std::to_string(kernel_dim) + " exceeds bound " +
                             bound_name(c.bound) + " = " + std::to_string(c.bound_value));
  return c;
}

}  // namespace lustab
