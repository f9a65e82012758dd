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

// The stabilizer subalgebra K = ker dPhi_psi and its su(2) block structure.
//
// Block detection never enumerates qubit subsets. A qubit j is a block qubit
// iff dim P_j K = 3. Because K splits as a direct sum over blocks plus a
// residual, an element of K vanishes on one qubit of a block iff its block
// component is zero, iff it vanishes on every qubit of that block. Two block
// qubits therefore share a block exactly when their nullifiers
// Null_j = {X in K : P_j X = 0} coincide.

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "lustab/algebra.hpp"
#include "lustab/matrix.hpp"
#include "lustab/state.hpp"
#include "lustab/subspace.hpp"

namespace lustab {

struct KernelOptions {
  /// Relative singular-value cutoff for the action matrix (Float only).
  double tol = kDefaultRankTol;
  /// Thresholds bracketing the stability check.
  double loose_tol = 1e-7;
  double tight_tol = 1e-11;
};

template <class T>
struct Kernel {
  Subspace<T> space;
  /// False when the kernel dimension differs between loose_tol and tight_tol.
  bool stable = true;
  std::size_t dim_loose = 0;
  std::size_t dim_tight = 0;

  std::size_t dim() const { return space.dim(); }
  std::string warning() const {
    if (stable) return {};
    return "kernel dimension unstable under tolerance: " + std::to_string(dim_loose) + " at loose threshold vs " +
           std::to_string(dim_tight) + " at tight threshold";
  }
};

/// kernel of the realified action matrix of psi.
template <class T>
Kernel<T> compute_kernel(const PureState& psi, const KernelOptions& opts = {}) {
  const int n = psi.num_qubits();
  const Matrix<T> m = build_action_matrix<T>(psi);
  if constexpr (is_exact_v<T>) {
    auto s = Subspace<T>::from_canonical(n, exact_null_space(m));
    const std::size_t d = s.dim();
    return {std::move(s), true, d, d};
  } else {
    auto svd = detail::right_svd(detail::to_eigen(m));
    const std::size_t cols = m.cols();
    const std::size_t rank = detail::count_above(svd.sigma, Threshold::rel(opts.tol));
    Matrix<double> rows(cols - rank, cols);
    for (std::size_t k = rank; k < cols; ++k)
      for (std::size_t c = 0; c < cols; ++c) rows(k - rank, c) = svd.v(c, k);
    Kernel<double> out{Subspace<double>::from_canonical(n, std::move(rows))};
    out.dim_loose = cols - detail::count_above(svd.sigma, Threshold::rel(opts.loose_tol));
    out.dim_tight = cols - detail::count_above(svd.sigma, Threshold::rel(opts.tight_tol));
    out.stable = out.dim_loose == out.dim_tight;
    return out;
  }
}

/// ||dPhi_psi(X)|| for a real element (any field).
template <class T>
double action_norm(const PureState& psi, const BasicAlgebraElement<T>& x) {
  const auto fx = to_float(x);
  double s = 0.0;
  for (const auto& z : apply_element<double>(psi, fx)) s += std::norm(z);
  return std::sqrt(s);
}

namespace detail {

inline std::vector<std::size_t> qubit_columns(int j) {
  const std::size_t k = coordinate_index(Generator::A, j);
  return {k, k + 1, k + 2};
}

}  // namespace detail

/// dim P_j K. Genuine kernels give 0, 1 or 3; a 2 is reported as a
/// StructureViolation (it can only come from a tolerance failure).
template <class T>
int qubit_projection_dim(const Subspace<T>& k, int j) {
  if (j < 1 || j > k.num_qubits()) throw std::out_of_range("qubit index " + std::to_string(j) + " out of range");
  const auto cols = detail::qubit_columns(j);
  const int d = static_cast<int>(rank(k.basis().select_columns(cols), Threshold::abs(kSubspaceTol)));
  if (d == 2)
    throw StructureViolation("projection of the kernel onto qubit " + std::to_string(j) +
                             " has dimension 2; check the tolerance");
  return d;
}

/// K intersected with the coordinate subalgebra spanned by the qubits in
/// `qubits` (plus g_0 when include_g0 is set). With include_g0 and
/// qubits = N \ S this is K intersect gbar_S.
template <class T>
Subspace<T> intersect_support(const Subspace<T>& k, std::span<const int> qubits, bool include_g0) {
  const int n = k.num_qubits();
  std::vector<bool> allowed(algebra_dimension(n), false);
  allowed[0] = include_g0;
  for (int q : qubits) {
    if (q < 1 || q > n) throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
    for (auto c : detail::qubit_columns(q)) allowed[c] = true;
  }
  std::vector<std::size_t> forbidden;
  for (std::size_t c = 0; c < allowed.size(); ++c)
    if (!allowed[c]) forbidden.push_back(c);
  if (forbidden.empty() || k.dim() == 0) return k;

  // Coefficient vectors c with c^T B vanishing on the forbidden columns.
  const Matrix<T> coeffs =
      null_space(k.basis().select_columns(forbidden).transpose(), Threshold::abs(kSubspaceTol));
  if (coeffs.rows() == 0) return Subspace<T>(n);
  Matrix<T> rows = coeffs * k.basis();
  if constexpr (!is_exact_v<T>)
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (auto c : forbidden) rows(r, c) = 0.0;
  return Subspace<T>::span_of(n, rows);
}

template <class T>
Subspace<T> intersect_support(const Subspace<T>& k, std::initializer_list<int> qubits, bool include_g0) {
  std::vector<int> q(qubits);
  return intersect_support(k, std::span<const int>(q), include_g0);
}

/// Qubits of {1..n} not in `set`.
inline std::vector<int> complement(int n, std::span<const int> set) {
  std::vector<bool> in(n + 1, false);
  for (int q : set) in.at(q) = true;
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (!in[j]) out.push_back(j);
  return out;
}

/// K intersect gbar_S = K intersect (g_0 + g_{N \ S}).
template <class T>
Subspace<T> intersect_complement(const Subspace<T>& k, std::span<const int> s) {
  return intersect_support(k, complement(k.num_qubits(), s), true);
}

/// Max over basis pairs of the distance from [X_a, X_b] to span K.
template <class T>
double bracket_closure_residual(const Subspace<T>& k) {
  double worst = 0.0;
  const auto elems = k.elements();
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      worst = std::max(worst, k.distance(bracket(elems[a], elems[b]).span()));
  return worst;
}

/// U, V, W spanning K intersect g_S with [U,V] = W, [V,W] = U, [W,U] = V.
struct Su2Generators {
  AlgebraElement u;
  AlgebraElement v;
  AlgebraElement w;
};

inline double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.coords().size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

/// Largest coordinate error over the three bracket relations.
inline double su2_relation_error(const Su2Generators& g) {
  return std::max({max_abs_diff(bracket(g.u, g.v), g.w), max_abs_diff(bracket(g.v, g.w), g.u),
                   max_abs_diff(bracket(g.w, g.u), g.v)});
}

/// Builds normalized su(2) generators from two independent elements X, Y of
/// a block subalgebra: Z = [X,Y], X' = [Y,Z], then [Z,X'] = bY and
/// [X',Y] = cZ fix the rescaling U = X'/sqrt(bc), V = Y/sqrt(c), W = Z/sqrt(b).
template <class T>
Su2Generators extract_su2_generators(const BasicAlgebraElement<T>& x, const BasicAlgebraElement<T>& y) {
  const auto z = bracket(x, y);
  const auto xp = bracket(y, z);
  const T yy = dot<T>(y.span(), y.span());
  const T zz = dot<T>(z.span(), z.span());
  if (yy == T(0) || zz == T(0)) throw StructureViolation("degenerate block subalgebra elements");
  const double b = to_double(T(dot<T>(bracket(z, xp).span(), y.span()) / yy));
  const double c = to_double(T(dot<T>(bracket(xp, y).span(), z.span()) / zz));
  if (!(b > 0.0) || !(c > 0.0)) throw StructureViolation("block subalgebra is not su(2)");
  return {(1.0 / std::sqrt(b * c)) * to_float(xp), (1.0 / std::sqrt(c)) * to_float(y),
          (1.0 / std::sqrt(b)) * to_float(z)};
}

struct BlockReport {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  int p = 0;
  std::vector<int> block_qubits;
  std::size_t residual_dim = 0;
  std::size_t kernel_dim = 0;
  std::vector<int> per_qubit_projection_dims;
  std::vector<Su2Generators> generators;
  /// dim(K intersect g_S) per block; 3 on success.
  std::vector<std::size_t> block_subalgebra_dims;
  double max_generator_error = 0.0;
  bool formula_holds = false;

  std::vector<int> block_sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    std::sort(s.begin(), s.end());
    return s;
  }
};

inline constexpr double kGeneratorTol = 1e-8;

/// Finds the su(2) blocks of a kernel and fills the dimension-formula report.
/// Throws StructureViolation on an odd block, a block subalgebra that is not
/// 3-dimensional, or a failed dimension formula.
template <class T>
BlockReport detect_su2_blocks(const Subspace<T>& k) {
  const int n = k.num_qubits();
  BlockReport rep;
  rep.n = n;
  rep.kernel_dim = k.dim();
  for (int j = 1; j <= n; ++j) {
    const int d = qubit_projection_dim(k, j);
    rep.per_qubit_projection_dims.push_back(d);
    if (d == 3) rep.block_qubits.push_back(j);
  }

  std::vector<Subspace<T>> nullifiers;
  for (int j : rep.block_qubits) {
    const int only[] = {j};
    nullifiers.push_back(intersect_complement(k, only));
  }
  std::vector<bool> assigned(rep.block_qubits.size(), false);
  for (std::size_t a = 0; a < rep.block_qubits.size(); ++a) {
    if (assigned[a]) continue;
    std::vector<int> block{rep.block_qubits[a]};
    assigned[a] = true;
    for (std::size_t b = a + 1; b < rep.block_qubits.size(); ++b) {
      if (assigned[b] || nullifiers[a].dim() != nullifiers[b].dim()) continue;
      const int pair[] = {rep.block_qubits[a], rep.block_qubits[b]};
      if (intersect_complement(k, pair).dim() == nullifiers[a].dim()) {
        block.push_back(rep.block_qubits[b]);
        assigned[b] = true;
      }
    }
    rep.blocks.push_back(std::move(block));
  }
  rep.p = static_cast<int>(rep.blocks.size());

  for (const auto& block : rep.blocks) {
    if (block.size() % 2 != 0)
      throw StructureViolation("su(2) block with odd qubit count " + std::to_string(block.size()));
    const auto sub = intersect_support(k, block, false);
    rep.block_subalgebra_dims.push_back(sub.dim());
    if (sub.dim() != 3)
      throw StructureViolation("block subalgebra has dimension " + std::to_string(sub.dim()) + ", expected 3");
    auto gens = extract_su2_generators(sub.element(0), sub.element(1));
    rep.max_generator_error = std::max(rep.max_generator_error, su2_relation_error(gens));
    rep.generators.push_back(std::move(gens));
  }

  rep.residual_dim = intersect_complement(k, rep.block_qubits).dim();
  rep.formula_holds = rep.kernel_dim == 3 * static_cast<std::size_t>(rep.p) + rep.residual_dim;
  if (!rep.formula_holds)
    throw StructureViolation("dimension formula fails: dim K = " + std::to_string(rep.kernel_dim) + ", 3p + residual = " +
                             std::to_string(3 * rep.p + rep.residual_dim));
  return rep;
}

}  // namespace lustab
