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

#include <algorithm>
#include <cmath>
#include <vector>

#include "lustab/algebra.hpp"
#include "lustab/matrix.hpp"

namespace lustab {

/// A real linear subspace of g, held by a canonical row basis: RREF for exact
/// fields (so equal subspaces compare equal), orthonormal rows for doubles.
template <class T>
class Subspace {
 public:
  Subspace(int n) : n_(n), basis_(0, algebra_dimension(n)) {}  // NOLINT(google-explicit-constructor)

  /// Canonicalizes an arbitrary spanning set.
  static Subspace span_of(int n, const Matrix<T>& rows, Threshold thr = Threshold::abs(kSubspaceTol)) {
    Subspace s(n);
    if (rows.rows() > 0) s.basis_ = row_basis(rows, thr);
    return s;
  }

  /// Adopts rows the caller guarantees are already canonical.
  static Subspace from_canonical(int n, Matrix<T> rows) {
    Subspace s(n);
    if (rows.rows() > 0) s.basis_ = std::move(rows);
    return s;
  }

  int num_qubits() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }

  BasicAlgebraElement<T> element(std::size_t i) const { return {n_, basis_.row_vector(i)}; }
  std::vector<BasicAlgebraElement<T>> elements() const {
    std::vector<BasicAlgebraElement<T>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
    return out;
  }

  /// Euclidean distance from v to this subspace (coordinates in basis order).
  double distance(std::span<const T> v) const {
    if constexpr (is_exact_v<T>) {
      if (contains_exact(v)) return 0.0;
      std::vector<double> w(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) w[k] = to_double(v[k]);
      return to_float().distance(w);
    } else {
      std::vector<double> r(v.begin(), v.end());
      for (std::size_t i = 0; i < dim(); ++i) {
        auto b = basis_.row(i);
        double c = dot<double>(b, v);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * b[k];
      }
      return norm2(r);
    }
  }

  bool contains(const BasicAlgebraElement<T>& x, double tol = kSubspaceTol) const {
    if constexpr (is_exact_v<T>) return contains_exact(x.span());
    else return distance(x.span()) <= tol * std::max(1.0, norm2(x.span()));
  }

  Subspace<double> to_float() const {
    if constexpr (is_exact_v<T>) return Subspace<double>::span_of(n_, basis_.template cast<double>());
    else return *this;
  }

 private:
  bool contains_exact(std::span<const T> v) const {
    Matrix<T> m = basis_;
    if (m.rows() == 0) m = Matrix<T>(0, v.size());
    m.append_row(v);
    return rank(m, Threshold{}) == dim();
  }

  int n_;
  Matrix<T> basis_;
};

/// Subspace equality. Exact pairs compare canonical forms; anything involving
/// doubles compares via mutual containment (principal angles) at `tol`.
template <class T, class U>
bool same_subspace(const Subspace<T>& a, const Subspace<U>& b, double tol = kSubspaceTol) {
  if (a.num_qubits() != b.num_qubits() || a.dim() != b.dim()) return false;
  if constexpr (std::is_same_v<T, U> && is_exact_v<T>) {
    return a.basis() == b.basis();
  } else {
    auto fa = a.to_float();
    auto fb = b.to_float();
    for (std::size_t i = 0; i < fa.dim(); ++i)
      if (fb.distance(fa.basis().row(i)) > tol) return false;
    for (std::size_t i = 0; i < fb.dim(); ++i)
      if (fa.distance(fb.basis().row(i)) > tol) return false;
    return true;
  }
}

}  // namespace lustab
