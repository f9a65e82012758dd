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

// The local unitary Lie algebra g = g_0 + g_1 + ... + g_n of U(1) x SU(2)^n.
//
// Coordinates are taken in the basis {iI, A_1, B_1, C_1, ..., A_n, B_n, C_n}
// with
//
//   A = [[i, 0], [0, -i]],   B = [[0, 1], [-1, 0]],   C = [[0, i], [i, 0]].
//
// These satisfy [A,B] = 2C, [B,C] = 2A, [C,A] = 2B, so on each qubit slot the
// bracket is twice the cross product of (a, b, c) coordinate triples.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lustab/field.hpp"
#include "lustab/matrix.hpp"
#include "lustab/state.hpp"

namespace lustab {

enum class Generator { Phase, A, B, C };

inline std::size_t algebra_dimension(int n) { return 3 * static_cast<std::size_t>(n) + 1; }

/// Coordinate slot of a basis generator; qubit j is 1-based and ignored for Phase.
inline std::size_t coordinate_index(Generator g, int j = 0) {
  switch (g) {
    case Generator::Phase: return 0;
    case Generator::A: return 1 + 3 * static_cast<std::size_t>(j - 1);
    case Generator::B: return 2 + 3 * static_cast<std::size_t>(j - 1);
    case Generator::C: return 3 + 3 * static_cast<std::size_t>(j - 1);
  }
  return 0;
}

template <class T>
class BasicAlgebraElement {
 public:
  explicit BasicAlgebraElement(int n) : n_(n), coords_(algebra_dimension(n), T(0)) {
    if (n < 1) throw std::invalid_argument("algebra needs at least one qubit");
  }
  BasicAlgebraElement(int n, std::vector<T> coords) : n_(n), coords_(std::move(coords)) {
    if (n < 1) throw std::invalid_argument("algebra needs at least one qubit");
    if (coords_.size() != algebra_dimension(n))
      throw std::invalid_argument("algebra element needs 3n+1 coordinates");
    if constexpr (!is_exact_v<T>)
      for (double x : coords_)
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite algebra coordinate");
  }

  static BasicAlgebraElement basis(int n, Generator g, int j = 0) {
    if (g != Generator::Phase && (j < 1 || j > n)) throw std::out_of_range("qubit index out of range");
    BasicAlgebraElement x(n);
    x.coords_[coordinate_index(g, j)] = T(1);
    return x;
  }

  int num_qubits() const { return n_; }
  const std::vector<T>& coords() const { return coords_; }
  std::span<const T> span() const { return coords_; }

  const T& phase() const { return coords_[0]; }
  const T& operator[](std::size_t k) const { return coords_[k]; }
  T& operator[](std::size_t k) { return coords_[k]; }
  const T& coeff(Generator g, int j) const { return coords_[coordinate_index(g, j)]; }

  bool is_zero() const {
    for (const auto& x : coords_)
      if (x != T(0)) return false;
    return true;
  }

  friend BasicAlgebraElement operator+(BasicAlgebraElement a, const BasicAlgebraElement& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.coords_.size(); ++k) a.coords_[k] += b.coords_[k];
    return a;
  }
  friend BasicAlgebraElement operator-(BasicAlgebraElement a, const BasicAlgebraElement& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.coords_.size(); ++k) a.coords_[k] -= b.coords_[k];
    return a;
  }
  friend BasicAlgebraElement operator*(const T& s, BasicAlgebraElement a) {
    for (auto& x : a.coords_) x *= s;
    return a;
  }
  friend bool operator==(const BasicAlgebraElement& a, const BasicAlgebraElement& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }

  void check_same(const BasicAlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("qubit-count mismatch between algebra elements");
  }

 private:
  int n_;
  std::vector<T> coords_;
};

using AlgebraElement = BasicAlgebraElement<double>;
using ExactAlgebraElement = BasicAlgebraElement<Rational>;

template <class T>
BasicAlgebraElement<double> to_float(const BasicAlgebraElement<T>& x) {
  std::vector<double> c(x.coords().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = to_double(x.coords()[k]);
  return {x.num_qubits(), std::move(c)};
}

/// P_j X: the (a_j, b_j, c_j) coordinates of X.
template <class T>
std::array<T, 3> project(const BasicAlgebraElement<T>& x, int j) {
  if (j < 1 || j > x.num_qubits()) throw std::out_of_range("qubit index " + std::to_string(j) + " out of range");
  const std::size_t k = coordinate_index(Generator::A, j);
  return {x[k], x[k + 1], x[k + 2]};
}

/// Qubit-wise commutator. The g_0 component of the result is zero.
template <class T>
BasicAlgebraElement<T> bracket(const BasicAlgebraElement<T>& x, const BasicAlgebraElement<T>& y) {
  x.check_same(y);
  const int n = x.num_qubits();
  BasicAlgebraElement<T> z(n);
  for (int j = 1; j <= n; ++j) {
    const std::size_t k = coordinate_index(Generator::A, j);
    const T &a1 = x[k], &b1 = x[k + 1], &c1 = x[k + 2];
    const T &a2 = y[k], &b2 = y[k + 1], &c2 = y[k + 2];
    z[k] = T(2) * (b1 * c2 - c1 * b2);
    z[k + 1] = T(2) * (c1 * a2 - a1 * c2);
    z[k + 2] = T(2) * (a1 * b2 - b1 * a2);
  }
  return z;
}

namespace detail {

// Adds coeff * G psi into out for a single generator G.
template <class T>
void accumulate_generator(std::vector<complex_of<T>>& out, const std::vector<complex_of<T>>& psi, int n,
                          Generator g, int j, const T& coeff) {
  using Tr = field_traits<T>;
  if (coeff == T(0)) return;
  const complex_of<T> i_coeff = Tr::make_complex(T(0), coeff);
  const complex_of<T> r_coeff = Tr::make_complex(coeff, T(0));
  if (g == Generator::Phase) {
    for (std::size_t k = 0; k < psi.size(); ++k) out[k] += i_coeff * psi[k];
    return;
  }
  const std::size_t mask = qubit_mask(j, n);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const bool one = (k & mask) != 0;
    switch (g) {
      case Generator::A:  // i (-1)^{i_j} c_I
        if (one) out[k] -= i_coeff * psi[k];
        else out[k] += i_coeff * psi[k];
        break;
      case Generator::B:  // B|0> = -|1>, B|1> = |0>
        if (one) out[k] -= r_coeff * psi[k ^ mask];
        else out[k] += r_coeff * psi[k ^ mask];
        break;
      case Generator::C:  // C|0> = i|1>, C|1> = i|0>
        out[k] += i_coeff * psi[k ^ mask];
        break;
      case Generator::Phase: break;
    }
  }
}

}  // namespace detail

/// dPhi_psi(X): the infinitesimal action of X on psi, as an amplitude table.
template <class T>
std::vector<complex_of<T>> apply_element(const PureState& psi, const BasicAlgebraElement<T>& x) {
  const int n = psi.num_qubits();
  if (x.num_qubits() != n) throw std::invalid_argument("qubit-count mismatch between state and algebra element");
  const auto amps = psi.amplitudes_as<T>();
  std::vector<complex_of<T>> out(amps.size());
  detail::accumulate_generator<T>(out, amps, n, Generator::Phase, 0, x.phase());
  for (int j = 1; j <= n; ++j)
    for (Generator g : {Generator::A, Generator::B, Generator::C})
      detail::accumulate_generator<T>(out, amps, n, g, j, x.coeff(g, j));
  return out;
}

/// Real matrix of dPhi_psi: 2*2^n rows (real parts over imaginary parts),
/// 3n+1 columns in basis order.
template <class T>
Matrix<T> build_action_matrix(const PureState& psi) {
  using Tr = field_traits<T>;
  const int n = psi.num_qubits();
  const std::size_t dim = psi.dimension();
  const auto amps = psi.amplitudes_as<T>();
  Matrix<T> m(2 * dim, algebra_dimension(n));
  auto put = [&](std::size_t col, std::size_t k, const complex_of<T>& z) {
    m(k, col) = Tr::real(z);
    m(dim + k, col) = Tr::imag(z);
  };
  const complex_of<T> i = Tr::i();
  for (std::size_t k = 0; k < dim; ++k) put(0, k, i * amps[k]);
  for (int j = 1; j <= n; ++j) {
    const std::size_t mask = qubit_mask(j, n);
    const std::size_t ca = coordinate_index(Generator::A, j);
    for (std::size_t k = 0; k < dim; ++k) {
      const bool one = (k & mask) != 0;
      const auto& flipped = amps[k ^ mask];
      const complex_of<T> diag = i * amps[k];
      put(ca, k, one ? -diag : diag);
      put(ca + 1, k, one ? -flipped : flipped);
      put(ca + 2, k, i * flipped);
    }
  }
  return m;
}

}  // namespace lustab
