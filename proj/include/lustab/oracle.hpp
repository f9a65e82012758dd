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

// Brute-force stabilizer kernel, sharing no code path with the engine's action
// matrix or SVD: each generator is materialized as a dense 2^n x 2^n Kronecker
// product, applied to psi, and the kernel of the resulting columns is found by
// Gaussian elimination (full pivoting for doubles). Intended for n <= 8.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lustab/subspace.hpp"

namespace lustab {
namespace oracle {

inline constexpr int kMaxQubits = 10;

/// Dense matrix over the Gaussian integers; every generator entry is 0, +-1 or +-i.
using Dense = std::vector<std::vector<std::complex<int>>>;

/// 2x2 matrix of a single-qubit generator (g = A, B or C).
inline Dense single_qubit_matrix(Generator g) {
  const std::complex<int> o(0, 0), one(1, 0), i(0, 1);
  switch (g) {
    case Generator::A: return {{i, o}, {o, -i}};
    case Generator::B: return {{o, one}, {-one, o}};
    case Generator::C: return {{o, i}, {i, o}};
    case Generator::Phase: break;
  }
  return {{i, o}, {o, i}};
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t ra = a.size(), rb = b.size();
  Dense out(ra * rb, std::vector<std::complex<int>>(ra * rb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return out;
}

/// I x ... x g (slot j) x ... x I, with qubit 1 leftmost; the phase generator
/// is i times the identity.
inline Dense generator_matrix(int n, Generator g, int j) {
  if (g == Generator::Phase) {
    Dense out(std::size_t{1} << n, std::vector<std::complex<int>>(std::size_t{1} << n));
    for (std::size_t k = 0; k < out.size(); ++k) out[k][k] = {0, 1};
    return out;
  }
  const Dense id = {{1, 0}, {0, 1}};
  Dense out = {{1}};
  for (int q = 1; q <= n; ++q) out = kron(out, q == j ? single_qubit_matrix(g) : id);
  return out;
}

template <class T>
std::vector<complex_of<T>> multiply(const Dense& m, const std::vector<complex_of<T>>& v) {
  using Tr = field_traits<T>;
  std::vector<complex_of<T>> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (m[r][c] != 0) out[r] += Tr::make_complex(T(m[r][c].real()), T(m[r][c].imag())) * v[c];
  return out;
}

/// Real columns (Re over Im) of G psi for each basis generator.
template <class T>
std::vector<std::vector<T>> action_columns(const PureState& psi) {
  using Tr = field_traits<T>;
  const int n = psi.num_qubits();
  const auto amps = psi.amplitudes_as<T>();
  std::vector<std::pair<Generator, int>> gens = {{Generator::Phase, 0}};
  for (int j = 1; j <= n; ++j)
    for (Generator g : {Generator::A, Generator::B, Generator::C}) gens.emplace_back(g, j);
  std::vector<std::vector<T>> cols;
  for (auto [g, j] : gens) {
    const auto w = multiply<T>(generator_matrix(n, g, j), amps);
    std::vector<T> col(2 * w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      col[k] = Tr::real(w[k]);
      col[w.size() + k] = Tr::imag(w[k]);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

namespace detail {

// Exact kernel. Columns are eliminated right to left, each pivoting on its
// last nonzero row, so the pivot order differs from the engine's RREF.
inline Matrix<Rational> exact_kernel_rows(std::vector<std::vector<Rational>> cols) {
  const std::size_t nc = cols.size(), nr = cols.front().size();
  // a[r][c], mutable copy.
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t r = 0; r < nr; ++r) a[r][c] = cols[c][r];
  std::vector<std::ptrdiff_t> pivot_row_of(nc, -1);
  std::vector<bool> row_used(nr, false);
  for (std::size_t cc = nc; cc-- > 0;) {
    std::ptrdiff_t p = -1;
    for (std::size_t r = nr; r-- > 0;)
      if (!row_used[r] && a[r][cc] != 0) {
        p = static_cast<std::ptrdiff_t>(r);
        break;
      }
    if (p < 0) continue;
    row_used[p] = true;
    pivot_row_of[cc] = p;
    const Rational inv = Rational(1) / a[p][cc];
    for (auto& v : a[p]) v *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (static_cast<std::ptrdiff_t>(r) == p || a[r][cc] == 0) continue;
      const Rational f = a[r][cc];
      for (std::size_t k = 0; k < nc; ++k) a[r][k] -= f * a[p][k];
    }
  }
  Matrix<Rational> rows(0, nc);
  for (std::size_t f = 0; f < nc; ++f) {
    if (pivot_row_of[f] >= 0) continue;
    std::vector<Rational> x(nc, Rational(0));
    x[f] = 1;
    for (std::size_t c = 0; c < nc; ++c)
      if (pivot_row_of[c] >= 0) x[c] = -a[pivot_row_of[c]][f];
    rows.append_row(x);
  }
  return rows;
}

// Float kernel by Gauss-Jordan with full pivoting; a pivot below
// tol * max|entry| ends the elimination. The null vectors are
// orthonormalized by modified Gram-Schmidt.
inline Matrix<double> float_kernel_rows(const std::vector<std::vector<double>>& cols, double tol) {
  const std::size_t nc = cols.size(), nr = cols.front().size();
  std::vector<std::vector<double>> a(nr, std::vector<double>(nc));
  double scale = 0.0;
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t r = 0; r < nr; ++r) {
      a[r][c] = cols[c][r];
      scale = std::max(scale, std::abs(a[r][c]));
    }
  std::vector<std::size_t> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t rank = 0;
  for (; rank < std::min(nr, nc); ++rank) {
    std::size_t pr = rank, pc = rank;
    double best = 0.0;
    for (std::size_t r = rank; r < nr; ++r)
      for (std::size_t c = rank; c < nc; ++c)
        if (std::abs(a[r][c]) > best) {
          best = std::abs(a[r][c]);
          pr = r;
          pc = c;
        }
    if (best <= tol * scale) break;
    std::swap(a[rank], a[pr]);
    for (auto& row : a) std::swap(row[rank], row[pc]);
    std::swap(perm[rank], perm[pc]);
    const double inv = 1.0 / a[rank][rank];
    for (auto& v : a[rank]) v *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == rank || a[r][rank] == 0.0) continue;
      const double f = a[r][rank];
      for (std::size_t k = 0; k < nc; ++k) a[r][k] -= f * a[rank][k];
    }
  }
  std::vector<std::vector<double>> null;
  for (std::size_t f = rank; f < nc; ++f) {
    std::vector<double> x(nc, 0.0);
    x[perm[f]] = 1.0;
    for (std::size_t r = 0; r < rank; ++r) x[perm[r]] = -a[r][f];
    for (const auto& q : null) {
      double d = 0.0;
      for (std::size_t k = 0; k < nc; ++k) d += q[k] * x[k];
      for (std::size_t k = 0; k < nc; ++k) x[k] -= d * q[k];
    }
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : x) v /= nrm;
    null.push_back(std::move(x));
  }
  Matrix<double> rows(0, nc);
  for (const auto& x : null) rows.append_row(x);
  return rows;
}

}  // namespace detail

/// Kernel of dPhi_psi by dense brute force. Exact psi is required for T = Rational.
template <class T>
Subspace<T> kernel(const PureState& psi, double tol = kDefaultRankTol) {
  const int n = psi.num_qubits();
  if (n > kMaxQubits) throw std::invalid_argument("oracle supports at most 10 qubits");
  if constexpr (is_exact_v<T>) {
    if (!psi.is_exact()) throw Error("exact oracle requires an exact state");
    return Subspace<T>::span_of(n, detail::exact_kernel_rows(action_columns<T>(psi)));
  } else {
    const PureState f = psi.is_exact() ? psi.to_float() : psi;
    return Subspace<T>::from_canonical(n, detail::float_kernel_rows(action_columns<T>(f), tol));
  }
}

}  // namespace oracle
}  // namespace lustab
