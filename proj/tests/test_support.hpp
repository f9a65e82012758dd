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

// Test-side reference computations built directly from the 2x2 basis
// matrices with Eigen, independent of the library's action code.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lustab/algebra.hpp"
#include "lustab/state.hpp"

namespace test_support {

using lustab::AlgebraElement;
using cd = std::complex<double>;

// The 2x2 basis matrices, written out independently of the library.
inline Eigen::Matrix2cd mat_a() {
  Eigen::Matrix2cd m;
  m << cd(0, 1), 0, 0, cd(0, -1);
  return m;
}
inline Eigen::Matrix2cd mat_b() {
  Eigen::Matrix2cd m;
  m << 0, 1, -1, 0;
  return m;
}
inline Eigen::Matrix2cd mat_c() {
  Eigen::Matrix2cd m;
  m << 0, cd(0, 1), cd(0, 1), 0;
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Dense 2^n x 2^n operator of an algebra element.
inline Eigen::MatrixXcd dense_operator(const AlgebraElement& x) {
  const int n = x.num_qubits();
  const int dim = 1 << n;
  Eigen::MatrixXcd out = cd(0, x.phase()) * Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 1; j <= n; ++j) {
    const auto [a, b, c] = lustab::project(x, j);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 1; q <= n; ++q)
      op = kron(op, q == j ? Eigen::MatrixXcd(a * mat_a() + b * mat_b() + c * mat_c())
                           : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    out += op;
  }
  return out;
}

/// Kernel dimension of the realified map X -> X psi, by full-pivot LU on the
/// dense operators.
inline int reference_kernel_dim(const lustab::PureState& psi, double tol = 1e-9) {
  const int n = psi.num_qubits();
  const auto amps = psi.float_amplitudes();
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(amps.data(), amps.size());
  const int cols = static_cast<int>(lustab::algebra_dimension(n));
  Eigen::MatrixXd m(2 * v.size(), cols);
  for (int k = 0; k < cols; ++k) {
    std::vector<double> e(cols, 0.0);
    e[k] = 1.0;
    const Eigen::VectorXcd w = dense_operator(AlgebraElement(n, e)) * v;
    m.col(k) << w.real(), w.imag();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(tol);
  return static_cast<int>(lu.dimensionOfKernel());
}

}  // namespace test_support
