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

// n-qubit pure states over exact (Gaussian-rational) or floating amplitudes.
//
// Bit order: qubit 1 is the leftmost digit of a ket label and the most
// significant bit of the linear amplitude index, so |i_1 i_2 ... i_n> lives
// at index sum_j i_j 2^(n-j).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lustab/field.hpp"
#include "lustab/matrix.hpp"

namespace lustab {

inline constexpr int kDefaultMaxQubits = 16;

/// Label (i_1 ... i_n) of a computational basis state.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
      if (b > 1) throw std::invalid_argument("multi-index digits must be 0 or 1");
  }

  static MultiIndex parse(std::string_view digits) {
    std::vector<std::uint8_t> bits;
    bits.reserve(digits.size());
    for (char ch : digits) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("multi-index digits must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return MultiIndex(std::move(bits));
  }

  static MultiIndex from_linear(std::size_t index, int n) {
    std::vector<std::uint8_t> bits(n);
    for (int j = 0; j < n; ++j) bits[j] = static_cast<std::uint8_t>((index >> (n - 1 - j)) & 1U);
    return MultiIndex(std::move(bits));
  }

  int size() const { return static_cast<int>(bits_.size()); }
  /// Digit of qubit j (1-based).
  int bit(int j) const { return bits_.at(j - 1); }

  std::size_t linear() const {
    std::size_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
  }

  std::string str() const {
    std::string s;
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Digit of qubit j (1-based) in linear index `index` of an n-qubit table.
inline int bit_of(std::size_t index, int j, int n) { return static_cast<int>((index >> (n - j)) & 1U); }
inline std::size_t qubit_mask(int j, int n) { return std::size_t{1} << (n - j); }

/// One amplitude, exact or floating. Never mixes modes implicitly.
class Scalar {
 public:
  Scalar(ExactComplex z) : value_(std::move(z)) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::complex<double> z) : value_(z) {}     // NOLINT(google-explicit-constructor)

  Mode mode() const { return std::holds_alternative<ExactComplex>(value_) ? Mode::Exact : Mode::Float; }
  const ExactComplex& exact() const { return std::get<ExactComplex>(value_); }
  std::complex<double> to_complex() const {
    if (auto* e = std::get_if<ExactComplex>(&value_)) return e->to_complex();
    return std::get<std::complex<double>>(value_);
  }
  bool is_zero() const {
    if (auto* e = std::get_if<ExactComplex>(&value_)) return e->is_zero();
    return std::get<std::complex<double>>(value_) == 0.0;
  }

 private:
  std::variant<ExactComplex, std::complex<double>> value_;
};

class PureState {
 public:
  using ExactTable = std::vector<ExactComplex>;
  using FloatTable = std::vector<std::complex<double>>;

  static PureState exact(int n, ExactTable amplitudes, int max_qubits = kDefaultMaxQubits) {
    return PureState(n, std::move(amplitudes), max_qubits);
  }
  static PureState floating(int n, FloatTable amplitudes, int max_qubits = kDefaultMaxQubits) {
    return PureState(n, std::move(amplitudes), max_qubits);
  }

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return std::size_t{1} << n_; }
  Mode mode() const { return std::holds_alternative<ExactTable>(amps_) ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return mode() == Mode::Exact; }

  const ExactTable& exact_amplitudes() const {
    if (!is_exact()) throw std::logic_error("state is in Float mode");
    return std::get<ExactTable>(amps_);
  }
  /// Amplitudes as doubles; promotes Exact -> Float.
  FloatTable float_amplitudes() const {
    if (auto* f = std::get_if<FloatTable>(&amps_)) return *f;
    const auto& e = std::get<ExactTable>(amps_);
    FloatTable out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i].to_complex();
    return out;
  }

  /// Amplitude table over the field T (Rational requires an Exact state).
  template <class T>
  std::vector<complex_of<T>> amplitudes_as() const {
    if constexpr (is_exact_v<T>) return exact_amplitudes();
    else return float_amplitudes();
  }

  Scalar amplitude(const MultiIndex& index) const {
    if (index.size() != n_) throw std::invalid_argument("multi-index length does not match qubit count");
    if (is_exact()) return exact_amplitudes()[index.linear()];
    return std::get<FloatTable>(amps_)[index.linear()];
  }

  PureState to_float() const { return floating(n_, float_amplitudes(), std::max(n_, kDefaultMaxQubits)); }

  double norm() const {
    double s = 0.0;
    for (const auto& z : float_amplitudes()) s += std::norm(z);
    return std::sqrt(s);
  }

  /// Exact squared norm; Exact mode only.
  Rational exact_norm2() const {
    Rational s = 0;
    for (const auto& z : exact_amplitudes()) s += z.norm2();
    return s;
  }

  friend bool operator==(const PureState& a, const PureState& b) { return a.n_ == b.n_ && a.amps_ == b.amps_; }

 private:
  template <class Table>
  PureState(int n, Table amps, int max_qubits) : n_(n), amps_(std::move(amps)) {
    if (n < 1) throw std::invalid_argument("a state needs at least one qubit");
    if (n > max_qubits)
      throw std::invalid_argument("qubit count " + std::to_string(n) + " exceeds cap " + std::to_string(max_qubits));
    const auto& table = std::get<Table>(amps_);
    if (table.size() != dimension()) throw std::invalid_argument("amplitude table has wrong length");
    bool any = false;
    for (const auto& z : table) {
      if constexpr (std::is_same_v<Table, FloatTable>) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
          throw std::invalid_argument("non-finite amplitude");
        any = any || z != 0.0;
      } else {
        any = any || !z.is_zero();
      }
    }
    if (!any) throw std::invalid_argument("all-zero state");
  }

  int n_;
  std::variant<ExactTable, FloatTable> amps_;
};

/// psi (x) phi: qubits of phi are appended after those of psi. The result is
/// Exact iff both inputs are.
inline PureState tensor(const PureState& psi, const PureState& phi) {
  const int n = psi.num_qubits() + phi.num_qubits();
  const int cap = std::max(n, kDefaultMaxQubits);
  if (psi.is_exact() && phi.is_exact()) {
    const auto& a = psi.exact_amplitudes();
    const auto& b = phi.exact_amplitudes();
    PureState::ExactTable out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
    return PureState::exact(n, std::move(out), cap);
  }
  auto a = psi.float_amplitudes();
  auto b = phi.float_amplitudes();
  PureState::FloatTable out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  return PureState::floating(n, std::move(out), cap);
}

/// Relabels qubits: qubit j of the input becomes qubit perm[j-1] of the output
/// (1-based labels).
inline PureState permute_qubits(const PureState& psi, std::span<const int> perm) {
  const int n = psi.num_qubits();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p]) throw std::invalid_argument("not a permutation of 1..n");
    seen[p] = true;
  }
  auto target = [&](std::size_t idx) {
    std::size_t out = 0;
    for (int j = 1; j <= n; ++j)
      if (bit_of(idx, j, n)) out |= qubit_mask(perm[j - 1], n);
    return out;
  };
  if (psi.is_exact()) {
    const auto& a = psi.exact_amplitudes();
    PureState::ExactTable out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[target(i)] = a[i];
    return PureState::exact(n, std::move(out), std::max(n, kDefaultMaxQubits));
  }
  auto a = psi.float_amplitudes();
  PureState::FloatTable out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[target(i)] = a[i];
  return PureState::floating(n, std::move(out), std::max(n, kDefaultMaxQubits));
}

using Unitary2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTol = 1e-10;

/// U_1 (x) ... (x) U_n applied to psi. Output is always Float.
inline PureState apply_local_unitary(const PureState& psi, std::span<const Unitary2> factors) {
  const int n = psi.num_qubits();
  if (static_cast<int>(factors.size()) != n)
    throw std::invalid_argument("expected one 2x2 factor per qubit");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Unitary2& u = factors[k];
    if (!u.allFinite() || (u.adjoint() * u - Unitary2::Identity()).cwiseAbs().maxCoeff() > kUnitaryTol)
      throw std::invalid_argument("factor " + std::to_string(k + 1) + " is not unitary");
  }
  auto amps = psi.float_amplitudes();
  for (int j = 1; j <= n; ++j) {
    const Unitary2& u = factors[j - 1];
    const std::size_t mask = qubit_mask(j, n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (i & mask) continue;
      const auto a0 = amps[i];
      const auto a1 = amps[i | mask];
      amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[i | mask] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  return PureState::floating(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

/// 2x2 Hermitian operator [[h00, h01], [conj(h01), h11]] over the real field T.
template <class T>
struct BasicHermitianOneQubit {
  T h00{0};
  T h11{0};
  complex_of<T> h01{};

  T trace() const { return h00 + h11; }
};

using HermitianOneQubit = BasicHermitianOneQubit<double>;
using ExactHermitianOneQubit = BasicHermitianOneQubit<Rational>;

namespace detail {

template <class T>
BasicHermitianOneQubit<T> reduced_density_impl(const std::vector<complex_of<T>>& amps, int n, int j, const T& norm2) {
  const std::size_t mask = qubit_mask(j, n);
  BasicHermitianOneQubit<T> rho;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const auto& a0 = amps[i];
    const auto& a1 = amps[i | mask];
    if constexpr (is_exact_v<T>) {
      rho.h00 += a0.norm2();
      rho.h11 += a1.norm2();
      rho.h01 += a0 * a1.conj();
    } else {
      rho.h00 += std::norm(a0);
      rho.h11 += std::norm(a1);
      rho.h01 += a0 * std::conj(a1);
    }
  }
  rho.h00 /= norm2;
  rho.h11 /= norm2;
  if constexpr (is_exact_v<T>) rho.h01 = {rho.h01.re / norm2, rho.h01.im / norm2};
  else rho.h01 /= norm2;
  return rho;
}

inline void check_qubit(int j, int n) {
  if (j < 1 || j > n) throw std::out_of_range("qubit index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
}

}  // namespace detail

/// Partial trace of the normalized state onto qubit j.
inline HermitianOneQubit reduced_density_one_qubit(const PureState& psi, int j) {
  detail::check_qubit(j, psi.num_qubits());
  auto amps = psi.float_amplitudes();
  double n2 = 0.0;
  for (const auto& z : amps) n2 += std::norm(z);
  return detail::reduced_density_impl<double>(amps, psi.num_qubits(), j, n2);
}

/// Exact partial trace (Exact states only); the trace is exactly 1.
inline ExactHermitianOneQubit reduced_density_one_qubit_exact(const PureState& psi, int j) {
  detail::check_qubit(j, psi.num_qubits());
  return detail::reduced_density_impl<Rational>(psi.exact_amplitudes(), psi.num_qubits(), j, psi.exact_norm2());
}

/// Default relative singular-value cutoff for Float rank decisions.
inline constexpr double kDefaultRankTol = 1e-9;

/// Schmidt rank of psi across the cut S | complement (1-based qubits).
inline std::size_t bipartition_rank(const PureState& psi, std::span<const int> subset, double tol = kDefaultRankTol) {
  const int n = psi.num_qubits();
  std::vector<bool> in_s(n + 1, false);
  for (int q : subset) {
    detail::check_qubit(q, n);
    in_s[q] = true;
  }
  const int s = static_cast<int>(std::count(in_s.begin(), in_s.end(), true));
  if (s == 0 || s == n) throw std::invalid_argument("bipartition needs a nonempty proper subset");

  std::vector<int> left, right;
  for (int j = 1; j <= n; ++j) (in_s[j] ? left : right).push_back(j);
  auto sub_index = [&](std::size_t idx, const std::vector<int>& qubits) {
    std::size_t v = 0;
    for (int q : qubits) v = (v << 1) | static_cast<std::size_t>(bit_of(idx, q, n));
    return v;
  };
  const std::size_t rows = std::size_t{1} << left.size();
  const std::size_t cols = std::size_t{1} << right.size();

  if (psi.is_exact()) {
    Matrix<ExactComplex> m(rows, cols);
    const auto& a = psi.exact_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) m(sub_index(i, left), sub_index(i, right)) = a[i];
    return exact_rank(std::move(m));
  }
  Eigen::MatrixXcd m(rows, cols);
  auto a = psi.float_amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) m(sub_index(i, left), sub_index(i, right)) = a[i];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sigma = svd.singularValues();
  const double cut = tol * sigma(0);
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    if (sigma(k) > cut) ++r;
  return r;
}

}  // namespace lustab
