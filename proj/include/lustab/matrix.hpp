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

// Dense matrices and the rank / null-space / row-space primitives the
// stabilizer engine is built on. Exact fields use Gauss-Jordan elimination;
// doubles use a rank-revealing QR + SVD.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lustab/field.hpp"

namespace lustab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  void append_row(std::span<const T> values) {
    assert(rows_ == 0 || values.size() == cols_);
    if (rows_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Keeps the listed columns, in the listed order.
  Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix s(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < columns.size(); ++k) s(r, k) = (*this)(r, columns[k]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero_value(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = convert<U>((*this)(r, c));
    return m;
  }

 private:
  template <class U>
  static U convert(const T& v) {
    if constexpr (std::is_same_v<U, double>) return to_double(v);
    else return U(v);
  }
  static bool is_zero_value(const T& v) { return v == T(0); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Cutoff below which a singular value (Float) counts as zero. Relative
/// thresholds scale with the largest singular value of the matrix.
struct Threshold {
  double value = 1e-9;
  bool relative = true;

  static Threshold rel(double v) { return {v, true}; }
  static Threshold abs(double v) { return {v, false}; }
  double cutoff(double sigma_max) const { return relative ? value * sigma_max : value; }
};

/// Default absolute threshold for operations on orthonormal subspace bases.
inline constexpr double kSubspaceTol = 1e-8;

// ---------------------------------------------------------------------------
// Exact fields (Rational, ExactComplex)
// ---------------------------------------------------------------------------

/// In-place reduced row-echelon form. Pivots are taken left to right, first
/// nonzero row in each column. Returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    F inv = F(1) / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t exact_rank(Matrix<F> m) {
  return rref_in_place(m).size();
}

/// Nonzero rows of the RREF: the canonical basis of the row space.
template <class F>
Matrix<F> exact_row_basis(Matrix<F> m) {
  std::size_t cols = m.cols();
  auto pivots = rref_in_place(m);
  Matrix<F> out(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r, c);
  return out;
}

/// Basis (rows) of {x : m x = 0}, returned in canonical RREF.
template <class F>
Matrix<F> exact_null_space(Matrix<F> m) {
  std::size_t cols = m.cols();
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<F> basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> x(cols, F(0));
    x[f] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    basis.append_row(x);
  }
  if (basis.rows() == 0) return Matrix<F>(0, cols);
  return exact_row_basis(std::move(basis));
}

// ---------------------------------------------------------------------------
// Doubles
// ---------------------------------------------------------------------------

namespace detail {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

/// Singular values (padded with zeros to the column count, descending) and
/// the full right singular basis V (cols x cols).
struct RightSvd {
  Eigen::VectorXd sigma;
  Eigen::MatrixXd v;
};

inline RightSvd right_svd(const Eigen::MatrixXd& m) {
  const auto cols = m.cols();
  RightSvd out;
  out.sigma = Eigen::VectorXd::Zero(cols);
  if (cols == 0) return out;
  if (m.rows() == 0) {
    out.v = Eigen::MatrixXd::Identity(cols, cols);
    return out;
  }
  if (m.rows() > cols) {
    // Tall matrices: the R factor carries the same singular values and V.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullV);
    out.sigma = svd.singularValues();
    out.v = svd.matrixV();
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    out.sigma.head(svd.singularValues().size()) = svd.singularValues();
    out.v = svd.matrixV();
  }
  return out;
}

inline std::size_t count_above(const Eigen::VectorXd& sigma, Threshold thr) {
  if (sigma.size() == 0) return 0;
  const double cut = thr.cutoff(sigma.maxCoeff());
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cut && sigma(i) > 0.0) ++k;
  return k;
}

}  // namespace detail

inline std::size_t float_rank(const Matrix<double>& m, Threshold thr) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return detail::count_above(detail::right_svd(detail::to_eigen(m)).sigma, thr);
}

/// Orthonormal basis (rows) of {x : m x = 0}.
inline Matrix<double> float_null_space(const Matrix<double>& m, Threshold thr) {
  const std::size_t cols = m.cols();
  auto svd = detail::right_svd(detail::to_eigen(m));
  std::size_t rank = m.rows() == 0 ? 0 : detail::count_above(svd.sigma, thr);
  Matrix<double> out(cols - rank, cols);
  for (std::size_t k = rank; k < cols; ++k)
    for (std::size_t c = 0; c < cols; ++c) out(k - rank, c) = svd.v(c, k);
  return out;
}

/// Orthonormal basis (rows) of the row space of m.
inline Matrix<double> float_row_basis(const Matrix<double>& m, Threshold thr) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) return Matrix<double>(0, cols);
  auto svd = detail::right_svd(detail::to_eigen(m));
  std::size_t rank = detail::count_above(svd.sigma, thr);
  Matrix<double> out(rank, cols);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t c = 0; c < cols; ++c) out(k, c) = svd.v(c, k);
  return out;
}

// ---------------------------------------------------------------------------
// Field-generic entry points
// ---------------------------------------------------------------------------

template <class T>
std::size_t rank(const Matrix<T>& m, Threshold thr) {
  if constexpr (is_exact_v<T>) return exact_rank(m);
  else return float_rank(m, thr);
}

template <class T>
Matrix<T> null_space(const Matrix<T>& m, Threshold thr) {
  if constexpr (is_exact_v<T>) return exact_null_space(m);
  else return float_null_space(m, thr);
}

template <class T>
Matrix<T> row_basis(const Matrix<T>& m, Threshold thr) {
  if constexpr (is_exact_v<T>) return m.rows() == 0 ? Matrix<T>(0, m.cols()) : exact_row_basis(m);
  else return float_row_basis(m, thr);
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace lustab
