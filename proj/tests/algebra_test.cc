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

#include "lustab/algebra.hpp"

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "lustab/catalog.hpp"
#include "lustab/random.hpp"
#include "test_support.hpp"

using namespace lustab;

namespace {

using test_support::dense_operator;
using test_support::mat_a;
using test_support::mat_b;
using test_support::mat_c;
using cd = std::complex<double>;

Eigen::VectorXcd as_vector(const std::vector<cd>& v) { return Eigen::Map<const Eigen::VectorXcd>(v.data(), v.size()); }

AlgebraElement random_element(int n, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<double> c(algebra_dimension(n));
  for (auto& v : c) v = g(rng);
  return {n, c};
}

ExactAlgebraElement random_exact_element(int n, Rng& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(algebra_dimension(n));
  for (auto& v : c) v = Rational(num(rng), den(rng));
  return {n, c};
}

}  // namespace

TEST(algebra, coordinate_layout) {
  EXPECT_EQ(algebra_dimension(3), 10u);
  EXPECT_EQ(coordinate_index(Generator::Phase), 0u);
  EXPECT_EQ(coordinate_index(Generator::A, 1), 1u);
  EXPECT_EQ(coordinate_index(Generator::C, 2), 6u);
  const auto x = AlgebraElement::basis(3, Generator::A, 1) + AlgebraElement::basis(3, Generator::B, 2);
  EXPECT_EQ(project(x, 1), (std::array<double, 3>{1, 0, 0}));
  EXPECT_EQ(project(x, 2), (std::array<double, 3>{0, 1, 0}));
  EXPECT_EQ(project(x, 3), (std::array<double, 3>{0, 0, 0}));
  EXPECT_THROW(project(x, 4), std::out_of_range);
}

TEST(algebra, base_brackets_match_matrix_commutators) {
  const Eigen::Matrix2cd m[] = {mat_a(), mat_b(), mat_c()};
  const Generator g[] = {Generator::A, Generator::B, Generator::C};
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      const auto z = bracket(ExactAlgebraElement::basis(1, g[p], 1), ExactAlgebraElement::basis(1, g[q], 1));
      const Eigen::Matrix2cd comm = m[p] * m[q] - m[q] * m[p];
      const Eigen::Matrix2cd got =
          to_double(z[1]) * mat_a() + to_double(z[2]) * mat_b() + to_double(z[3]) * mat_c();
      EXPECT_LT((comm - got).norm(), 1e-15) << p << "," << q;
      EXPECT_EQ(z.phase(), 0);
    }
  EXPECT_EQ(bracket(ExactAlgebraElement::basis(1, Generator::A, 1), ExactAlgebraElement::basis(1, Generator::B, 1)),
            Rational(2) * ExactAlgebraElement::basis(1, Generator::C, 1));
  EXPECT_TRUE(bracket(ExactAlgebraElement::basis(2, Generator::A, 1), ExactAlgebraElement::basis(2, Generator::B, 2))
                  .is_zero());
}

TEST(algebra, bracket_is_antisymmetric_and_satisfies_jacobi) {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 4;
    const auto x = random_exact_element(n, rng), y = random_exact_element(n, rng), z = random_exact_element(n, rng);
    EXPECT_TRUE(bracket(x, x).is_zero());
    EXPECT_EQ(bracket(x, y), Rational(-1) * bracket(y, x));
    EXPECT_TRUE((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
  EXPECT_THROW(bracket(AlgebraElement(2), AlgebraElement(3)), std::invalid_argument);
}

TEST(apply_element, spec_examples) {
  const PureState zero = basis_state("0");
  const auto a = apply_element<Rational>(zero, ExactAlgebraElement::basis(1, Generator::A, 1));
  EXPECT_EQ(a[0], kExactI);
  EXPECT_TRUE(a[1].is_zero());
  const auto b = apply_element<Rational>(zero, ExactAlgebraElement::basis(1, Generator::B, 1));
  EXPECT_TRUE(b[0].is_zero());
  EXPECT_EQ(b[1], ExactComplex(-1));

  Rng rng(2);
  const PureState psi = haar_state(3, rng);
  const auto phase = apply_element<double>(psi, AlgebraElement::basis(3, Generator::Phase));
  const auto amps = psi.float_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) EXPECT_EQ(phase[i], cd(0, 1) * amps[i]);
  EXPECT_THROW(apply_element<double>(psi, AlgebraElement(2)), std::invalid_argument);
}

TEST(apply_element, agrees_with_dense_operator) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 4;
    const PureState psi = haar_state(n, rng);
    const AlgebraElement x = random_element(n, rng);
    const Eigen::VectorXcd want = dense_operator(x) * as_vector(psi.float_amplitudes());
    EXPECT_LT((as_vector(apply_element<double>(psi, x)) - want).norm(), 1e-12);
  }
}

TEST(apply_element, bracket_is_operator_commutator) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 4;
    const PureState psi = haar_state(n, rng);
    const AlgebraElement x = random_element(n, rng), y = random_element(n, rng);
    const Eigen::MatrixXcd mx = dense_operator(x), my = dense_operator(y);
    const Eigen::VectorXcd want = (mx * my - my * mx) * as_vector(psi.float_amplitudes());
    EXPECT_LT((as_vector(apply_element<double>(psi, bracket(x, y))) - want).norm(), 1e-10);
  }
}

TEST(apply_element, generators_are_skew_hermitian) {
  Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 5;
    const PureState psi = haar_state(n, rng);
    const auto image = as_vector(apply_element<double>(psi, random_element(n, rng)));
    EXPECT_NEAR(as_vector(psi.float_amplitudes()).dot(image).real(), 0.0, 1e-10);
  }
}

TEST(action_matrix, shape_and_columns) {
  const auto m1 = build_action_matrix<Rational>(basis_state("0"));
  EXPECT_EQ(m1.rows(), 4u);
  EXPECT_EQ(m1.cols(), 4u);
  EXPECT_EQ(exact_null_space(m1).rows(), 1u);

  const auto ms = build_action_matrix<Rational>(singlet_state());
  EXPECT_EQ(ms.rows(), 8u);
  EXPECT_EQ(ms.cols(), 7u);
  EXPECT_EQ(exact_null_space(ms).rows(), 3u);

  Rng rng(7);
  const PureState psi = haar_state(3, rng);
  const auto m = build_action_matrix<double>(psi);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    std::vector<double> e(m.cols(), 0.0);
    e[k] = 1.0;
    const auto col = apply_element<double>(psi, AlgebraElement(3, e));
    for (std::size_t i = 0; i < col.size(); ++i) {
      EXPECT_EQ(m(i, k), col[i].real());
      EXPECT_EQ(m(col.size() + i, k), col[i].imag());
    }
  }
}
