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

// Scalar fields used throughout the library: IEEE doubles (Float mode) and
// exact rationals / Gaussian rationals (Exact mode).

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lustab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity contradicts a structure theorem. In practice this
/// signals a numerical tolerance failure (Float mode) or a bug.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

enum class Mode { Exact, Float };

inline std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

inline Mode mode_from_string(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  throw std::invalid_argument("unknown scalar mode '" + std::string(s) + "'");
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double v) { return v; }

/// "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Base-10 digit string (no sign) to BigInt. Leading zeros are ignored rather
/// than read as an octal prefix.
inline BigInt decimal_bigint(std::string_view digits) {
  const std::size_t nz = digits.find_first_not_of('0');
  return nz == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(nz)));
}

/// Parses "p", "-p", "p/q" with integer p, q (q != 0).
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    const bool neg = s[0] == '-';
    if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
    BigInt v = decimal_bigint(s);
    return neg ? BigInt(-v) : v;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_int(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_int(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_int(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt d = to_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(to_int(num), d);
}

/// Complex number with rational parts (an element of Q(i)).
struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }
  ExactComplex conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational d = b.norm2();
    if (d == 0) throw std::domain_error("division by zero");
    ExactComplex t = a * b.conj();
    return {t.re / d, t.im / d};
  }
  ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline const ExactComplex kExactI{Rational(0), Rational(1)};

// Field traits: everything templated on a real field T dispatches through here.
template <class T>
struct field_traits;

template <>
struct field_traits<double> {
  static constexpr bool exact = false;
  using complex_type = std::complex<double>;
  static complex_type make_complex(double re, double im) { return {re, im}; }
  static double real(const complex_type& z) { return z.real(); }
  static double imag(const complex_type& z) { return z.imag(); }
  static complex_type i() { return {0.0, 1.0}; }
};

template <>
struct field_traits<Rational> {
  static constexpr bool exact = true;
  using complex_type = ExactComplex;
  static complex_type make_complex(Rational re, Rational im) { return {std::move(re), std::move(im)}; }
  static const Rational& real(const complex_type& z) { return z.re; }
  static const Rational& imag(const complex_type& z) { return z.im; }
  static complex_type i() { return kExactI; }
};

template <class T>
using complex_of = typename field_traits<T>::complex_type;

template <class T>
inline constexpr bool is_exact_v = field_traits<T>::exact;

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

}  // namespace lustab
