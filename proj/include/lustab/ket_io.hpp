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

// Text and JSON formats for pure states.
//
// Ket expressions:
//
//   state  := [sign] term (('+' | '-') term)*
//   term   := [coeff] '|' bit+ '>'
//   coeff  := real | '(' real ',' real ')'
//   real   := number | number '/' number | number '/sqrt(' integer ')'
//   number := optionally signed decimal, optional exponent
//
// Coefficients of repeated kets are summed. Decimal literals are exact, so a
// state is Exact unless some coefficient involves a non-square sqrt.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lustab/field.hpp"
#include "lustab/state.hpp"

namespace lustab {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// A real literal: exact when possible, always with a double value.
struct RealLiteral {
  std::optional<Rational> exact;
  double value = 0.0;
};

struct ComplexLiteral {
  RealLiteral re;
  RealLiteral im;
  bool is_exact() const { return re.exact && im.exact; }
};

class KetParser {
 public:
  explicit KetParser(std::string_view text) : text_(text) {}

  PureState parse(int max_qubits) {
    skip_ws();
    if (at_end()) fail("empty state expression");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      // A leading sign belongs to the term unless it starts a number.
      if (!(pos_ + 1 < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '.'))) {
        negate = peek() == '-';
        ++pos_;
      }
    }
    parse_term(negate);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      bool neg = peek() == '-';
      ++pos_;
      parse_term(neg);
    }
    return build(max_qubits);
  }

 private:
  struct Term {
    std::string bits;
    ComplexLiteral coeff;
    std::size_t position;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void parse_term(bool negate) {
    skip_ws();
    Term t;
    t.position = pos_;
    if (at_end()) fail("expected a term");
    if (peek() == '|') {
      t.coeff.re = {Rational(1), 1.0};
      t.coeff.im = {Rational(0), 0.0};
    } else if (peek() == '(') {
      ++pos_;
      t.coeff.re = parse_real();
      expect(',');
      t.coeff.im = parse_real();
      expect(')');
    } else {
      t.coeff.re = parse_real();
      t.coeff.im = {Rational(0), 0.0};
    }
    expect('|');
    const std::size_t start = pos_;
    while (!at_end() && (peek() == '0' || peek() == '1')) ++pos_;
    if (pos_ == start) fail("expected ket digits");
    t.bits = std::string(text_.substr(start, pos_ - start));
    if (at_end() || peek() != '>') fail("expected '>'");
    ++pos_;
    if (negate) {
      t.coeff.re = negated(t.coeff.re);
      t.coeff.im = negated(t.coeff.im);
    }
    terms_.push_back(std::move(t));
  }

  static RealLiteral negated(RealLiteral r) {
    if (r.exact) r.exact = -*r.exact;
    r.value = -r.value;
    return r;
  }

  // Decimal literal as an exact rational.
  Rational parse_number() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool any = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
      any = true;
    }
    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(peek());
        ++pos_;
        ++frac_digits;
        any = true;
      }
    }
    if (!any) {
      pos_ = start;
      fail("expected a number");
    }
    long exponent = 0;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      ++pos_;
      bool eneg = false;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        eneg = peek() == '-';
        ++pos_;
      }
      const std::size_t es = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == es || pos_ - es > 4) fail("malformed exponent");
      exponent = std::stol(std::string(text_.substr(es, pos_ - es)));
      if (eneg) exponent = -exponent;
    }
    exponent -= static_cast<long>(frac_digits);
    BigInt mant = decimal_bigint(digits);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(mant * scale) : Rational(mant, scale);
    return neg ? Rational(-q) : q;
  }

  RealLiteral parse_real() {
    Rational num = parse_number();
    skip_ws();
    if (at_end() || peek() != '/') return {num, to_double(num)};
    ++pos_;
    skip_ws();
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) fail("expected an integer under sqrt");
      BigInt k = decimal_bigint(text_.substr(start, pos_ - start));
      if (k == 0) fail("division by sqrt(0)");
      expect(')');
      BigInt root = boost::multiprecision::sqrt(k);
      if (root * root == k) {
        Rational q = num / Rational(root);
        return {q, to_double(q)};
      }
      return {std::nullopt, to_double(num) / std::sqrt(k.convert_to<double>())};
    }
    Rational den = parse_number();
    if (den == 0) fail("division by zero");
    Rational q = num / den;
    return {q, to_double(q)};
  }

  PureState build(int max_qubits) {
    const std::size_t n = terms_.front().bits.size();
    bool exact = true;
    for (const auto& t : terms_) {
      if (t.bits.size() != n) {
        pos_ = t.position;
        fail("inconsistent ket lengths (" + std::to_string(t.bits.size()) + " vs " + std::to_string(n) + ")");
      }
      exact = exact && t.coeff.is_exact();
    }
    if (static_cast<int>(n) > max_qubits) {
      pos_ = terms_.front().position;
      fail("qubit count exceeds cap " + std::to_string(max_qubits));
    }
    const std::size_t dim = std::size_t{1} << n;
    try {
      if (exact) {
        PureState::ExactTable amps(dim);
        for (const auto& t : terms_)
          amps[MultiIndex::parse(t.bits).linear()] += ExactComplex(*t.coeff.re.exact, *t.coeff.im.exact);
        return PureState::exact(static_cast<int>(n), std::move(amps), max_qubits);
      }
      PureState::FloatTable amps(dim);
      for (const auto& t : terms_) amps[MultiIndex::parse(t.bits).linear()] += std::complex<double>(t.coeff.re.value, t.coeff.im.value);
      return PureState::floating(static_cast<int>(n), std::move(amps), max_qubits);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Term> terms_;
};

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline PureState parse_state(std::string_view text, int max_qubits = kDefaultMaxQubits) {
  return detail::KetParser(text).parse(max_qubits);
}

/// Ket expression that parse_state reads back to the same amplitude table
/// (exactly, for Exact states).
inline std::string to_ket_string(const PureState& psi) {
  const int n = psi.num_qubits();
  std::string out;
  auto append = [&](bool negative, const std::string& magnitude, std::size_t index) {
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude + "|" + MultiIndex::from_linear(index, n).str() + ">";
  };
  if (psi.is_exact()) {
    const auto& a = psi.exact_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      if (a[i].im == 0) {
        const Rational mag = a[i].re < 0 ? Rational(-a[i].re) : a[i].re;
        append(a[i].re < 0, mag == 1 ? std::string() : to_string(mag), i);
      } else {
        append(false, "(" + to_string(a[i].re) + "," + to_string(a[i].im) + ")", i);
      }
    }
  } else {
    const auto a = psi.float_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0.0) continue;
      append(false, "(" + detail::format_double(a[i].real()) + "," + detail::format_double(a[i].imag()) + ")", i);
    }
  }
  return out;
}

/// {"n", "mode", "amplitudes": [{"index", "re", "im"}]}; zero amplitudes omitted.
inline nlohmann::json state_to_json(const PureState& psi) {
  nlohmann::json amps = nlohmann::json::array();
  const int n = psi.num_qubits();
  if (psi.is_exact()) {
    const auto& a = psi.exact_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero())
        amps.push_back({{"index", MultiIndex::from_linear(i, n).str()}, {"re", to_string(a[i].re)}, {"im", to_string(a[i].im)}});
  } else {
    const auto a = psi.float_amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0.0)
        amps.push_back({{"index", MultiIndex::from_linear(i, n).str()}, {"re", a[i].real()}, {"im", a[i].imag()}});
  }
  return {{"n", n}, {"mode", std::string(to_string(psi.mode()))}, {"amplitudes", amps}};
}

inline PureState state_from_json(const nlohmann::json& j, int max_qubits = kDefaultMaxQubits) {
  try {
    const int n = j.at("n").get<int>();
    const Mode mode = mode_from_string(j.at("mode").get<std::string>());
    if (n < 1 || n > max_qubits) throw std::invalid_argument("qubit count out of range");
    const std::size_t dim = std::size_t{1} << n;
    auto index_of = [&](const nlohmann::json& a) {
      auto idx = MultiIndex::parse(a.at("index").get<std::string>());
      if (idx.size() != n) throw std::invalid_argument("index length does not match n");
      return idx.linear();
    };
    auto as_double = [](const nlohmann::json& v) {
      return v.is_string() ? to_double(parse_rational(v.get<std::string>())) : v.get<double>();
    };
    if (mode == Mode::Exact) {
      PureState::ExactTable amps(dim);
      for (const auto& a : j.at("amplitudes"))
        amps[index_of(a)] += ExactComplex(parse_rational(a.at("re").get<std::string>()),
                                          parse_rational(a.value("im", std::string("0"))));
      return PureState::exact(n, std::move(amps), max_qubits);
    }
    PureState::FloatTable amps(dim);
    for (const auto& a : j.at("amplitudes"))
      amps[index_of(a)] += std::complex<double>(as_double(a.at("re")), a.contains("im") ? as_double(a.at("im")) : 0.0);
    return PureState::floating(n, std::move(amps), max_qubits);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed state JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("malformed state JSON: ") + e.what());
  }
}

/// Reads a state file: JSON when the first non-blank character is '{',
/// otherwise a ket expression.
inline PureState read_state_file(const std::string& path, int max_qubits = kDefaultMaxQubits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error("malformed state JSON in '" + path + "': " + e.what());
    }
    return state_from_json(j, max_qubits);
  }
  return parse_state(text, max_qubits);
}

}  // namespace lustab
