/*
 * Copyright 2026 The lqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cctype>
#include <string>

#include "lqc/errors.hpp"
#include "lqc/poly.hpp"

namespace lqc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, PrimeModulus m, std::span<const std::string> vars)
      : text_(text), ring_{m, static_cast<unsigned>(vars.size())}, vars_(vars) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail_unexpected();
      ++pos_;
      Poly t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

 private:
  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("expected a coefficient or variable", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(ring_, read_coefficient());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      unsigned index = 0;
      while (index < vars_.size() && vars_[index] != name) ++index;
      if (index == vars_.size()) throw ParseError("unknown variable '" + name + "'", start);
      std::uint32_t exponent = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        exponent = read_exponent();
      }
      Monomial m(ring_.nvars);
      m.set(index, exponent);
      return Poly::monomial(ring_, m, FieldElem::one(ring_.modulus));
    }
    fail_unexpected();
  }

  FieldElem read_coefficient() {
    // Reduce digit by digit so arbitrarily long literals are accepted.
    std::uint64_t acc = 0;
    const std::uint64_t p = ring_.modulus.value();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      acc = (acc * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
    return FieldElem(static_cast<std::int64_t>(acc), ring_.modulus);
  }

  std::uint32_t read_exponent() {
    const std::size_t start = pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an unsigned exponent", pos_);
    std::uint64_t acc = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      acc = acc * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (acc > UINT32_MAX) throw ParseError("exponent too large", start);
    }
    return static_cast<std::uint32_t>(acc);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail_unexpected() {
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PolyRing ring_;
  std::span<const std::string> vars_;
};

}  // namespace

Poly parse_poly(std::string_view text, PrimeModulus m, std::span<const std::string> vars) {
  if (vars.empty() || vars.size() > kMaxVars)
    throw std::invalid_argument("variable list must have 1.." + std::to_string(kMaxVars) + " names");
  return Parser(text, m, vars).parse();
}

Poly parse_poly(std::string_view text, PrimeModulus m) {
  const auto names = default_variable_names(3);
  return parse_poly(text, m, names);
}

}  // namespace lqc
