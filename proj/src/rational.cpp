// Copyright 2026 The teamq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teamq/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace teamq {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Accepts an optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal: " +
                                  std::string(text));
    }
    mpz_class n{strip_plus(num)}, d{std::string(den)};
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  if (is_integer_literal(text)) return Rational(mpz_class(strip_plus(text)));

  // Decimal literal: sign, digits, '.', digits. Exponents are not accepted.
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  if (dot == std::string_view::npos) {
    throw std::invalid_argument("malformed rational literal: " +
                                std::string(text));
  }
  auto whole = body.substr(0, dot);
  auto frac = body.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac))) {
    throw std::invalid_argument("malformed rational literal: " +
                                std::string(text));
  }
  mpz_class num{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite value cannot be made rational");
  }
  return Rational(value);
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace teamq
