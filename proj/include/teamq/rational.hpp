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

#ifndef TEAMQ_RATIONAL_HPP_
#define TEAMQ_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace teamq {

// Exact rational scalar used by every classical optimum.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);

// Parses "p/q", "p", or a plain decimal literal such as "0.25" exactly.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace teamq

#endif  // TEAMQ_RATIONAL_HPP_
