// Copyright 2026 The conic-pedal authors
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

#pragma once

#include <gmpxx.h>

#include <string>

namespace conicpedal {

// Exact rational scalar. All implicit-curve algebra in this library is
// carried out over these; doubles appear only in sampling and rendering.
using Rational = mpq_class;

// Parses "12", "-7/4". Throws std::invalid_argument on malformed text or a
// zero denominator. The result is canonical (gcd reduced, denominator > 0).
Rational parse_rational(const std::string& text);

// "12" when the denominator is one, "num/den" otherwise.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline int sign(const Rational& value) { return sgn(value); }

Rational rational_pow(const Rational& base, unsigned exp);

}  // namespace conicpedal
