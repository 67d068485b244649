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

#include "conicpedal/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace conicpedal {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const size_t slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  size_t start = 0;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) start = 1;
  if (!all_digits(num, start, num.size())) {
    throw std::invalid_argument("invalid rational: '" + text + "'");
  }
  if (slash != std::string::npos && !all_digits(text, slash + 1, text.size())) {
    throw std::invalid_argument("invalid rational: '" + text + "'");
  }
  Rational value(text, 10);
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational result(1);
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace conicpedal
