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

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "conicpedal/rational.hpp"

namespace conicpedal {

// Graded lexicographic order on exponent pairs: total degree first, then the
// x-exponent. rbegin() of a term map is the leading term used for canonical
// normalization.
struct GrlexLess {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const noexcept {
    const int da = a.first + a.second;
    const int db = b.first + b.second;
    if (da != db) return da < db;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

// Sparse bivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; the zero polynomial has degree -1.
// Immutable in spirit: every operation returns a fresh value.
class BivariatePoly {
 public:
  using TermMap = std::map<std::pair<int, int>, Rational, GrlexLess>;

  BivariatePoly() = default;

  static BivariatePoly constant(const Rational& c);
  static BivariatePoly monomial(int i, int j, const Rational& c);
  // x^2 + y^2, the squared distance from the origin.
  static BivariatePoly circle();

  bool is_zero() const { return terms_.empty(); }
  int degree() const;         // -1 for the zero polynomial
  int lowest_degree() const;  // min total degree of a nonzero term; -1 for zero

  const TermMap& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;
  double max_abs_coeff() const;

  BivariatePoly derivative_x() const;
  BivariatePoly derivative_y() const;

  // Divides by the leading (grlex-largest) coefficient.
  BivariatePoly normalized() const;

  BivariatePoly operator-() const;
  BivariatePoly operator+(const BivariatePoly& rhs) const;
  BivariatePoly operator-(const BivariatePoly& rhs) const;
  BivariatePoly operator*(const BivariatePoly& rhs) const;
  BivariatePoly operator*(const Rational& scalar) const;
  bool operator==(const BivariatePoly& rhs) const { return terms_ == rhs.terms_; }

  BivariatePoly pow(unsigned exp) const;

  // Expanded human-readable form, terms in descending grlex order,
  // e.g. "2*x^2*y - 1/2*x + 3".
  std::string to_equation_string() const;

 private:
  TermMap terms_;
};

inline BivariatePoly operator*(const Rational& scalar, const BivariatePoly& p) {
  return p * scalar;
}

// Substitutes x -> m11*X + m12*Y + t1, y -> m21*X + m22*Y + t2. Exact.
BivariatePoly compose_affine(const BivariatePoly& p, const Rational& m11, const Rational& m12,
                             const Rational& t1, const Rational& m21, const Rational& m22,
                             const Rational& t2);

// The inversion transform: with n = degree(p), returns
//   sum a_ij x^i y^j (x^2+y^2)^(n-i-j).
// The zero set of the result away from the origin is the image of the zero
// set of p under x -> x/|x|^2. Throws std::domain_error("empty curve") on the
// zero polynomial.
BivariatePoly invert_poly(const BivariatePoly& p);

// Writes p = (x^2+y^2)^k * q with (x^2+y^2) not dividing q. Exact division.
std::pair<BivariatePoly, int> strip_circle_factor(const BivariatePoly& p);

// True iff p = lambda * q for some nonzero rational lambda.
bool proportional(const BivariatePoly& p, const BivariatePoly& q);

// The lambda with p = lambda * q, if one exists (1 when both are zero).
std::optional<Rational> proportionality_ratio(const BivariatePoly& p, const BivariatePoly& q);

}  // namespace conicpedal
