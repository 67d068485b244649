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

#include <array>
#include <string>
#include <vector>

#include "conicpedal/parametric.hpp"
#include "conicpedal/poly2.hpp"
#include "conicpedal/rational.hpp"

namespace conicpedal {

// Quadratic curve g(x,y) = a11 x^2 + a22 y^2 + 2 a12 xy + 2 a1 x + 2 a2 y + c.
// NOTE the factor-of-2 convention: the stored a12, a1, a2 are HALF the
// expanded xy, x, y coefficients.
struct Conic {
  Rational a11, a22, a12, a1, a2, c;

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;
  BivariatePoly to_poly() const;
  // Requires an exactly quadratic polynomial.
  static Conic from_poly(const BivariatePoly& p);

  // Exact coordinate changes; (cos_t, sin_t) must satisfy cos^2 + sin^2 = 1.
  Conic translated(const Rational& tx, const Rational& ty) const;
  Conic rotated(const Rational& cos_t, const Rational& sin_t) const;
  Conic scaled(const Rational& lambda) const;

  bool contains_origin() const { return c == 0; }
  double max_abs_coeff() const;
};

enum class ConicClass { Ellipse, Hyperbola, Parabola, Reducible };

std::string to_string(ConicClass cls);

struct ConicInvariants {
  Rational delta0;  // determinant of the quadratic part
  Rational delta;   // determinant of the full 3x3 symmetric matrix
};

ConicInvariants invariants(const Conic& conic);

struct Classification {
  ConicClass cls = ConicClass::Reducible;
  // Set for ellipses whose real locus is empty (delta0 > 0, a11*delta > 0).
  bool empty_real_locus = false;
};

Classification classify(const Conic& conic);

// Line A x + B y + D = 0.
struct Line {
  double A = 0.0;
  double B = 0.0;
  double D = 0.0;
};

struct RationalLine {
  Rational A, B, D;
};

// Tangent at a curve point: A = a1 + a11 x0 + a12 y0, B = a2 + a12 x0 + a22 y0,
// D = c + a1 x0 + a2 y0; (A, B) is half the gradient of g at the point.
// Throws std::invalid_argument when p0 is not on the conic (scaled residual
// above 1e-9) and std::domain_error("singular point") when (A,B) vanishes.
Line tangent_line(const Conic& conic, Vec2 p0);
RationalLine tangent_line_exact(const Conic& conic, const Rational& x0, const Rational& y0);

// The two root directions of a11 v1^2 + 2 a12 v1 v2 + a22 v2^2 = 0, as
// sign-normalized unit vectors. Hyperbolas only.
std::array<Vec2, 2> asymptotic_directions(const Conic& conic);

// The double root direction of the quadratic form. Parabolas only.
Vec2 axis_direction(const Conic& conic);

// Parabola in the rotated normal form: gamma(t) = R(theta) (t, a t^2) + b.
struct ParabolaFrame {
  double cos_theta = 1.0;
  double sin_theta = 0.0;
  double a = 0.0;  // nonzero
  double b1 = 0.0;
  double b2 = 0.0;

  Vec2 axis() const { return {-sin_theta, cos_theta}; }
  ParametricCurve curve(double half_width) const;
};

// Extracts the rotated normal form of a parabola. Floating point; verified
// downstream by residual checks.
ParabolaFrame parabola_frame(const Conic& conic);

// Analytic parametrizations: one branch for ellipse (period 2*pi) and
// parabola, two branches for a hyperbola. Throws
// std::domain_error("not parametrizable") for reducible conics and empty
// ellipses.
std::vector<ParametricCurve> parametrize(const Conic& conic);

}  // namespace conicpedal
