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

#include <cmath>
#include <functional>
#include <vector>

namespace conicpedal {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
// Determinant |a, b| = a.x*b.y - a.y*b.x.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 normalize(Vec2 v) { return v / v.norm(); }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Flips sign so the first component with magnitude > 1e-12 is positive.
// Makes direction-vector comparisons deterministic.
Vec2 sign_normalized(Vec2 v);

using RealFn = std::function<double(double)>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Smooth plane curve t -> (x(t), y(t)) with derivatives through order three.
// Analytic derivative closures are preferred; from_functions builds central
// finite-difference fallbacks.
struct ParametricCurve {
  RealFn x, y;
  RealFn dx, dy;
  RealFn d2x, d2y;
  RealFn d3x, d3y;
  std::vector<Interval> domain;

  Vec2 point(double t) const { return {x(t), y(t)}; }
  Vec2 d1(double t) const { return {dx(t), dy(t)}; }
  Vec2 d2(double t) const { return {d2x(t), d2y(t)}; }
  Vec2 d3(double t) const { return {d3x(t), d3y(t)}; }

  bool in_domain(double t) const;
  bool contains_interval(double t0, double t1) const;

  static ParametricCurve from_functions(RealFn fx, RealFn fy, std::vector<Interval> domain);
};

double central_diff(const RealFn& f, double t, double h);

// Checks that supplied derivative closures agree with central finite
// differences (step 1e-5) to the given relative tolerance at n interior
// samples of every domain interval. Returns the worst relative deviation.
double derivative_consistency(const ParametricCurve& curve, int n, double rel_tol);

}  // namespace conicpedal
