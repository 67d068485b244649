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

#include "conicpedal/parametric.hpp"

#include <algorithm>
#include <stdexcept>

namespace conicpedal {

Vec2 sign_normalized(Vec2 v) {
  if (v.x < -1e-12 || (std::fabs(v.x) <= 1e-12 && v.y < 0.0)) return -v;
  return v;
}

bool ParametricCurve::in_domain(double t) const {
  for (const auto& iv : domain) {
    if (t >= iv.lo && t <= iv.hi) return true;
  }
  return false;
}

bool ParametricCurve::contains_interval(double t0, double t1) const {
  for (const auto& iv : domain) {
    if (t0 >= iv.lo && t1 <= iv.hi) return true;
  }
  return false;
}

double central_diff(const RealFn& f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

namespace {

double second_diff(const RealFn& f, double t, double h) {
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

double third_diff(const RealFn& f, double t, double h) {
  return (-0.5 * f(t - 2.0 * h) + f(t - h) - f(t + h) + 0.5 * f(t + 2.0 * h)) / (h * h * h);
}

}  // namespace

ParametricCurve ParametricCurve::from_functions(RealFn fx, RealFn fy,
                                                std::vector<Interval> domain) {
  ParametricCurve c;
  c.x = fx;
  c.y = fy;
  // Step sizes grow with the derivative order to keep rounding noise below
  // the truncation error.
  c.dx = [fx](double t) { return central_diff(fx, t, 1e-5); };
  c.dy = [fy](double t) { return central_diff(fy, t, 1e-5); };
  c.d2x = [fx](double t) { return second_diff(fx, t, 1e-4); };
  c.d2y = [fy](double t) { return second_diff(fy, t, 1e-4); };
  c.d3x = [fx](double t) { return third_diff(fx, t, 2e-3); };
  c.d3y = [fy](double t) { return third_diff(fy, t, 2e-3); };
  c.domain = std::move(domain);
  return c;
}

double derivative_consistency(const ParametricCurve& curve, int n, double rel_tol) {
  double worst = 0.0;
  constexpr double kStep = 1e-5;
  for (const auto& iv : curve.domain) {
    const double pad = 0.05 * (iv.hi - iv.lo);
    for (int k = 0; k < n; ++k) {
      const double t = iv.lo + pad + (iv.hi - iv.lo - 2.0 * pad) * (k + 0.5) / n;
      const Vec2 fd{central_diff(curve.x, t, kStep), central_diff(curve.y, t, kStep)};
      const Vec2 an = curve.d1(t);
      const double err = distance(fd, an) / (1.0 + an.norm());
      worst = std::max(worst, err);
    }
  }
  if (worst > rel_tol) {
    throw std::logic_error("derivative closures disagree with finite differences");
  }
  return worst;
}

}  // namespace conicpedal
