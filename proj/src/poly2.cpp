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

#include "conicpedal/poly2.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace conicpedal {

BivariatePoly BivariatePoly::constant(const Rational& c) { return monomial(0, 0, c); }

BivariatePoly BivariatePoly::monomial(int i, int j, const Rational& c) {
  BivariatePoly p;
  p.add_term(i, j, c);
  return p;
}

BivariatePoly BivariatePoly::circle() {
  BivariatePoly s;
  s.add_term(2, 0, 1);
  s.add_term(0, 2, 1);
  return s;
}

int BivariatePoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return e.first + e.second;
}

int BivariatePoly::lowest_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return e.first + e.second;
}

Rational BivariatePoly::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  const auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
  const int n = degree();
  if (n < 0) return Rational(0);
  std::vector<Rational> xp(n + 1), yp(n + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (int k = 1; k <= n; ++k) {
    xp[k] = xp[k - 1] * x;
    yp[k] = yp[k - 1] * y;
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * xp[e.first] * yp[e.second];
  return acc;
}

double BivariatePoly::evaluate(double x, double y) const {
  const int n = degree();
  if (n < 0) return 0.0;
  std::vector<double> xp(n + 1), yp(n + 1);
  xp[0] = 1.0;
  yp[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    xp[k] = xp[k - 1] * x;
    yp[k] = yp[k - 1] * y;
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += to_double(c) * xp[e.first] * yp[e.second];
  return acc;
}

double BivariatePoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

BivariatePoly BivariatePoly::derivative_x() const {
  BivariatePoly d;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) d.add_term(e.first - 1, e.second, c * e.first);
  }
  return d;
}

BivariatePoly BivariatePoly::derivative_y() const {
  BivariatePoly d;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) d.add_term(e.first, e.second - 1, c * e.second);
  }
  return d;
}

BivariatePoly BivariatePoly::normalized() const {
  if (terms_.empty()) return *this;
  const Rational lead = terms_.rbegin()->second;
  return *this * Rational(1 / lead);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
  return r;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& rhs) const {
  BivariatePoly r = *this;
  for (const auto& [e, c] : rhs.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& rhs) const {
  BivariatePoly r = *this;
  for (const auto& [e, c] : rhs.terms_) r.add_term(e.first, e.second, Rational(-c));
  return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& rhs) const {
  BivariatePoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return r;
}

BivariatePoly BivariatePoly::operator*(const Rational& scalar) const {
  BivariatePoly r;
  if (scalar == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(c * scalar));
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned exp) const {
  BivariatePoly r = constant(1);
  for (unsigned k = 0; k < exp; ++k) r = r * *this;
  return r;
}

std::string BivariatePoly::to_equation_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = sign(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const bool has_vars = e.first > 0 || e.second > 0;
    if (mag != 1 || !has_vars) {
      out << to_string(mag);
      if (has_vars) out << "*";
    }
    if (e.first > 0) {
      out << "x";
      if (e.first > 1) out << "^" << e.first;
    }
    if (e.second > 0) {
      if (e.first > 0) out << "*";
      out << "y";
      if (e.second > 1) out << "^" << e.second;
    }
  }
  return out.str();
}

BivariatePoly compose_affine(const BivariatePoly& p, const Rational& m11, const Rational& m12,
                             const Rational& t1, const Rational& m21, const Rational& m22,
                             const Rational& t2) {
  BivariatePoly lx;
  lx.add_term(1, 0, m11);
  lx.add_term(0, 1, m12);
  lx.add_term(0, 0, t1);
  BivariatePoly ly;
  ly.add_term(1, 0, m21);
  ly.add_term(0, 1, m22);
  ly.add_term(0, 0, t2);

  const int n = std::max(p.degree(), 0);
  std::vector<BivariatePoly> xp(n + 1), yp(n + 1);
  xp[0] = BivariatePoly::constant(1);
  yp[0] = BivariatePoly::constant(1);
  for (int k = 1; k <= n; ++k) {
    xp[k] = xp[k - 1] * lx;
    yp[k] = yp[k - 1] * ly;
  }
  BivariatePoly r;
  for (const auto& [e, c] : p.terms()) r = r + xp[e.first] * yp[e.second] * c;
  return r;
}

BivariatePoly invert_poly(const BivariatePoly& p) {
  if (p.is_zero()) throw std::domain_error("empty curve");
  const int n = p.degree();
  std::vector<BivariatePoly> sp(n + 1);
  sp[0] = BivariatePoly::constant(1);
  const BivariatePoly s = BivariatePoly::circle();
  for (int k = 1; k <= n; ++k) sp[k] = sp[k - 1] * s;
  BivariatePoly r;
  for (const auto& [e, c] : p.terms()) {
    r = r + BivariatePoly::monomial(e.first, e.second, c) * sp[n - e.first - e.second];
  }
  return r;
}

namespace {

// Single-divisor division by x^2+y^2 in grlex order; the remainder never
// cancels once a term escapes, so the first escaped term decides
// divisibility.
std::optional<BivariatePoly> divide_by_circle(const BivariatePoly& p) {
  const BivariatePoly s = BivariatePoly::circle();
  BivariatePoly rem = p;
  BivariatePoly quot;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    if (e.first < 2) return std::nullopt;
    BivariatePoly t = BivariatePoly::monomial(e.first - 2, e.second, c);
    quot = quot + t;
    rem = rem - t * s;
  }
  return quot;
}

}  // namespace

std::pair<BivariatePoly, int> strip_circle_factor(const BivariatePoly& p) {
  if (p.is_zero()) throw std::domain_error("empty curve");
  BivariatePoly q = p;
  int k = 0;
  while (true) {
    auto next = divide_by_circle(q);
    if (!next) break;
    q = *next;
    ++k;
  }
  return {q, k};
}

bool proportional(const BivariatePoly& p, const BivariatePoly& q) {
  return proportionality_ratio(p, q).has_value();
}

std::optional<Rational> proportionality_ratio(const BivariatePoly& p, const BivariatePoly& q) {
  if (p.is_zero() && q.is_zero()) return Rational(1);
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.terms().size() != q.terms().size()) return std::nullopt;
  const auto& [ep, cp] = *p.terms().rbegin();
  const auto& [eq, cq] = *q.terms().rbegin();
  if (ep != eq) return std::nullopt;
  const Rational lambda = cp / cq;
  if (p == q * lambda) return lambda;
  return std::nullopt;
}

}  // namespace conicpedal
