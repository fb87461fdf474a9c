/*
 * Copyright 2026 The f4decomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cmath>
#include <string>

namespace f4 {

/**
 * @brief Real division octonion with coordinates in the basis 1, e1, ..., e7.
 *
 * The product is the Cayley-Dickson double of the quaternions
 * span{1, e1, e2, e3} with doubling unit e4:
 *
 *     (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
 *
 * where x = a + b e4 and a, b are quaternions. This gives
 * e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.
 */
struct Octonion {
  std::array<double, 8> c{};

  constexpr Octonion() = default;
  constexpr explicit Octonion(double re) { c[0] = re; }
  constexpr Octonion(double c0, double c1, double c2, double c3, double c4,
                     double c5, double c6, double c7)
      : c{c0, c1, c2, c3, c4, c5, c6, c7} {}

  /// Unit basis element e_k, with e_0 = 1.
  static constexpr Octonion unit(int k) {
    Octonion o;
    o.c[k] = 1.0;
    return o;
  }

  constexpr double& operator[](int k) { return c[k]; }
  constexpr double operator[](int k) const { return c[k]; }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (int k = 0; k < 8; ++k) c[k] += o.c[k];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (int k = 0; k < 8; ++k) c[k] -= o.c[k];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
};

constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
constexpr Octonion operator/(Octonion a, double s) { return a *= 1.0 / s; }

/// Octonion product (non-associative).
constexpr Octonion mul(const Octonion& x, const Octonion& y) {
  // quaternion helpers on 4-slices
  auto qm = [](double a0, double a1, double a2, double a3, double b0, double b1,
               double b2, double b3, double* r) {
    r[0] = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
    r[1] = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
    r[2] = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
    r[3] = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
  };
  const double* a = &x.c[0];
  const double* b = &x.c[4];
  const double* cc = &y.c[0];
  const double* d = &y.c[4];
  double ac[4], db[4], da[4], bc[4];
  qm(a[0], a[1], a[2], a[3], cc[0], cc[1], cc[2], cc[3], ac);
  qm(d[0], -d[1], -d[2], -d[3], b[0], b[1], b[2], b[3], db);
  qm(d[0], d[1], d[2], d[3], a[0], a[1], a[2], a[3], da);
  qm(b[0], b[1], b[2], b[3], cc[0], -cc[1], -cc[2], -cc[3], bc);
  return Octonion(ac[0] - db[0], ac[1] - db[1], ac[2] - db[2], ac[3] - db[3],
                  da[0] + bc[0], da[1] + bc[1], da[2] + bc[2], da[3] + bc[3]);
}

constexpr Octonion operator*(const Octonion& x, const Octonion& y) {
  return mul(x, y);
}

/// Conjugate: conj(x) = 2 re(x) - x.
constexpr Octonion conj(Octonion x) {
  for (int k = 1; k < 8; ++k) x.c[k] = -x.c[k];
  return x;
}

/// Euclidean inner product with the unit basis orthonormal.
constexpr double inner(const Octonion& x, const Octonion& y) {
  double s = 0.0;
  for (int k = 0; k < 8; ++k) s += x.c[k] * y.c[k];
  return s;
}

constexpr double norm_sq(const Octonion& x) { return inner(x, x); }
inline double norm(const Octonion& x) { return std::sqrt(norm_sq(x)); }

constexpr double re(const Octonion& x) { return x.c[0]; }

/// Imaginary part x - re(x).
constexpr Octonion im(Octonion x) {
  x.c[0] = 0.0;
  return x;
}

/// Largest coordinate magnitude.
inline double max_abs(const Octonion& x) {
  double m = 0.0;
  for (double v : x.c) m = std::fmax(m, std::fabs(v));
  return m;
}

/**
 * @brief Parse an octonion literal such as "1+2e3-0.5e7".
 *
 * Terms are signed decimal coefficients followed by an optional basis token
 * e1..e7; a bare coefficient is real. Exponent notation is not accepted, so
 * "2e3" always means 2 e3. Throws std::invalid_argument on malformed input.
 */
Octonion parse_octonion(const std::string& text);

/**
 * @brief Print an octonion in the literal syntax accepted by parse_octonion.
 *
 * Coefficients use the shortest decimal that round-trips the double exactly,
 * so parse_octonion(format_octonion(x)) == x bit for bit.
 */
std::string format_octonion(const Octonion& x);

}  // namespace f4
