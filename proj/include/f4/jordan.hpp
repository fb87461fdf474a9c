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

#include <Eigen/Dense>
#include <utility>

#include "f4/octonion.hpp"

namespace f4 {

inline constexpr int kDim = 27;
using Vec27 = Eigen::Matrix<double, kDim, 1>;
using Mat27 = Eigen::Matrix<double, kDim, kDim>;

// Coordinate layout of the 27-vector: [xi1, xi2, xi3, x1(8), x2(8), x3(8)].
inline constexpr int slot_offset(int i) { return 3 + 8 * (i - 1); }

/// h(xi1, xi2, xi3; x1, x2, x3) stored as 27 real coordinates.
class JordanElement {
 public:
  JordanElement() { v_.setZero(); }
  explicit JordanElement(const Vec27& v) : v_(v) {}
  JordanElement(double xi1, double xi2, double xi3, const Octonion& x1,
                const Octonion& x2, const Octonion& x3);

  double xi(int i) const { return v_[i - 1]; }
  Octonion x(int i) const;
  void set_xi(int i, double value) { v_[i - 1] = value; }
  void set_x(int i, const Octonion& o);

  const Vec27& vec() const { return v_; }
  Vec27& vec() { return v_; }

  JordanElement& operator+=(const JordanElement& o) { v_ += o.v_; return *this; }
  JordanElement& operator-=(const JordanElement& o) { v_ -= o.v_; return *this; }
  JordanElement& operator*=(double s) { v_ *= s; return *this; }

 private:
  Vec27 v_;
};

inline JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
inline JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
inline JordanElement operator-(JordanElement a) { return a *= -1.0; }
inline JordanElement operator*(double s, JordanElement a) { return a *= s; }
inline JordanElement operator*(JordanElement a, double s) { return a *= s; }
inline JordanElement operator*(const Mat27& g, const JordanElement& X) {
  return JordanElement(Vec27(g * X.vec()));
}

// Named elements.
JordanElement E();
JordanElement E_(int i);
JordanElement F(int i, const Octonion& x);
JordanElement P_minus();  // h(-1,1,0;0,0,1)
JordanElement P_plus();   // h(1,-1,0;0,0,1)
JordanElement P13_minus();  // h(-1,0,1;0,1,0)
JordanElement sigma_P_minus();  // h(-1,1,0;0,0,-1)
JordanElement Q_plus(const Octonion& x);
JordanElement Q_minus(const Octonion& x);

/// Diagonal of the Gram matrix of the inner product in the 27 coordinates.
const Vec27& gram_diagonal();

double trace(const JordanElement& X);
double inner(const JordanElement& X, const JordanElement& Y);
JordanElement cross_square(const JordanElement& X);
JordanElement cross(const JordanElement& X, const JordanElement& Y);
double det(const JordanElement& X);
JordanElement jordan_mul(const JordanElement& X, const JordanElement& Y);

/// Jordan product of the i-th and j-th coordinate basis vectors (cached).
const Vec27& basis_product(int i, int j);

/// Max-abs coordinate norm; used for scale-relative tolerances.
double norm_inf(const JordanElement& X);

// Coefficients of X = r(-E1+E2) + s P- + u E + v E3 + F3(p) + Q+(x) + Q-(y).
struct CoordView {
  double r = 0, s = 0, u = 0, v = 0;
  Octonion p, x, y;
};

CoordView coords(const JordanElement& X);
JordanElement from_coords(const CoordView& c);

struct Membership {
  bool in_R1 = false;
  bool in_H = false;
  bool in_Hp = false;
  bool in_N1p = false;
  bool in_N1m = false;
};

/// Orbit-set predicates; zero tests use tol * max(1, |X|^2).
Membership classify(const JordanElement& X, double tol = 1e-9);

/// Ray representative of an element of the negative null cone: (X|E1) = -1.
JordanElement normalize_ray(const JordanElement& X);

JordanElement s15_from(const Octonion& x, const Octonion& y, double tol = 1e-9);
std::pair<Octonion, Octonion> s15_to(const JordanElement& X, double tol = 1e-9);

}  // namespace f4
