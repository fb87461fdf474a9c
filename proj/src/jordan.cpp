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

#include "f4/jordan.hpp"

#include <cmath>
#include <vector>

#include "f4/errors.hpp"

namespace f4 {

JordanElement::JordanElement(double xi1, double xi2, double xi3,
                             const Octonion& x1, const Octonion& x2,
                             const Octonion& x3) {
  v_[0] = xi1;
  v_[1] = xi2;
  v_[2] = xi3;
  set_x(1, x1);
  set_x(2, x2);
  set_x(3, x3);
}

Octonion JordanElement::x(int i) const {
  Octonion o;
  const int off = slot_offset(i);
  for (int k = 0; k < 8; ++k) o.c[k] = v_[off + k];
  return o;
}

void JordanElement::set_x(int i, const Octonion& o) {
  const int off = slot_offset(i);
  for (int k = 0; k < 8; ++k) v_[off + k] = o.c[k];
}

JordanElement E() { return JordanElement(1, 1, 1, {}, {}, {}); }

JordanElement E_(int i) {
  JordanElement X;
  X.set_xi(i, 1.0);
  return X;
}

JordanElement F(int i, const Octonion& x) {
  JordanElement X;
  X.set_x(i, x);
  return X;
}

JordanElement P_minus() { return JordanElement(-1, 1, 0, {}, {}, Octonion(1)); }
JordanElement P_plus() { return JordanElement(1, -1, 0, {}, {}, Octonion(1)); }
JordanElement P13_minus() { return JordanElement(-1, 0, 1, {}, Octonion(1), {}); }
JordanElement sigma_P_minus() {
  return JordanElement(-1, 1, 0, {}, {}, Octonion(-1));
}
JordanElement Q_plus(const Octonion& x) {
  return JordanElement(0, 0, 0, x, conj(x), {});
}
JordanElement Q_minus(const Octonion& x) {
  return JordanElement(0, 0, 0, x, -conj(x), {});
}

const Vec27& gram_diagonal() {
  static const Vec27 g = [] {
    Vec27 d;
    d.head<3>().setOnes();
    d.segment<8>(3).setConstant(2.0);
    d.tail<16>().setConstant(-2.0);
    return d;
  }();
  return g;
}

double trace(const JordanElement& X) { return X.xi(1) + X.xi(2) + X.xi(3); }

double inner(const JordanElement& X, const JordanElement& Y) {
  return X.vec().cwiseProduct(gram_diagonal()).dot(Y.vec());
}

JordanElement cross_square(const JordanElement& X) {
  const double a = X.xi(1), b = X.xi(2), c = X.xi(3);
  const Octonion x1 = X.x(1), x2 = X.x(2), x3 = X.x(3);
  return JordanElement(b * c - norm_sq(x1), c * a + norm_sq(x2),
                       a * b + norm_sq(x3),
                       -conj(x2 * x3) - a * x1,
                       conj(x3 * x1) - b * x2,
                       conj(x1 * x2) - c * x3);
}

// Polarization of cross_square written out so each octonion product is
// evaluated once per term.
JordanElement cross(const JordanElement& X, const JordanElement& Y) {
  const double a = X.xi(1), b = X.xi(2), c = X.xi(3);
  const double p = Y.xi(1), q = Y.xi(2), r = Y.xi(3);
  const Octonion x1 = X.x(1), x2 = X.x(2), x3 = X.x(3);
  const Octonion y1 = Y.x(1), y2 = Y.x(2), y3 = Y.x(3);
  return JordanElement(
      0.5 * (b * r + c * q) - inner(x1, y1),
      0.5 * (c * p + a * r) + inner(x2, y2),
      0.5 * (a * q + b * p) + inner(x3, y3),
      -0.5 * conj(x2 * y3 + y2 * x3) - 0.5 * (a * y1 + p * x1),
      0.5 * conj(x3 * y1 + y3 * x1) - 0.5 * (b * y2 + q * x2),
      0.5 * conj(x1 * y2 + y1 * x2) - 0.5 * (c * y3 + r * x3));
}

double det(const JordanElement& X) { return inner(X, cross_square(X)) / 3.0; }

JordanElement jordan_mul(const JordanElement& X, const JordanElement& Y) {
  const double tx = trace(X), ty = trace(Y);
  JordanElement out = cross(X, Y);
  out += 0.5 * tx * Y;
  out += 0.5 * ty * X;
  out -= 0.5 * (tx * ty - inner(X, Y)) * E();
  return out;
}

const Vec27& basis_product(int i, int j) {
  static const std::vector<Vec27> table = [] {
    std::vector<Vec27> t(kDim * kDim);
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) {
        JordanElement A(Vec27(Vec27::Unit(a))), B(Vec27(Vec27::Unit(b)));
        t[a * kDim + b] = jordan_mul(A, B).vec();
      }
    return t;
  }();
  return table[i * kDim + j];
}

double norm_inf(const JordanElement& X) { return X.vec().cwiseAbs().maxCoeff(); }

CoordView coords(const JordanElement& X) {
  CoordView cv;
  const Octonion x1 = X.x(1), x2 = X.x(2), x3 = X.x(3);
  cv.s = re(x3);
  cv.p = im(x3);
  cv.r = 0.5 * (X.xi(2) - X.xi(1)) - cv.s;
  cv.u = 0.5 * (X.xi(1) + X.xi(2));
  cv.v = X.xi(3) - cv.u;
  cv.x = 0.5 * (x1 + conj(x2));
  cv.y = 0.5 * (x1 - conj(x2));
  return cv;
}

JordanElement from_coords(const CoordView& c) {
  JordanElement X = c.r * (E_(2) - E_(1));
  X += c.s * P_minus();
  X += c.u * E();
  X += c.v * E_(3);
  X += F(3, c.p);
  X += Q_plus(c.x);
  X += Q_minus(c.y);
  return X;
}

Membership classify(const JordanElement& X, double tol) {
  Membership m;
  const double nx = norm_inf(X);
  const double quad = tol * std::fmax(1.0, nx * nx);
  const double lin = tol * std::fmax(1.0, nx);
  m.in_R1 = norm_inf(cross_square(X)) <= quad && nx > tol;
  if (!m.in_R1) return m;
  const double tr = trace(X);
  const double e1 = X.xi(1);  // (E1|X)
  if (std::fabs(tr - 1.0) <= lin) {
    m.in_H = e1 >= 1.0 - lin;
    m.in_Hp = e1 <= lin;
  }
  if (std::fabs(tr) <= lin) {
    m.in_N1p = e1 > lin;
    m.in_N1m = e1 < -lin;
  }
  return m;
}

JordanElement normalize_ray(const JordanElement& X) {
  const double e1 = X.xi(1);
  if (!(e1 < 0.0)) throw DomainError("normalize_ray: (X|E1) must be negative");
  return (1.0 / -e1) * X;
}

JordanElement s15_from(const Octonion& x, const Octonion& y, double tol) {
  const double q = norm_sq(x) + norm_sq(y);
  if (std::fabs(q - 1.0) > tol)
    throw DomainError("s15_from: (x|x)+(y|y) must equal 1");
  return JordanElement(-1.0, norm_sq(y), norm_sq(x), conj(x * y), x, y);
}

std::pair<Octonion, Octonion> s15_to(const JordanElement& X, double tol) {
  if (!classify(X, tol).in_N1m)
    throw DomainError("s15_to: element is not in the negative null cone");
  const double k = -1.0 / X.xi(1);
  return {k * X.x(2), k * X.x(3)};
}

}  // namespace f4
