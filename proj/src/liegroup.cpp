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

#include "f4/liegroup.hpp"

#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "f4/errors.hpp"
#include "f4/tolerance.hpp"

namespace f4 {

namespace {

template <class Fn>
Mat27 matrix_of(Fn&& f) {
  Mat27 m;
  for (int k = 0; k < kDim; ++k) {
    JordanElement b{Vec27(Vec27::Unit(k))};
    m.col(k) = f(b).vec();
  }
  return m;
}

double inf_norm(const Mat27& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

struct Slots {
  double xi[3];
  Octonion x[3];
  explicit Slots(const JordanElement& X) {
    for (int k = 0; k < 3; ++k) {
      xi[k] = X.xi(k + 1);
      x[k] = X.x(k + 1);
    }
  }
  JordanElement pack() const { return JordanElement(xi[0], xi[1], xi[2], x[0], x[1], x[2]); }
};

void check_index(int i) {
  if (i < 1 || i > 3) throw DomainError("generator index must be 1, 2 or 3");
}

// Sign of the slot-mixing terms of exp(t A_i(a)) for i = 2, 3.
double mixing_sign(int i) { return i == 2 ? -1.0 : 1.0; }

// Derivative at t = 0 of the one-parameter action below.
JordanElement apply_dA(int i, const Octonion& a, const JordanElement& X) {
  const Slots in(X);
  Slots out(JordanElement{});
  const int i0 = i - 1, j1 = (i0 + 1) % 3, j2 = (i0 + 2) % 3;
  const double D = in.xi[j1] - in.xi[j2];
  const double ax = inner(a, in.x[i0]);
  if (i == 1) {
    out.xi[j1] = 2.0 * ax;
    out.xi[j2] = -2.0 * ax;
    out.x[j1] = -conj(in.x[j2] * a);
    out.x[j2] = conj(a * in.x[j1]);
  } else {
    const double s = mixing_sign(i);
    out.xi[j1] = -2.0 * ax;
    out.xi[j2] = 2.0 * ax;
    out.x[j1] = s * conj(in.x[j2] * a);
    out.x[j2] = s * conj(a * in.x[j1]);
  }
  out.x[i0] = -D * a;
  return out.pack();
}

// exp(t A_i(a)) X for unit a: rotation for i = 1, boost for i = 2, 3.
JordanElement apply_expA(int i, double t, const Octonion& a, const JordanElement& X) {
  const Slots in(X);
  Slots out = in;
  const int i0 = i - 1, j1 = (i0 + 1) % 3, j2 = (i0 + 2) % 3;
  const double S = in.xi[j1] + in.xi[j2];
  const double D = in.xi[j1] - in.xi[j2];
  const double ax = inner(a, in.x[i0]);
  if (i == 1) {
    const double c2 = std::cos(2 * t), s2 = std::sin(2 * t);
    const double c1 = std::cos(t), s1 = std::sin(t);
    out.xi[j1] = 0.5 * (S + D * c2) + ax * s2;
    out.xi[j2] = 0.5 * (S - D * c2) - ax * s2;
    out.x[i0] = in.x[i0] - (0.5 * D * s2) * a - (2.0 * ax * s1 * s1) * a;
    out.x[j1] = c1 * in.x[j1] - s1 * conj(in.x[j2] * a);
    out.x[j2] = c1 * in.x[j2] + s1 * conj(a * in.x[j1]);
  } else {
    const double c2 = std::cosh(2 * t), s2 = std::sinh(2 * t);
    const double c1 = std::cosh(t), s1 = std::sinh(t);
    const double sg = mixing_sign(i);
    out.xi[j1] = 0.5 * (S + D * c2) - ax * s2;
    out.xi[j2] = 0.5 * (S - D * c2) + ax * s2;
    out.x[i0] = in.x[i0] - (0.5 * D * s2) * a + (2.0 * ax * s1 * s1) * a;
    out.x[j1] = c1 * in.x[j1] + (sg * s1) * conj(in.x[j2] * a);
    out.x[j2] = c1 * in.x[j2] + (sg * s1) * conj(a * in.x[j1]);
  }
  return out.pack();
}

JordanElement apply_dG1(const Octonion& x, const JordanElement& X) {
  const CoordView c = coords(X);
  const double xy = inner(x, c.y);
  JordanElement out = c.r * Q_minus(-x);
  out += c.v * Q_plus(x);
  out += Q_plus(-(c.p * x));
  out += (2.0 * inner(x, c.x)) * P_minus();
  out += (2.0 * xy) * (E() - 3.0 * E_(3));
  out += F(3, 2.0 * im(x * conj(c.y)));
  return out;
}

JordanElement apply_dG2(const Octonion& p, const JordanElement& X) {
  const CoordView c = coords(X);
  JordanElement out = c.r * F(3, -2.0 * p);
  out += (-2.0 * inner(p, c.p)) * P_minus();
  out += Q_plus(-2.0 * (p * c.y));
  return out;
}

JordanElement apply_expG1(const Octonion& x, const JordanElement& X) {
  const CoordView c = coords(X);
  const double xx = norm_sq(x);
  const double xy = inner(x, c.y);
  const Octonion w = im(x * conj(c.y));
  const JordanElement EmE3 = E() - 3.0 * E_(3);
  JordanElement out = c.r * (E_(2) - E_(1) + Q_minus(-x) - xx * EmE3 +
                             Q_plus(xx * x) + (0.5 * xx * xx) * P_minus());
  out += c.s * P_minus();
  out += c.u * E();
  out += c.v * (E_(3) + Q_plus(x) + xx * P_minus());
  out += F(3, c.p) + Q_plus(-(c.p * x));
  out += Q_plus(c.x) + (2.0 * inner(x, c.x)) * P_minus();
  out += Q_minus(c.y) + (2.0 * xy) * EmE3 + F(3, 2.0 * w) +
         Q_plus(-3.0 * xy * x - w * x) + (-2.0 * xy * xx) * P_minus();
  return out;
}

JordanElement apply_expG2(const Octonion& p, const JordanElement& X) {
  const CoordView c = coords(X);
  JordanElement out =
      c.r * (E_(2) - E_(1) + F(3, -2.0 * p) + (2.0 * norm_sq(p)) * P_minus());
  out += c.s * P_minus();
  out += c.u * E();
  out += c.v * E_(3);
  out += F(3, c.p) + (-2.0 * inner(p, c.p)) * P_minus();
  out += Q_plus(c.x);
  out += Q_minus(c.y) + Q_plus(-2.0 * (p * c.y));
  return out;
}

Mat27 sigma_mat(int i) {
  Mat27 m = Mat27::Identity();
  for (int j = 1; j <= 3; ++j)
    if (j != i)
      for (int k = 0; k < 8; ++k) m(slot_offset(j) + k, slot_offset(j) + k) = -1.0;
  return m;
}

void require_imag(const Octonion& p, const char* who) {
  if (std::fabs(re(p)) > 1e-12 * std::fmax(1.0, norm(p)))
    throw DomainError(std::string(who) + ": parameter must be purely imaginary");
}

double elementwise_max(const Mat27& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

// ---------------------------------------------------------------------------

double verify_bound(const Mat27& m) {
  const double a = m.cwiseAbs().maxCoeff();
  return tolerances().verify * std::fmax(1.0, a * a);
}

GroupElement::GroupElement(const Mat27& m) : mat_(m), residual_(verify(m)) {
  const double bound = verify_bound(m);
  if (!(residual_ < bound)) {
    char buf[112];
    std::snprintf(buf, sizeof buf, "automorphism residual %.3e exceeds bound %.3e",
                  residual_, bound);
    throw VerificationError(buf);
  }
}

GroupElement GroupElement::inverse() const {
  const Vec27& G = gram_diagonal();
  Mat27 inv;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) inv(i, j) = mat_(j, i) * G[j] / G[i];
  return GroupElement(inv);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(Mat27(a.mat() * b.mat()));
}

double verify(const Mat27& g) {
  std::array<JordanElement, kDim> cols;
  for (int k = 0; k < kDim; ++k) cols[k] = JordanElement(Vec27(g.col(k)));
  double res = (g * E().vec() - E().vec()).cwiseAbs().maxCoeff();
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      Vec27 d = g * basis_product(i, j) - jordan_mul(cols[i], cols[j]).vec();
      res = std::fmax(res, d.cwiseAbs().maxCoeff());
    }
  return res;
}

double derivation_residual(const Mat27& dm) {
  std::array<JordanElement, kDim> cols;
  for (int k = 0; k < kDim; ++k) cols[k] = JordanElement(Vec27(dm.col(k)));
  double res = 0.0;
  for (int i = 0; i < kDim; ++i) {
    JordanElement bi{Vec27(Vec27::Unit(i))};
    for (int j = i; j < kDim; ++j) {
      JordanElement bj{Vec27(Vec27::Unit(j))};
      Vec27 d = dm * basis_product(i, j) - jordan_mul(cols[i], bj).vec() -
                jordan_mul(bi, cols[j]).vec();
      res = std::fmax(res, d.cwiseAbs().maxCoeff());
    }
  }
  return res;
}

AlgebraElement gen_A(int i, const Octonion& a) {
  check_index(i);
  if (norm_sq(a) == 0.0) throw DomainError("gen_A: direction must be nonzero");
  return AlgebraElement(matrix_of([&](const JordanElement& X) { return apply_dA(i, a, X); }));
}

AlgebraElement gen_G(int level, const Octonion& param) {
  switch (level) {
    case 1:
      return AlgebraElement(
          matrix_of([&](const JordanElement& X) { return apply_dG1(param, X); }));
    case 2:
      require_imag(param, "gen_G");
      return AlgebraElement(
          matrix_of([&](const JordanElement& X) { return apply_dG2(param, X); }));
    case -1:
    case -2:
      return theta(gen_G(-level, param));
    default:
      throw DomainError("gen_G: level must be one of -2, -1, 1, 2");
  }
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(Mat27(a.mat * b.mat - b.mat * a.mat));
}

AlgebraElement theta(const AlgebraElement& phi) {
  const Mat27 s = sigma_mat(1);
  return AlgebraElement(Mat27(s * phi.mat * s));
}

const std::vector<AlgebraElement>& d4_basis() {
  static const std::vector<AlgebraElement> basis = [] {
    std::vector<AlgebraElement> out;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        out.push_back(bracket(gen_A(1, Octonion::unit(a)), gen_A(1, Octonion::unit(b))));
    return out;
  }();
  return basis;
}

namespace {

struct Basis52 {
  std::vector<AlgebraElement> elems;
  Eigen::MatrixXd flat;  // 729 x 52
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
};

const Basis52& basis52_data() {
  static const Basis52 data = [] {
    Basis52 d;
    for (int i = 1; i <= 3; ++i)
      for (int j = 0; j < 8; ++j) d.elems.push_back(gen_A(i, Octonion::unit(j)));
    for (const auto& c : d4_basis()) d.elems.push_back(c);
    d.flat.resize(kDim * kDim, static_cast<Eigen::Index>(d.elems.size()));
    for (std::size_t k = 0; k < d.elems.size(); ++k)
      d.flat.col(static_cast<Eigen::Index>(k)) =
          Eigen::Map<const Eigen::VectorXd>(d.elems[k].mat.data(), kDim * kDim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d.flat);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv[k] > 1e-9 * sv[0]) ++rank;
    if (rank != 52)
      throw ConvergenceError("basis52: numerical rank is " + std::to_string(rank) +
                             ", expected 52");
    d.qr.compute(d.flat);
    return d;
  }();
  return data;
}

}  // namespace

const std::vector<AlgebraElement>& basis52() { return basis52_data().elems; }

Eigen::VectorXd basis52_coords(const AlgebraElement& phi, double* residual) {
  const auto& d = basis52_data();
  Eigen::Map<const Eigen::VectorXd> v(phi.mat.data(), kDim * kDim);
  Eigen::VectorXd c = d.qr.solve(Eigen::VectorXd(v));
  if (residual) *residual = (d.flat * c - v).cwiseAbs().maxCoeff();
  return c;
}

Eigen::MatrixXd ad_matrix(const AlgebraElement& phi) {
  const auto& b = basis52();
  Eigen::MatrixXd ad(52, 52);
  for (int k = 0; k < 52; ++k) ad.col(k) = basis52_coords(bracket(phi, b[k]));
  return ad;
}

double killing(const AlgebraElement& phi, const AlgebraElement& psi) {
  return (ad_matrix(phi) * ad_matrix(psi)).trace();
}

const std::vector<AlgebraElement>& m_basis() {
  static const std::vector<AlgebraElement> basis = [] {
    const auto& d4 = d4_basis();
    const int n = static_cast<int>(d4.size());
    Eigen::MatrixXd A(kDim, n);
    const Vec27 f = F(3, Octonion(1)).vec();
    for (int k = 0; k < n; ++k) A.col(k) = d4[k].mat * f;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv[k] > 1e-9 * sv[0]) ++rank;
    std::vector<AlgebraElement> out;
    for (int col = rank; col < n; ++col) {
      AlgebraElement m;
      for (int k = 0; k < n; ++k) m.mat += svd.matrixV()(k, col) * d4[k].mat;
      out.push_back(m);
    }
    return out;
  }();
  return basis;
}

GroupElement exp_A(int i, double t, const Octonion& a) {
  check_index(i);
  if (std::fabs(norm_sq(a) - 1.0) > 1e-12)
    throw DomainError("exp_A: direction must be a unit octonion");
  return GroupElement(
      matrix_of([&](const JordanElement& X) { return apply_expA(i, t, a, X); }));
}

GroupElement exp_N(int sign, const Octonion& x, const Octonion& p) {
  if (sign != 1 && sign != -1) throw DomainError("exp_N: sign must be +1 or -1");
  require_imag(p, "exp_N");
  Mat27 m = matrix_of([&](const JordanElement& X) { return apply_expG1(x, X); }) *
            matrix_of([&](const JordanElement& X) { return apply_expG2(p, X); });
  if (sign < 0) {
    const Mat27 s = sigma_mat(1);
    m = s * m * s;
  }
  return GroupElement(m);
}

GroupElement a_t(double t) { return exp_A(3, t, Octonion(1)); }

GroupElement g0() { return exp_A(1, -0.5 * std::numbers::pi, Octonion(1)); }

GroupElement sigma(int i) {
  check_index(i);
  return GroupElement(sigma_mat(i));
}

Mat27 expm_raw(const Mat27& phi) {
  double nrm = inf_norm(phi);
  int squarings = 0;
  while (nrm > 0.5) {
    nrm *= 0.5;
    ++squarings;
  }
  const Mat27 A = std::ldexp(1.0, -squarings) * phi;
  Mat27 result = Mat27::Identity();
  Mat27 term = Mat27::Identity();
  for (int k = 1; k < 64; ++k) {
    term = (term * A) / static_cast<double>(k);
    result += term;
    if (inf_norm(term) < 1e-13 * inf_norm(result)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

GroupElement expm(const AlgebraElement& phi) { return GroupElement(expm_raw(phi.mat)); }

namespace {

// Per-slot 64 x 28 map from d4 coefficients to the 8x8 block on F_j.
const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& slot_solver(int j) {
  static const std::array<Eigen::ColPivHouseholderQR<Eigen::MatrixXd>, 3> solvers = [] {
    std::array<Eigen::ColPivHouseholderQR<Eigen::MatrixXd>, 3> out;
    const auto& d4 = d4_basis();
    for (int s = 1; s <= 3; ++s) {
      Eigen::MatrixXd A(64, static_cast<Eigen::Index>(d4.size()));
      for (std::size_t k = 0; k < d4.size(); ++k) {
        Eigen::Matrix<double, 8, 8> blk = d4[k].mat.block<8, 8>(slot_offset(s), slot_offset(s));
        A.col(static_cast<Eigen::Index>(k)) = Eigen::Map<Eigen::VectorXd>(blk.data(), 64);
      }
      out[s - 1].compute(A);
    }
    return out;
  }();
  return solvers[j - 1];
}

Eigen::Matrix<double, 8, 1> to_vec(const Octonion& o) {
  return Eigen::Map<const Eigen::Matrix<double, 8, 1>>(o.c.data());
}

}  // namespace

GroupElement d4_rotate(int j, const Octonion& u, const Octonion& v) {
  check_index(j);
  const double nu = norm_sq(u), nv = norm_sq(v);
  if (!(nu > 0.0)) throw DomainError("d4_rotate: u must be nonzero");
  if (std::fabs(nu - nv) > 1e-9 * std::fmax(1.0, nu))
    throw DomainError("d4_rotate: |u| and |v| differ");
  const Eigen::Matrix<double, 8, 1> uh = to_vec(u).normalized();
  const Eigen::Matrix<double, 8, 1> vh = to_vec(v).normalized();
  const double cosang = uh.dot(vh);
  Eigen::Matrix<double, 8, 1> w = vh - cosang * uh;
  double sinang = w.norm();
  if (sinang < 1e-14) {
    if (cosang > 0) return GroupElement::identity();
    // antipodal: rotate through any plane containing u
    int k = 0;
    for (int m = 1; m < 8; ++m)
      if (std::fabs(uh[m]) < std::fabs(uh[k])) k = m;
    w = Eigen::Matrix<double, 8, 1>::Unit(k) - uh[k] * uh;
    sinang = 0.0;
  }
  w.normalize();
  const double angle = std::atan2(sinang, cosang);
  // Plane-rotation generator carrying uh toward w.
  const Eigen::Matrix<double, 8, 8> R = w * uh.transpose() - uh * w.transpose();
  Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(R.data(), 64);
  const auto& qr = slot_solver(j);
  Eigen::VectorXd coef = qr.solve(target);
  const auto& d4 = d4_basis();
  Mat27 gen = Mat27::Zero();
  Eigen::Matrix<double, 8, 8> blk = Eigen::Matrix<double, 8, 8>::Zero();
  for (std::size_t k = 0; k < d4.size(); ++k) {
    gen += coef[static_cast<Eigen::Index>(k)] * d4[k].mat;
  }
  blk = gen.block<8, 8>(slot_offset(j), slot_offset(j));
  if ((blk - R).cwiseAbs().maxCoeff() > 1e-10)
    throw ConvergenceError("d4_rotate: slot generator not reachable in d4");
  GroupElement k = expm(AlgebraElement(Mat27(angle * gen)));
  const Vec27 diff = k.mat() * F(j, u).vec() - F(j, v).vec();
  if (diff.cwiseAbs().maxCoeff() > 1e-8 * std::fmax(1.0, std::sqrt(nu)))
    throw ConvergenceError("d4_rotate: postcondition failed");
  return k;
}

bool stabilizer_check(const GroupElement& g, const std::vector<JordanElement>& targets,
                      double tol) {
  if (tol < 0) tol = tolerances().verify;
  for (const auto& X : targets) {
    const double scale = std::fmax(1.0, norm_inf(X));
    if ((g(X) - X).vec().cwiseAbs().maxCoeff() > tol * scale) return false;
  }
  return true;
}

std::vector<JordanElement> K_targets() { return {E_(1)}; }
std::vector<JordanElement> Keps_targets() { return {E_(2)}; }
std::vector<JordanElement> M_targets() { return {E_(1), E_(2), E_(3), F(3, Octonion(1))}; }
std::vector<JordanElement> D4_targets() { return {E_(1), E_(2), E_(3)}; }

double ThetaEpsReport::max() const {
  return std::fmax(std::fmax(std::fmax(g_alpha, g_2alpha), std::fmax(a, m)), weyl);
}

ThetaEpsReport theta_eps_check() {
  ThetaEpsReport r;
  const Mat27 s1 = sigma_mat(1), s2 = sigma_mat(2);
  auto twist = [&](const AlgebraElement& phi, double eps) {
    return elementwise_max(s2 * phi.mat * s2 - eps * (s1 * phi.mat * s1));
  };
  for (int sgn : {1, -1}) {
    for (int k = 0; k < 8; ++k)
      r.g_alpha = std::fmax(r.g_alpha, twist(gen_G(sgn, Octonion::unit(k)), -1.0));
    for (int k = 1; k < 8; ++k)
      r.g_2alpha = std::fmax(r.g_2alpha, twist(gen_G(2 * sgn, Octonion::unit(k)), 1.0));
  }
  const AlgebraElement h = gen_A(3, Octonion(1));
  r.a = twist(h, 1.0);
  for (const auto& m : m_basis()) r.m = std::fmax(r.m, twist(m, 1.0));
  r.weyl = elementwise_max(s1 * h.mat * s1 + h.mat);
  return r;
}

Octonion random_octonion(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  Octonion o;
  for (auto& v : o.c) v = n(rng);
  return o;
}

Octonion random_unit(std::mt19937_64& rng) {
  Octonion o = random_octonion(rng);
  return o / norm(o);
}

Octonion random_imag(std::mt19937_64& rng, double scale) {
  return im(random_octonion(rng, scale));
}

namespace {

GroupElement random_in_span(std::mt19937_64& rng, const std::vector<AlgebraElement>& span,
                            double scale) {
  std::normal_distribution<double> n(0.0, scale);
  Mat27 phi = Mat27::Zero();
  for (const auto& b : span) phi += n(rng) * b.mat;
  return expm(AlgebraElement(phi));
}

}  // namespace

GroupElement random_M(std::mt19937_64& rng, double scale) {
  return random_in_span(rng, m_basis(), 0.3 * scale);
}

GroupElement random_D4(std::mt19937_64& rng, double scale) {
  return random_in_span(rng, d4_basis(), 0.1 * scale);
}

GroupElement random_K(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  return exp_A(1, ang(rng), random_unit(rng)) * random_D4(rng) *
         exp_A(1, ang(rng), random_unit(rng));
}

GroupElement random_Keps(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> t(-0.8, 0.8);
  return exp_A(2, t(rng), random_unit(rng)) * random_D4(rng) *
         exp_A(2, t(rng), random_unit(rng));
}

}  // namespace f4
