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

#include <random>
#include <vector>

#include "f4/jordan.hpp"

namespace f4 {

/// Derivation of the Jordan product, as a 27x27 operator.
struct AlgebraElement {
  Mat27 mat = Mat27::Zero();

  AlgebraElement() = default;
  explicit AlgebraElement(const Mat27& m) : mat(m) {}

  AlgebraElement& operator+=(const AlgebraElement& o) { mat += o.mat; return *this; }
  AlgebraElement& operator*=(double s) { mat *= s; return *this; }
};

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
inline AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  a.mat -= b.mat;
  return a;
}
inline AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }

/// Automorphism of the Jordan algebra. Construction verifies the defining
/// identity and throws VerificationError when the residual reaches
/// verify_bound(m).
class GroupElement {
 public:
  GroupElement() : mat_(Mat27::Identity()), residual_(0.0) {}
  explicit GroupElement(const Mat27& m);

  static GroupElement identity() { return GroupElement(); }

  const Mat27& mat() const { return mat_; }
  double residual() const { return residual_; }

  /// Inverse via the invariant form: g^-1 = G^-1 g^T G.
  GroupElement inverse() const;

  JordanElement operator()(const JordanElement& X) const { return mat_ * X; }

 private:
  Mat27 mat_;
  double residual_;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

/// tolerances().verify * max(1, max|m_ij|^2). The residual of a correctly
/// rounded automorphism grows quadratically with its entries.
double verify_bound(const Mat27& m);

/// Max over basis pairs of |g(b_i o b_j) - g b_i o g b_j| plus |gE - E|.
double verify(const Mat27& g);

/// Derivation residual max |D(b_i o b_j) - D b_i o b_j - b_i o D b_j|.
double derivation_residual(const Mat27& d);

// ---- generators ----

/// Generator A_i(a), i in 1..3, from the closed-form one-parameter groups.
AlgebraElement gen_A(int i, const Octonion& a);

/// Root-space generators at levels +1, +2, -1, -2. Level +-2 needs re(p)=0.
AlgebraElement gen_G(int level, const Octonion& param);

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// 24 generators A_i(e_j) followed by the 28 commutators spanning d4.
const std::vector<AlgebraElement>& basis52();

/// The 28 commutators [A_1(e_a), A_1(e_b)], a < b.
const std::vector<AlgebraElement>& d4_basis();

/// Orthonormal (in d4 coefficients) basis of the stabilizer of F3(1) in d4.
const std::vector<AlgebraElement>& m_basis();

/// Coordinates of phi in basis52 (least squares) and the fit residual.
Eigen::VectorXd basis52_coords(const AlgebraElement& phi, double* residual = nullptr);

/// Adjoint matrix of phi in basis52 coordinates.
Eigen::MatrixXd ad_matrix(const AlgebraElement& phi);

/// Killing form trace(ad phi ad psi).
double killing(const AlgebraElement& phi, const AlgebraElement& psi);

/// Conjugation by sigma_1, the Cartan involution on the algebra.
AlgebraElement theta(const AlgebraElement& phi);

// ---- group elements ----

/// exp(t A_i(a)) by the closed forms; a must be a unit octonion.
GroupElement exp_A(int i, double t, const Octonion& a);

/// exp(G_{+-1}(x) + G_{+-2}(p)); sign is +1 or -1.
GroupElement exp_N(int sign, const Octonion& x, const Octonion& p);

/// a_t = exp(t A_3(1)).
GroupElement a_t(double t);

/// exp(-pi/2 A_1(1)), the closed-cell representative of the Matsuki decomposition.
GroupElement g0();

GroupElement sigma(int i);

/// Matrix exponential by scaling and squaring of the Taylor series.
Mat27 expm_raw(const Mat27& phi);
GroupElement expm(const AlgebraElement& phi);

/// D4 element mapping F_j(u) to F_j(v); requires |u| = |v| > 0.
GroupElement d4_rotate(int j, const Octonion& u, const Octonion& v);

bool stabilizer_check(const GroupElement& g, const std::vector<JordanElement>& targets,
                      double tol = -1.0);

// Stabilizer target lists.
std::vector<JordanElement> K_targets();     // {E1}
std::vector<JordanElement> Keps_targets();  // {E2}
std::vector<JordanElement> M_targets();     // {E1, E2, E3, F3(1)}
std::vector<JordanElement> D4_targets();    // {E1, E2, E3}

struct ThetaEpsReport {
  double g_alpha = 0;   // on g_{+-alpha}: sigma_2 = -sigma
  double g_2alpha = 0;  // on g_{+-2alpha}: sigma_2 = sigma
  double a = 0;         // on a
  double m = 0;         // on m
  double weyl = 0;      // |sigma A_3(1) sigma + A_3(1)|
  double max() const;
};
ThetaEpsReport theta_eps_check();

// ---- random elements (for tests, benchmarks and the selftest) ----

Octonion random_octonion(std::mt19937_64& rng, double scale = 1.0);
Octonion random_unit(std::mt19937_64& rng);
Octonion random_imag(std::mt19937_64& rng, double scale = 1.0);
GroupElement random_M(std::mt19937_64& rng, double scale = 1.0);
GroupElement random_D4(std::mt19937_64& rng, double scale = 1.0);
GroupElement random_K(std::mt19937_64& rng);     // fixes E1
GroupElement random_Keps(std::mt19937_64& rng);  // fixes E2

}  // namespace f4
