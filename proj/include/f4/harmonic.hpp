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

#include <complex>

#include "f4/liegroup.hpp"

namespace f4 {

inline constexpr int kMAlpha = 8;
inline constexpr int kM2Alpha = 7;
/// lambda_alpha of rho: m_alpha + 2 m_2alpha.
inline constexpr double kRhoAlpha = kMAlpha + 2 * kM2Alpha;

/// lambda in a_C^*, stored as lambda_alpha = 2<lambda,alpha>/<alpha,alpha>.
struct SpectralParam {
  std::complex<double> lambda_alpha;
};

struct QuadratureSpec {
  double rel_tol = 1e-6;
  unsigned max_depth = 15;  // bisection levels per 1-D integral
};

struct QuadratureResult {
  std::complex<double> value;
  double error = 0;  // estimated absolute error
};

/// H(a_t z) for z = exp_N(-, x, p), as a multiple of A_3(1).
double H_nbar(const Octonion& x, const Octonion& p, double t = 0.0);

/// alpha(A_3(1)) read off the adjoint action on the level +1 root space.
double alpha_of_H();

/// <alpha, alpha> = B(H_alpha, H_alpha), B(H_alpha, H) = alpha(H) on a.
double alpha_norm();

/// Killing form via the cached Gram matrix of basis52.
double killing_fast(const AlgebraElement& phi, const AlgebraElement& psi);

/// Q(phi) = -<alpha,alpha> B(phi, theta phi).
double q_form(const AlgebraElement& phi);

/// e^{lambda(H(exp(X+Y)))} with X = G_{-1}(x), Y = G_{-2}(p), from the Q-form.
std::complex<double> exp_lambda_H(const Octonion& x, const Octonion& p, SpectralParam lam);

/// Gamma-ratio c-function normalized by c(rho) = 1. Throws PoleError.
std::complex<double> c_gamma(SpectralParam lam);

/// c-function as a product of two radial integrals, normalized at rho.
/// Requires Re(lambda_alpha) > 0; throws NonConvergent.
QuadratureResult c_quadrature_result(SpectralParam lam, const QuadratureSpec& spec = {});
std::complex<double> c_quadrature(SpectralParam lam, const QuadratureSpec& spec = {});

/// phi_lambda(a_t) by nested radial quadrature. Requires Re(lambda_alpha) >= 0.
QuadratureResult spherical_result(SpectralParam lam, double t, const QuadratureSpec& spec = {});
std::complex<double> spherical(SpectralParam lam, double t, const QuadratureSpec& spec = {});

}  // namespace f4
