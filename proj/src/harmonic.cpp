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

#include "f4/harmonic.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <limits>

#include "f4/errors.hpp"

namespace f4 {

namespace {

using cplx = std::complex<double>;

double sq(double v) { return v * v; }

// ---- Killing form ----

const Eigen::MatrixXd& killing_gram() {
  static const Eigen::MatrixXd K = [] {
    const auto& b = basis52();
    const int n = static_cast<int>(b.size());
    std::vector<Eigen::MatrixXd> ad;
    ad.reserve(n);
    for (const auto& e : b) ad.push_back(ad_matrix(e));
    Eigen::MatrixXd k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        // trace(A B) = sum of A .* B^T
        k(i, j) = k(j, i) = ad[i].cwiseProduct(ad[j].transpose()).sum();
      }
    return k;
  }();
  return K;
}

// ---- Gamma ----

cplx lngamma(cplx z) {
  gsl_sf_result lr, arg;
  gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lr, &arg);
  return {lr.val, arg.val};
}

bool at_pole(cplx z) {
  return std::fabs(z.imag()) < 1e-12 && z.real() < 0.5 &&
         std::fabs(z.real() - std::round(z.real())) < 1e-12;
}

// log of Gamma(l/2) Gamma((l+m)/4) / (Gamma((l+m)/2) Gamma((l+m+2m')/4)).
// Returns false when a denominator argument sits on a pole (ratio is 0).
bool log_gamma_ratio(cplx l, cplx* out) {
  const double m = kMAlpha;
  const cplx num[2] = {l / 2.0, (l + m) / 4.0};
  const cplx den[2] = {(l + m) / 2.0, (l + kRhoAlpha) / 4.0};
  for (const cplx& z : num)
    if (at_pole(z)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "c_gamma: Gamma pole at lambda_alpha = %g%+gi", l.real(),
                    l.imag());
      throw PoleError(buf);
    }
  for (const cplx& z : den)
    if (at_pole(z)) return false;
  *out = lngamma(num[0]) + lngamma(num[1]) - lngamma(den[0]) - lngamma(den[1]);
  return true;
}

// ---- quadrature ----

// All radial integrals run over v = e^y on the whole line: algebraic tails
// in v become exponential in y and no truncation radius is needed.

// log(e^p + e^q)
double log_add_exp(double p, double q) {
  const double m = std::fmax(p, q);
  return m + std::log1p(std::exp(-std::fabs(p - q)));
}

// log(1 + v^2) at v = e^y
double log1p_sq(double y) { return log_add_exp(0.0, 2.0 * y); }

template <class F>
QuadratureResult whole_line(F f, double tol, unsigned depth, const char* what) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr double inf = std::numeric_limits<double>::infinity();
  double err = 0;
  // Boost stops near err = tol * L1; ask for margin so the check below holds.
  const cplx v = gauss_kronrod<double, 15>::integrate(f, -inf, inf, depth, 0.125 * tol, &err);
  if (!std::isfinite(err) || !(err <= tol * std::abs(v))) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: error estimate %.3e exceeds %.1e relative", what, err,
                  tol);
    throw NonConvergent(buf);
  }
  return {v, err};
}

// int_0^inf v^k (1+v^2)^e dv
QuadratureResult power_integral(double k, cplx e, double tol, unsigned depth, const char* what) {
  return whole_line([=](double y) { return std::exp((k + 1.0) * y + e * log1p_sq(y)); }, tol,
                    depth, what);
}

// u^6 (1+u^2)^{-(l+22)/4}
QuadratureResult u_integral(cplx l, double tol, unsigned depth) {
  return power_integral(6.0, -(l + kRhoAlpha) / 4.0, tol, depth, "c_quadrature (u)");
}

// t^7 (1+t^2)^{-(l+8)/2}
QuadratureResult t_integral(cplx l, double tol, unsigned depth) {
  return power_integral(7.0, -(l + static_cast<double>(kMAlpha)) / 2.0, tol, depth,
                        "c_quadrature (t)");
}

struct RhoNorm {
  double u;  // u-integral at rho
  double t;  // t-integral at rho
};

const RhoNorm& rho_norm() {
  static const RhoNorm n = [] {
    return RhoNorm{u_integral(kRhoAlpha, 1e-12, 20).value.real(),
                   t_integral(kRhoAlpha, 1e-12, 20).value.real()};
  }();
  return n;
}

}  // namespace

double H_nbar(const Octonion& x, const Octonion& p, double t) {
  if (std::fabs(re(p)) > 1e-12) throw DomainError("H_nbar: p must be imaginary");
  const double e2t = std::exp(2.0 * t);
  return 0.5 * (std::log(sq(e2t + norm_sq(x)) + 4.0 * norm_sq(p)) - 2.0 * t);
}

double alpha_of_H() {
  static const double a = [] {
    const AlgebraElement psi = gen_G(1, Octonion(1));
    const Mat27 br = bracket(gen_A(3, Octonion(1)), psi).mat;
    const double v = br.cwiseProduct(psi.mat).sum() / psi.mat.squaredNorm();
    if ((br - v * psi.mat).cwiseAbs().maxCoeff() > 1e-10)
      throw ConvergenceError("alpha_of_H: level +1 generator is not an eigenvector");
    return v;
  }();
  return a;
}

double alpha_norm() {
  static const double n = [] {
    const AlgebraElement H = gen_A(3, Octonion(1));
    // H_alpha = (alpha(H)/B(H,H)) H, so <alpha,alpha> = alpha(H)^2 / B(H,H).
    return sq(alpha_of_H()) / killing(H, H);
  }();
  return n;
}

double killing_fast(const AlgebraElement& phi, const AlgebraElement& psi) {
  const Eigen::VectorXd a = basis52_coords(phi), b = basis52_coords(psi);
  return a.dot(killing_gram() * b);
}

double q_form(const AlgebraElement& phi) {
  return -alpha_norm() * killing_fast(phi, theta(phi));
}

std::complex<double> exp_lambda_H(const Octonion& x, const Octonion& p, SpectralParam lam) {
  const double qx = q_form(gen_G(-1, x));
  const double qy = q_form(gen_G(-2, p));
  const double base = sq(1.0 + 0.5 * qx) + 2.0 * qy;
  return std::exp(lam.lambda_alpha / 4.0 * std::log(base));
}

std::complex<double> c_gamma(SpectralParam lam) {
  cplx v, rho;
  if (!log_gamma_ratio(lam.lambda_alpha, &v)) return 0.0;
  log_gamma_ratio(kRhoAlpha, &rho);
  return std::exp(v - rho);
}

QuadratureResult c_quadrature_result(SpectralParam lam, const QuadratureSpec& spec) {
  const cplx l = lam.lambda_alpha;
  if (!(l.real() > 0.0)) throw DomainError("c_quadrature: requires Re(lambda_alpha) > 0");
  const QuadratureResult u = u_integral(l, 0.5 * spec.rel_tol, spec.max_depth);
  const QuadratureResult t = t_integral(l, 0.5 * spec.rel_tol, spec.max_depth);
  const RhoNorm& n = rho_norm();
  const cplx c = u.value * t.value / (n.u * n.t);
  return {c, std::abs(c) * (u.error / std::abs(u.value) + t.error / std::abs(t.value))};
}

std::complex<double> c_quadrature(SpectralParam lam, const QuadratureSpec& spec) {
  return c_quadrature_result(lam, spec).value;
}

// With s = (1+r^2) u / 2 the p-radius integral factors out of the rho
// measure, leaving
//   phi(a_t) = int r^7 (1+r^2)^-15 J(r) dr / (N_r N_u),
//   J(r) = int u^6 (e^{-2t}(rho(r)+u^2))^-b (1+u^2)^-a du,
//   rho(r) = ((e^{2t}+r^2)/(1+r^2))^2.
QuadratureResult spherical_result(SpectralParam lam, double t, const QuadratureSpec& spec) {
  const cplx l = lam.lambda_alpha;
  if (!(l.real() >= 0.0)) throw DomainError("spherical: requires Re(lambda_alpha) >= 0");
  const cplx a = (kRhoAlpha + l) / 4.0;
  const cplx b = (kRhoAlpha - l) / 4.0;
  const double inner_tol = 0.1 * spec.rel_tol;
  double worst_inner = 0.0;
  auto outer = [&](double y) -> cplx {
    const double L = log1p_sq(y);
    const double log_rho = 2.0 * (log_add_exp(2.0 * t, 2.0 * y) - L);
    const QuadratureResult J = whole_line(
        [&](double z) {
          const double lw = log_add_exp(log_rho, 2.0 * z);
          return std::exp(7.0 * z - b * (lw - 2.0 * t) - a * log1p_sq(z));
        },
        inner_tol, spec.max_depth, "spherical (inner)");
    worst_inner = std::fmax(worst_inner, J.error / std::abs(J.value));
    return std::exp(8.0 * y - 15.0 * L) * J.value;
  };
  const QuadratureResult o = whole_line(outer, 0.5 * spec.rel_tol, spec.max_depth, "spherical");
  // N_r is the t-integral at rho.
  const cplx v = o.value / (rho_norm().t * rho_norm().u);
  return {v, std::abs(v) * (o.error / std::abs(o.value) + worst_inner)};
}

std::complex<double> spherical(SpectralParam lam, double t, const QuadratureSpec& spec) {
  return spherical_result(lam, t, spec).value;
}

}  // namespace f4
