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

#include "f4/decomp.hpp"

#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <cstdio>
#include <initializer_list>

#include "f4/errors.hpp"
#include "f4/tolerance.hpp"

namespace f4 {

namespace {

bool vanishes(double pairing, const JordanElement& X) {
  return std::fabs(pairing) <= tolerances().cell * std::fmax(norm_inf(X), 1e-300);
}

struct Raw {
  double t;
  NParams n;
};

using Mat27L = Eigen::Matrix<long double, kDim, kDim>;

// t and N+ parameters read off one row of g; c is (gP-|E_row).
Raw iwasawa_params(const Mat27& m, int row, double c) {
  Raw r;
  r.t = 0.5 * std::log(std::fabs(c));
  for (int i = 0; i < 8; ++i) {
    const Octonion e = Octonion::unit(i);
    // (g Y | E_row) is the row-th coordinate of g Y.
    r.n.x.c[i] = 0.5 * m.row(row).dot(Q_plus(e).vec()) / c;
    if (i > 0) r.n.p.c[i] = -0.5 * m.row(row).dot(F(3, e).vec()) / c;
  }
  return r;
}

// g * f1^-1 * f2^-1 * ... in extended precision. The factors are inverted
// numerically rather than through the invariant form: the rounded matrix of a
// large a_t is not exactly isometric, and the form-inverse defect would be
// amplified by |g| in the reconstruction.
Mat27 right_divide(Mat27L acc, std::initializer_list<const GroupElement*> factors) {
  for (const GroupElement* f : factors) {
    const Mat27L m = f->mat().cast<long double>();
    acc = m.transpose().partialPivLu().solve(acc.transpose()).transpose();
  }
  return acc.cast<double>();
}

// Weight spaces of A_3(1) on the algebra, w = -2..2, and the pairing
// inverses (B_{-w}^T G B_w)^-1. The invariant form pairs weight w with -w.
struct WeightFrame {
  std::array<Eigen::MatrixXd, 5> B;
  std::array<Eigen::MatrixXd, 5> pair_inv;
  Mat27 T;
  Mat27 T_inv;
};

const WeightFrame& weight_frame() {
  static const WeightFrame f = [] {
    WeightFrame w;
    const Mat27 H = gen_A(3, Octonion(1)).mat;
    for (int k = 0; k < 5; ++k) {
      const Mat27 S = H - static_cast<double>(k - 2) * Mat27::Identity();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      int rank = 0;
      while (rank < kDim && sv(rank) > 1e-9) ++rank;
      w.B[k] = svd.matrixV().rightCols(kDim - rank);
    }
    const Eigen::MatrixXd G = gram_diagonal().asDiagonal();
    int col = 0;
    for (int k = 0; k < 5; ++k) {
      w.pair_inv[k] = (w.B[4 - k].transpose() * G * w.B[k]).inverse();
      w.T.middleCols(col, w.B[k].cols()) = w.B[k];
      col += static_cast<int>(w.B[k].cols());
    }
    if (col != kDim) throw ConvergenceError("weight_frame: weight spaces do not span");
    w.T_inv = w.T.inverse();
    return w;
  }();
  return f;
}

// m = z^-1 g n^-1 a_{-t}, assembled block by block on the weight spaces.
// On weight w, (m V|U) = e^{-wt} (g n^-1 V|z U) for U of weight -w; this
// avoids forming the product of the large matrices z^-1, n^-1 and a_{-t}.
Mat27 levi_factor(const GroupElement& g, const GroupElement& z, double t,
                  const GroupElement& n) {
  const WeightFrame& wf = weight_frame();
  const Eigen::MatrixXd G = gram_diagonal().asDiagonal();
  const Mat27 ninv = n.inverse().mat();
  Mat27 mT;
  int col = 0;
  for (int k = 0; k < 5; ++k) {
    const int w = k - 2;
    const Eigen::MatrixXd Y = g.mat() * (ninv * wf.B[k]);
    const Eigen::MatrixXd zU = z.mat() * wf.B[4 - k];
    const Eigen::MatrixXd coef = wf.pair_inv[k] * (zU.transpose() * G * Y);
    mT.middleCols(col, wf.B[k].cols()) = std::exp(-w * t) * (wf.B[k] * coef);
    col += static_cast<int>(wf.B[k].cols());
  }
  return mT * wf.T_inv;
}

// Reconstruction postcondition. The bound is linear in |g| because the
// residual is a difference of matrices of that size.
void require_reconstruction(double residual, const GroupElement& g, const char* what) {
  const double bound = tolerances().verify * std::fmax(1.0, g.mat().cwiseAbs().maxCoeff());
  if (!(residual < bound)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: reconstruction residual %.3e exceeds %.3e", what,
                  residual, bound);
    throw ConvergenceError(buf);
  }
}

}  // namespace

const char* to_string(Cell c) { return c == Cell::Open ? "open" : "closed"; }
const char* to_string(KEpsOrbit o) { return o == KEpsOrbit::P12 ? "P12" : "P13"; }
const char* to_string(NMinusOrbit o) { return o == NMinusOrbit::P ? "P" : "sigmaP"; }

GroupElement n_plus(const NParams& n) { return exp_N(1, n.x, n.p); }
GroupElement n_minus(const NParams& n) { return exp_N(-1, n.x, n.p); }

double reconstruction_error(const Mat27& product, const GroupElement& g) {
  return (product - g.mat()).cwiseAbs().maxCoeff();
}

NParams n_pair(const JordanElement& X) {
  const double c = inner(P_minus(), X);
  if (vanishes(c, X)) throw DegeneratePairing("n_pair: (P-|X) vanishes");
  const CoordView cv = coords(X);
  // {X}_{-E1+E2} = (P-|X)/2
  return NParams{(2.0 / c) * cv.y, cv.p / c};
}

JordanElement nx_closed_form(const JordanElement& X) {
  const double c = inner(P_minus(), X);
  if (vanishes(c, X)) throw DegeneratePairing("nx_closed_form: (P-|X) vanishes");
  const double tr = trace(X);
  return (0.5 * c) * (E_(2) - E_(1)) + (0.25 * (tr * tr / c - c)) * P_minus() +
         (0.5 * tr) * (E() - E_(3));
}

IwasawaFactors iwasawa(const GroupElement& g) {
  const double c = g.mat().row(0).dot(P_minus().vec());  // (gP-|E1)
  if (!(c < 0.0)) throw VerificationError("iwasawa: (gP-|E1) is not negative");
  const Raw r = iwasawa_params(g.mat(), 0, c);
  IwasawaFactors f;
  f.t = r.t;
  f.n = r.n;
  const GroupElement n = n_plus(f.n);
  const GroupElement a = a_t(f.t);
  f.k = GroupElement(right_divide(g.mat().cast<long double>(), {&n, &a}));
  if (!stabilizer_check(f.k, K_targets()))
    throw VerificationError("iwasawa: K factor does not fix E1");
  f.residual = reconstruction_error(f.k.mat() * a.mat() * n.mat(), g);
  require_reconstruction(f.residual, g, "iwasawa");
  return f;
}

KEpsFactors keps_iwasawa(const GroupElement& g) {
  const JordanElement X = g(P_minus());
  const double c = X.xi(2);  // (gP-|E2)
  if (vanishes(c, X)) throw DegenerateCell("keps: (gP-|E2) vanishes");
  if (c < 0.0) throw VerificationError("keps: (gP-|E2) is negative");
  const Raw r = iwasawa_params(g.mat(), 1, c);
  KEpsFactors f;
  f.t = r.t;
  f.n = r.n;
  const GroupElement n = n_plus(f.n);
  const GroupElement a = a_t(f.t);
  f.k = GroupElement(right_divide(g.mat().cast<long double>(), {&n, &a}));
  if (!stabilizer_check(f.k, Keps_targets()))
    throw VerificationError("keps: K_eps factor does not fix E2");
  f.residual = reconstruction_error(f.k.mat() * a.mat() * n.mat(), g);
  require_reconstruction(f.residual, g, "keps");
  return f;
}

Cell matsuki_classify(const GroupElement& g) {
  const JordanElement X = g(P_minus());
  return vanishes(X.xi(2), X) ? Cell::Closed : Cell::Open;
}

MatsukiFactors matsuki(const GroupElement& g) {
  MatsukiFactors f;
  if (matsuki_classify(g) == Cell::Open) {
    const KEpsFactors k = keps_iwasawa(g);
    f.cell = Cell::Open;
    f.k_eps = k.k;
    f.t = k.t;
    f.n = k.n;
    f.residual = k.residual;
    return f;
  }
  f.cell = Cell::Closed;
  f.w = true;
  // Ray representative h(-1, 0, 1; 0, x2, 0) with |x2| = 1.
  JordanElement X = normalize_ray(g(P_minus()));
  const double shape_tol = 1e-8 * std::fmax(1.0, norm_inf(X));
  const double dev = std::fmax(
      std::fmax(std::fabs(X.xi(2)), std::fabs(X.xi(3) - 1.0)),
      std::fmax(max_abs(X.x(1)), max_abs(X.x(3))));
  if (dev > shape_tol) throw ShapeViolation("matsuki: closed-cell ray has unexpected shape");
  Octonion x2 = X.x(2);
  x2 = x2 / norm(x2);
  const GroupElement kp = d4_rotate(2, x2, Octonion(1));
  const GroupElement h = g0().inverse() * kp * g;
  const IwasawaFactors iw = iwasawa(h);
  if (!stabilizer_check(iw.k, M_targets()))
    throw VerificationError("matsuki: K factor of the reduced element is not in M");
  f.k_eps = kp.inverse();
  f.m = iw.k;
  f.t = iw.t;
  f.n = iw.n;
  f.residual = reconstruction_error(
      f.k_eps.mat() * g0().mat() * f.m.mat() * a_t(f.t).mat() * n_plus(f.n).mat(), g);
  require_reconstruction(f.residual, g, "matsuki");
  return f;
}

Cell bruhat_classify(const GroupElement& g) {
  const JordanElement X = g(P_minus());
  return vanishes(inner(X, sigma_P_minus()), X) ? Cell::Closed : Cell::Open;
}

GaussFactors gauss(const GroupElement& g) {
  const JordanElement X = g(P_minus());
  const double c = inner(X, sigma_P_minus());
  if (vanishes(c, X)) throw DegenerateCell("gauss: (gP-|sigma P-) vanishes");
  if (c < 0.0) throw VerificationError("gauss: (gP-|sigma P-) is negative");
  GaussFactors f;
  for (int i = 0; i < 8; ++i) {
    const Octonion e = Octonion::unit(i);
    f.z.x.c[i] = -0.5 * inner(Q_minus(e), X) / c;
    if (i > 0) f.z.p.c[i] = -0.5 * inner(F(3, e), X) / c;
  }
  f.t = 0.5 * std::log(0.25 * c);
  // N- and M fix sigma P-, so g^-1 sigma P- = e^{2t} n^-1 sigma P-.
  f.n = z_of_X(sigma(1)(g.inverse()(sigma_P_minus())));
  // Near the closed cell z and n grow like a power of |X|/c and the
  // rounding of g is amplified accordingly.
  GroupElement z, n, a;
  try {
    z = n_minus(f.z);
    n = n_plus(f.n);
    a = a_t(f.t);
    f.m = GroupElement(levi_factor(g, z, f.t, n));
  } catch (const VerificationError& e) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "gauss: ill-conditioned near the closed cell (c/|X| = %.3e): %s",
                  c / norm_inf(X), e.what());
    throw ConvergenceError(buf);
  }
  if (!stabilizer_check(f.m, M_targets()))
    throw VerificationError("gauss: m factor is not in M");
  f.residual = reconstruction_error(z.mat() * f.m.mat() * a.mat() * n.mat(), g);
  require_reconstruction(f.residual, g, "gauss");
  return f;
}

NParams z_of_X(const JordanElement& X) {
  if (vanishes(inner(X, sigma_P_minus()), X))
    throw DegeneratePairing("z_of_X: (X|sigma P-) vanishes");
  return n_pair(sigma(1)(X));
}

KEpsClassification flag_classify_keps(const JordanElement& X) {
  if (!classify(X).in_N1m) throw DomainError("flag_classify_keps: X is not in N1-");
  KEpsClassification out;
  const double nx = norm_inf(X);
  if (vanishes(X.xi(2), X)) {
    out.orbit = KEpsOrbit::P13;
    const Octonion x2 = X.x(2);
    const double r = norm(x2);
    out.witness = d4_rotate(2, x2, Octonion(r));
    out.scale = r;
  } else {
    out.orbit = KEpsOrbit::P12;
    GroupElement boost;
    const Octonion x2 = X.x(2);
    const double c = norm(x2);
    if (c > 1e-14 * nx) {
      const double D = X.xi(3) - X.xi(1);
      boost = exp_A(2, 0.5 * std::atanh(2.0 * c / D), x2 / c);
    }
    const JordanElement Y = boost(X);
    const Octonion x3 = Y.x(3);
    const GroupElement rot = d4_rotate(3, x3, Octonion(norm(x3)));
    out.witness = rot * boost;
    out.scale = out.witness(X).xi(2);
  }
  const JordanElement target =
      out.orbit == KEpsOrbit::P12 ? P_minus() : P13_minus();
  const JordanElement dev = out.witness(X) - out.scale * target;
  if (norm_inf(dev) > 1e-8 * std::fmax(1.0, nx))
    throw ConvergenceError("flag_classify_keps: witness does not reach the base point");
  return out;
}

NMinusOrbit flag_classify_nminus(const JordanElement& X) {
  if (!classify(X).in_N1m) throw DomainError("flag_classify_nminus: X is not in N1-");
  return vanishes(inner(X, sigma_P_minus()), X) ? NMinusOrbit::SigmaP : NMinusOrbit::P;
}

bool stabilizer_flag(const GroupElement& g) {
  const JordanElement X = g(P_minus());
  const double s = X.xi(2);
  if (!(s > 0.0)) return false;
  return norm_inf(X - s * P_minus()) <= tolerances().verify * std::fmax(1.0, norm_inf(X));
}

}  // namespace f4
