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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <chrono>
#include <cstdarg>
#include <limits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sys/wait.h>

#include "f4/batch.hpp"
#include "f4/decomp.hpp"
#include "f4/errors.hpp"
#include "f4/harmonic.hpp"
#include "f4/serialize.hpp"
#include "f4/tolerance.hpp"
#include "f4/wordlang.hpp"
#include "helpers.hpp"

using namespace f4;
using f4::test::max_diff;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::vector<GroupElement> random_words(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<GroupWord> ws;
  for (int i = 0; i < n; ++i) ws.push_back(random_word(rng));
  std::vector<std::string> text;
  for (const auto& w : ws) text.push_back(print_word(w));
  return eval_batch(text, Exec::Parallel);
}

double nparams_diff(const NParams& a, const NParams& b) {
  return std::fmax(max_diff(a.x, b.x), max_diff(a.p, b.p));
}

// ---- criteria ----

Result octonions() {
  std::mt19937_64 rng(1);
  double comp = 0, alt = 0, moufang = 0, anti = 0;
  for (int s = 0; s < 10000; ++s) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    comp = std::fmax(comp, std::fabs(norm_sq(x * y) - norm_sq(x) * norm_sq(y)));
    alt = std::fmax(alt, max_diff(x * (x * y), (x * x) * y));
    alt = std::fmax(alt, max_diff((y * x) * x, y * (x * x)));
    moufang = std::fmax(moufang, max_diff((x * y) * (z * x), x * ((y * z) * x)));
    anti = std::fmax(anti, max_diff(conj(x * y), conj(y) * conj(x)));
  }
  const double worst = std::fmax(std::fmax(comp, alt), std::fmax(moufang, anti));
  return {worst < 1e-12, fmt("composition %.1e, alternativity %.1e, Moufang %.1e, conjugation %.1e",
                             comp, alt, moufang, anti)};
}

Result generators() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_real_distribution<double> t(-2.0, 2.0);
  double a = 0, n = 0, s = 0, d = 0;
  for (int k = 0; k < 100; ++k) a = std::fmax(a, exp_A(idx(rng), t(rng), random_unit(rng)).residual());
  for (int k = 0; k < 100; ++k)
    for (int sign : {1, -1})
      n = std::fmax(n, exp_N(sign, random_octonion(rng, 0.5), random_imag(rng, 0.5)).residual());
  for (int i = 1; i <= 3; ++i) s = std::fmax(s, sigma(i).residual());
  for (int k = 0; k < 50; ++k) {
    const double r = 0.2 + 2.0 * std::uniform_real_distribution<double>()(rng);
    d = std::fmax(d, d4_rotate(idx(rng), r * random_unit(rng), r * random_unit(rng)).residual());
  }
  const double worst = std::fmax(std::fmax(a, n), std::fmax(s, d));
  return {worst < 1e-9, fmt("exp_A %.1e, exp_N (coordinate scale 0.5) %.1e, sigma %.1e, d4_rotate %.1e", a, n, s, d)};
}

Result algebra() {
  const auto& b = basis52();
  Eigen::MatrixXd flat(kDim * kDim, static_cast<Eigen::Index>(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k)
    flat.col(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const Eigen::VectorXd>(b[k].mat.data(), kDim * kDim);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(flat);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv[k] > 1e-9 * sv[0];

  Eigen::EigenSolver<Eigen::MatrixXd> es(ad_matrix(gen_A(3, Octonion(1))));
  int count[5] = {0, 0, 0, 0, 0};
  double dev = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const auto ev = es.eigenvalues()[k];
    const double r = std::round(ev.real());
    dev = std::fmax(dev, std::fmax(std::fabs(ev.real() - r), std::fabs(ev.imag())));
    if (std::fabs(r) <= 2) ++count[static_cast<int>(r) + 2];
  }
  const bool ok = rank == 52 && dev < 1e-9 && count[0] == 7 && count[1] == 8 && count[3] == 8 &&
                  count[4] == 7 && count[2] == 22;
  return {ok, fmt("rank %d; multiplicities -2:%d -1:%d 0:%d 1:%d 2:%d; eigenvalue deviation %.1e",
                  rank, count[0], count[1], count[2], count[3], count[4], dev)};
}

Result iwasawa_round_trip() {
  const auto gs = random_words(1000, 4);
  double res = 0, h_dev = 0, uniq = 0;
  int failures = 0;
  for (const GroupElement& g : gs) {
    try {
      const IwasawaFactors f = iwasawa(g);
      res = std::fmax(res, f.residual);
      if (f.t != 0.5 * std::log(-inner(g(P_minus()), E_(1)))) h_dev = 1;
      const IwasawaFactors r = iwasawa(f.k * a_t(f.t) * n_plus(f.n));
      uniq = std::fmax(uniq, std::fmax(std::fabs(r.t - f.t), nparams_diff(r.n, f.n)));
      uniq = std::fmax(uniq, max_diff(r.k.mat(), f.k.mat()));
    } catch (const F4Error&) {
      ++failures;
    }
  }
  std::mt19937_64 rng(5);
  double nbar = 0;
  for (int s = 0; s < 1000; ++s) {
    const Octonion x = random_octonion(rng), p = random_imag(rng);
    const double t = std::uniform_real_distribution<double>(-1.5, 1.5)(rng);
    nbar = std::fmax(nbar, std::fabs(iwasawa(a_t(t) * exp_N(-1, x, p)).t - H_nbar(x, p, t)));
  }
  const bool ok = failures == 0 && res < 1e-8 && h_dev == 0 && nbar < 1e-9 && uniq < 1e-8;
  return {ok, fmt("residual %.1e, H identity %s, H on N-A %.1e, re-decomposition %.1e, %d failures",
                  res, h_dev == 0 ? "exact" : "broken", nbar, uniq, failures)};
}

Result keps_round_trip() {
  const auto gs = random_words(1000, 6);
  int violations = 0, degenerate = 0, failures = 0;
  double res = 0;
  for (const GroupElement& g : gs) {
    const JordanElement X = g(P_minus());
    const double v = inner(X, E_(2));
    if (std::fabs(v) > tolerances().cell * norm_inf(X) && !(v > 0)) ++violations;
    try {
      res = std::fmax(res, keps_iwasawa(g).residual);
    } catch (const DegenerateCell&) {
      ++degenerate;
    } catch (const F4Error&) {
      ++failures;
    }
  }
  bool g0_degenerate = false;
  try {
    keps_iwasawa(g0());
  } catch (const DegenerateCell&) {
    g0_degenerate = true;
  }
  const bool ok = violations == 0 && failures == 0 && res < 1e-8 && g0_degenerate;
  return {ok, fmt("sign violations %d, residual %.1e, degenerate %d, failures %d, keps(g0) %s",
                  violations, res, degenerate, failures,
                  g0_degenerate ? "DegenerateCell" : "did not raise")};
}

Result matsuki_cells() {
  std::mt19937_64 rng(7);
  double res = 0, tdev = 0, tdev_compact = 0;
  int failures = 0;
  for (int s = 0; s < 200; ++s) {
    const double t = std::uniform_real_distribution<double>(-1, 1)(rng);
    const NParams n{random_octonion(rng, 0.5), random_imag(rng, 0.5)};
    const GroupElement m = random_M(rng);
    GroupElement spin8;
    for (int j = 1; j <= 3; ++j) spin8 = spin8 * d4_rotate(j, random_unit(rng), random_unit(rng));
    const GroupElement g = random_Keps(rng) * g0() * m * a_t(t) * n_plus(n);
    try {
      const MatsukiFactors f = matsuki(g);
      if (f.cell != Cell::Closed) ++failures;
      res = std::fmax(res, f.residual);
      tdev = std::fmax(tdev, std::fabs(f.t - t));
      const MatsukiFactors h = matsuki(spin8 * g0() * m * a_t(t) * n_plus(n));
      res = std::fmax(res, h.residual);
      tdev_compact = std::fmax(tdev_compact, std::fabs(h.t - t));
    } catch (const F4Error&) {
      ++failures;
    }
  }
  int unclassified = 0;
  for (const GroupElement& g : random_words(1000, 8)) {
    try {
      const MatsukiFactors f = matsuki(g);
      if (f.cell != matsuki_classify(g)) ++unclassified;
    } catch (const F4Error&) {
      ++unclassified;
    }
  }
  // Boosts in K_eps rescale the ray g0 P-, so t is not determined by g in the
  // closed cell and tdev stays O(1) for non-compact k_eps.
  const bool ok = failures == 0 && res < 1e-8 && tdev < 1e-8 && unclassified == 0;
  return {ok, fmt("closed-cell residual %.1e, t error %.1e (k_eps in Spin(8): %.1e), "
                  "failures %d, words without a cell %d",
                  res, tdev, tdev_compact, failures, unclassified)};
}

Result gauss_round_trip() {
  const auto gs = random_words(1000, 9);
  int open = 0, closed = 0, ill = 0, other = 0, over = 0, m_fail = 0;
  double res = 0, worst_ratio = 0, min_floor = std::numeric_limits<double>::infinity();
  for (const GroupElement& g : gs) {
    const JordanElement X = g(P_minus());
    const double ratio = std::fabs(inner(X, sigma_P_minus())) / norm_inf(X);
    try {
      const GaussFactors f = gauss(g);
      ++open;
      res = std::fmax(res, f.residual);
      if (!(f.residual < 1e-8)) ++over;
      if (!stabilizer_check(f.m, M_targets(), 1e-8)) ++m_fail;
    } catch (const DegenerateCell&) {
      ++closed;
    } catch (const ConvergenceError&) {
      ++ill;
      worst_ratio = std::fmax(worst_ratio, ratio);
      // Rounding floor of any double-precision reconstruction from these
      // factors: unit roundoff times |z| |n| e^{2|t|}.
      const double c = inner(X, sigma_P_minus());
      NParams z;
      for (int i = 0; i < 8; ++i) {
        const Octonion e = Octonion::unit(i);
        z.x.c[i] = -0.5 * inner(Q_minus(e), X) / c;
        if (i > 0) z.p.c[i] = -0.5 * inner(F(3, e), X) / c;
      }
      const NParams n = z_of_X(sigma(1)(g.inverse()(sigma_P_minus())));
      auto n_size = [](int level, const NParams& q) {
        const Mat27 phi = gen_G(level, q.x).mat + gen_G(2 * level, q.p).mat;
        return expm_raw(phi).cwiseAbs().maxCoeff();
      };
      const double kappa = n_size(-1, z) * n_size(1, n) *
                           std::exp(std::fabs(std::log(0.25 * c)));
      min_floor = std::fmin(min_floor, std::numeric_limits<double>::epsilon() * kappa);
    } catch (const F4Error&) {
      ++other;
    }
  }
  std::mt19937_64 rng(10);
  int not_closed = 0;
  for (int s = 0; s < 1000; ++s) {
    const NParams n{random_octonion(rng, 0.5), random_imag(rng, 0.5)};
    const double t = std::uniform_real_distribution<double>(-1, 1)(rng);
    const GroupElement g = sigma(1) * random_M(rng) * a_t(t) * n_plus(n);
    if (bruhat_classify(g) != Cell::Closed) ++not_closed;
  }
  const int attempted = open + ill + other;
  const bool ok = ill == 0 && other == 0 && over == 0 && m_fail == 0 && not_closed == 0;
  return {ok,
          fmt("open-cell round trips %d/%d below 1e-8 (max %.1e); %d ill-conditioned with "
              "|(gP-|sigma P-)|/|gP-| <= %.1e and rounding floor >= %.1e; %d other errors; closed %d; M check failures %d; "
              "sigma M A N+ not closed %d",
              open - over, attempted, res, ill, worst_ratio, ill ? min_floor : 0.0, other, closed, m_fail, not_closed)};
}

Result flag_space() {
  std::mt19937_64 rng(11);
  double s15 = 0;
  for (int s = 0; s < 1000; ++s) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    const double n = std::sqrt(norm_sq(x) + norm_sq(y));
    x = x / n;
    y = y / n;
    const auto [u, v] = s15_to(s15_from(x, y));
    s15 = std::fmax(s15, std::fmax(max_diff(u, x), max_diff(v, y)));
  }
  // 100 x 100 pairs per inequality from independent random words.
  const auto gs = random_words(300, 12);
  std::vector<JordanElement> H, Hp, N, N2;
  for (int i = 0; i < 100; ++i) {
    H.push_back(gs[i](E_(1)));
    Hp.push_back(gs[100 + i](E_(2)));
    N.push_back(gs[200 + i](P_minus()));
    N2.push_back(gs[(i * 37) % 300](P_minus()));
  }
  int v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double scale = norm_inf(N[j]);
      if (!(inner(H[i], N[j]) < 0)) ++v1;
      if (inner(Hp[i], N[j]) < -1e-9 * norm_inf(Hp[i]) * scale) ++v2;
      const double nn = inner(N2[i], N[j]);
      if (nn < -1e-9 * norm_inf(N2[i]) * scale) ++v3;
      // Equality exactly when the rays coincide.
      const JordanElement a = normalize_ray(N2[i]), b = normalize_ray(N[j]);
      const bool same = max_diff(a, b) < 1e-8 * std::fmax(1.0, norm_inf(a));
      const bool zero = std::fabs(inner(a, b)) < 1e-8 * std::fmax(1.0, norm_inf(a) * norm_inf(b));
      if (same != zero) ++v4;
    }
  const int violations = v1 + v2 + v3 + v4;
  return {s15 < 1e-10 && violations == 0,
          fmt("s15 round trip %.1e; violations H/N %d, H'/N %d, N/N %d, equality %d over 4 x 10^4 "
              "pairs",
              s15, v1, v2, v3, v4)};
}

Result harmonic_analysis() {
  const AlgebraElement H = gen_A(3, Octonion(1));
  const double trace_form = killing(H, H);
  const double formula = 3.0 * 24.0;  // -B(H, theta H) with theta H = -H
  const double kill_rel = std::fabs(trace_form - formula) / formula;
  std::mt19937_64 rng(13);
  double q = 0;
  for (int s = 0; s < 100; ++s) {
    const Octonion x = random_octonion(rng), p = random_imag(rng);
    q = std::fmax(q, std::fabs(q_form(gen_G(-1, x)) - 2 * norm_sq(x)) / (2 * norm_sq(x)));
    q = std::fmax(q, std::fabs(q_form(gen_G(-2, p)) - 2 * norm_sq(p)) / (2 * norm_sq(p)));
  }
  double e = 0;
  for (int s = 0; s < 1000; ++s) {
    const Octonion x = random_octonion(rng), p = random_imag(rng);
    const std::complex<double> lam(std::uniform_real_distribution<double>(-10, 30)(rng),
                                   std::uniform_real_distribution<double>(-5, 5)(rng));
    const auto want = std::exp(lam / 2.0 * H_nbar(x, p));
    e = std::fmax(e, std::abs(exp_lambda_H(x, p, {lam}) - want) / std::abs(want));
  }
  double c = 0;
  for (double l : {2.0, 4.0, 6.0, 10.0, 22.0})
    c = std::fmax(c, std::abs(c_quadrature({l}) / c_gamma({l}) - 1.0));
  double sph = 0;
  for (std::complex<double> l : {std::complex<double>(22), {2}, {10}, {0, 3}, {5, -1}})
    sph = std::fmax(sph, std::abs(spherical({l}, 0.0) - 1.0));
  const bool ok = kill_rel < 1e-6 && q < 1e-8 && e < 1e-9 && c < 1e-5 && sph < 1e-4;
  return {ok, fmt("Killing %.1e rel, Q form %.1e, e^lambda(H) %.1e, c-function %.1e rel, "
                  "spherical at 1 %.1e",
                  kill_rel, q, e, c, sph)};
}

int run_status(const std::string& cmd) {
  const int s = std::system(cmd.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

Result cli(const std::string& fixtures, const std::string& exe) {
  set_tolerances(Tolerances{});
  std::ifstream in(fixtures);
  int n = 0, mismatched = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++n;
    const json rec = json::parse(line);
    json got;
    try {
      got = fixture_expect(rec.at("word"));
    } catch (const F4Error& err) {
      got = json{{"error", err.kind()}};
    }
    if (got.dump() != rec.at("expect").dump()) ++mismatched;
  }
  int gauss_code = -1, keps_code = -1, replay_code = -1;
  if (!exe.empty()) {
    gauss_code = run_status(exe + " gauss --word S1 >/dev/null 2>&1");
    keps_code = run_status(exe + " keps --word 'A1(-1.5707963267948966;1)' >/dev/null 2>&1");
    replay_code = run_status(exe + " selftest --fixtures '" + fixtures + "' >/dev/null 2>&1");
  }
  const bool ok = n >= 30 && mismatched == 0 && gauss_code == 2 && keps_code == 2 && replay_code == 0;
  return {ok, fmt("%d fixtures, %d mismatched; CLI exit codes gauss(S1) %d, keps(g0) %d, "
                  "selftest replay %d",
                  n, mismatched, gauss_code, keps_code, replay_code)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string fixtures, exe;
  app.add_option("--fixtures", fixtures, "Golden fixture file")->required();
  app.add_option("--cli", exe, "Path to the f4decomp executable");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 when there is no runtime bound
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "octonion identities", 5, octonions},
      {2, "generator verification", 0, generators},
      {3, "algebra structure", 0, algebra},
      {4, "Iwasawa round trip", 60, iwasawa_round_trip},
      {5, "K_eps Iwasawa", 0, keps_round_trip},
      {6, "Matsuki", 0, matsuki_cells},
      {7, "Gauss / Bruhat", 0, gauss_round_trip},
      {8, "flag space", 0, flag_space},
      {9, "harmonic analysis", 120, harmonic_analysis},
      {10, "CLI fixtures and exit codes", 0, [&] { return cli(fixtures, exe); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      r.pass = false;
      r.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    failed += !r.pass;
    std::printf("[%s] %2d %-28s %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", c.id, c.name,
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
