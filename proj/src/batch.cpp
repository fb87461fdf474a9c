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

#include "f4/batch.hpp"

#include <cmath>
#include <limits>

#ifdef F4_HAVE_OPENMP
#include <omp.h>
#endif

#include "f4/errors.hpp"
#include "f4/tolerance.hpp"
#include "f4/wordlang.hpp"

namespace f4 {

namespace {

// Runs body(i) for i in [0, n). Bodies write only to slot i.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body body) {
  const auto count = static_cast<long>(n);
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
#ifdef F4_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) body(i);
#else
  for (long i = 0; i < count; ++i) body(i);
#endif
}

// Function-local statics in the kernels are built once before the
// parallel region so that threads do not queue on their initialization.
void warm_up() {
  static const bool done = [] {
    (void)tolerances();
    (void)gauss(a_t(0.1) * exp_N(-1, Octonion(0.1), Octonion()));
    (void)d4_rotate(1, Octonion(1), Octonion(1));
    return true;
  }();
  (void)done;
}

Outcome decompose_one(Decomposition d, const GroupElement& g) {
  Outcome o;
  try {
    switch (d) {
      case Decomposition::Iwasawa: {
        const IwasawaFactors f = iwasawa(g);
        o.t = f.t;
        o.residual = f.residual;
        break;
      }
      case Decomposition::KEps: {
        const KEpsFactors f = keps_iwasawa(g);
        o.t = f.t;
        o.residual = f.residual;
        break;
      }
      case Decomposition::Matsuki: {
        const MatsukiFactors f = matsuki(g);
        o.t = f.t;
        o.residual = f.residual;
        break;
      }
      case Decomposition::Gauss: {
        const GaussFactors f = gauss(g);
        o.t = f.t;
        o.residual = f.residual;
        break;
      }
    }
    o.ok = true;
  } catch (const F4Error& e) {
    o.error = e.kind();
  }
  return o;
}

}  // namespace

int batch_threads() {
#ifdef F4_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> verify_batch(const std::vector<Mat27>& mats, Exec exec) {
  std::vector<double> out(mats.size());
  for_each_index(mats.size(), exec, [&](long i) { out[i] = verify(mats[i]); });
  return out;
}

std::vector<Outcome> decompose_batch(Decomposition d, const std::vector<GroupElement>& gs,
                                     Exec exec) {
  warm_up();
  std::vector<Outcome> out(gs.size());
  for_each_index(gs.size(), exec, [&](long i) { out[i] = decompose_one(d, gs[i]); });
  return out;
}

std::vector<GroupElement> eval_batch(const std::vector<std::string>& words, Exec exec,
                                     std::vector<std::string>* errors) {
  warm_up();
  std::vector<GroupElement> out(words.size());
  std::vector<std::string> err(words.size());
  for_each_index(words.size(), exec, [&](long i) {
    try {
      out[i] = eval_word(words[i]);
    } catch (const F4Error& e) {
      err[i] = e.kind();
    }
  });
  if (errors) *errors = std::move(err);
  return out;
}

std::vector<std::complex<double>> spherical_batch(SpectralParam lam, const std::vector<double>& ts,
                                                  const QuadratureSpec& spec, Exec exec) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  (void)spherical(SpectralParam{kRhoAlpha}, 0.0, spec);
  std::vector<std::complex<double>> out(ts.size());
  for_each_index(ts.size(), exec, [&](long i) {
    try {
      out[i] = spherical(lam, ts[i], spec);
    } catch (const NonConvergent&) {
      out[i] = {nan, nan};
    }
  });
  return out;
}

}  // namespace f4
