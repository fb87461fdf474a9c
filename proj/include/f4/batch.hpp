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

// Batch kernels. Each has a serial reference and an OpenMP version that
// must agree with it element for element.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "f4/decomp.hpp"
#include "f4/harmonic.hpp"

namespace f4 {

enum class Exec { Serial, Parallel };

/// Threads the parallel kernels will use (1 without OpenMP).
int batch_threads();

enum class Decomposition { Iwasawa, KEps, Matsuki, Gauss };

struct Outcome {
  bool ok = false;
  double t = 0;
  double residual = 0;
  std::string error;  // error kind when !ok
};

std::vector<double> verify_batch(const std::vector<Mat27>& mats, Exec exec);

std::vector<Outcome> decompose_batch(Decomposition d, const std::vector<GroupElement>& gs,
                                     Exec exec);

/// Evaluates words; a failed word yields the identity and its error kind.
std::vector<GroupElement> eval_batch(const std::vector<std::string>& words, Exec exec,
                                     std::vector<std::string>* errors = nullptr);

/// phi_lambda(a_t) on a grid of t. NaN where the quadrature did not converge.
std::vector<std::complex<double>> spherical_batch(SpectralParam lam, const std::vector<double>& ts,
                                                  const QuadratureSpec& spec, Exec exec);

}  // namespace f4
