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

#include <cmath>
#include <random>

#include "f4/liegroup.hpp"

namespace f4::test {

inline double max_diff(const Mat27& a, const Mat27& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double max_diff(const JordanElement& a, const JordanElement& b) {
  return (a.vec() - b.vec()).cwiseAbs().maxCoeff();
}

inline double max_diff(const Octonion& a, const Octonion& b) { return max_abs(a - b); }

inline JordanElement random_jordan(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Vec27 v;
  for (int i = 0; i < kDim; ++i) v[i] = n(rng);
  return JordanElement(v);
}

}  // namespace f4::test
