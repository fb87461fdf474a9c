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

#include <string>

namespace f4 {

struct Tolerances {
  double verify = 1e-8;  // automorphism residual accepted by constructors
  double cell = 1e-9;    // relative threshold for vanishing pairings
};

/// Process-wide tolerances. Initialized from F4DECOMP_TOL ("VERIFY[,CELL]")
/// on first use.
const Tolerances& tolerances();
void set_tolerances(const Tolerances& t);

/// Parses "VERIFY[,CELL]"; throws std::invalid_argument on bad input.
Tolerances parse_tolerances(const std::string& spec);

}  // namespace f4
