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

#include "f4/tolerance.hpp"

#include <cstdlib>
#include <stdexcept>

namespace f4 {

namespace {

Tolerances& storage() {
  static Tolerances t = [] {
    const char* env = std::getenv("F4DECOMP_TOL");
    return env && *env ? parse_tolerances(env) : Tolerances{};
  }();
  return t;
}

double parse_positive(const std::string& s) {
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size() || !(v > 0.0))
    throw std::invalid_argument("tolerance must be a positive number: " + s);
  return v;
}

}  // namespace

const Tolerances& tolerances() { return storage(); }

void set_tolerances(const Tolerances& t) { storage() = t; }

Tolerances parse_tolerances(const std::string& spec) {
  Tolerances t;
  const auto comma = spec.find(',');
  t.verify = parse_positive(spec.substr(0, comma));
  if (comma != std::string::npos) t.cell = parse_positive(spec.substr(comma + 1));
  return t;
}

}  // namespace f4
