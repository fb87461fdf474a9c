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

#include <doctest.h>

#include <cmath>

#include "f4/batch.hpp"
#include "f4/wordlang.hpp"

using namespace f4;

namespace {

std::vector<std::string> words(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(print_word(random_word(rng)));
  out.push_back("A3(0.5)");  // syntax error
  out.push_back("A3(0.5;2)");  // not a unit
  return out;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  MESSAGE("threads: " << batch_threads());
  std::vector<std::string> err_s, err_p;
  const auto ws = words(120, 91);
  const auto gs = eval_batch(ws, Exec::Serial, &err_s);
  const auto gp = eval_batch(ws, Exec::Parallel, &err_p);
  REQUIRE(gs.size() == gp.size());
  CHECK(err_s == err_p);
  CHECK(err_s[120] == "SyntaxError");
  CHECK(err_s[121] == "DomainError");
  for (std::size_t i = 0; i < gs.size(); ++i) CHECK(gs[i].mat() == gp[i].mat());

  std::vector<Mat27> mats;
  for (const auto& g : gs) mats.push_back(g.mat());
  CHECK(verify_batch(mats, Exec::Serial) == verify_batch(mats, Exec::Parallel));

  for (Decomposition d : {Decomposition::Iwasawa, Decomposition::KEps, Decomposition::Matsuki,
                          Decomposition::Gauss}) {
    const auto s = decompose_batch(d, gs, Exec::Serial);
    const auto p = decompose_batch(d, gs, Exec::Parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].ok == p[i].ok);
      CHECK(s[i].error == p[i].error);
      CHECK(s[i].t == p[i].t);
      CHECK(s[i].residual == p[i].residual);
    }
  }
}

TEST_CASE("Iwasawa batch on the identity words") {
  const std::vector<GroupElement> gs(8);
  for (const Outcome& o : decompose_batch(Decomposition::Iwasawa, gs, Exec::Parallel)) {
    CHECK(o.ok);
    CHECK(o.t == 0.0);
  }
}

TEST_CASE("spherical grid") {
  const std::vector<double> ts = {0.0, 0.25, 0.5, 1.0};
  const QuadratureSpec spec{1e-6, 15};
  const auto s = spherical_batch({10.0}, ts, spec, Exec::Serial);
  const auto p = spherical_batch({10.0}, ts, spec, Exec::Parallel);
  CHECK(s == p);
  CHECK(std::abs(s[0] - 1.0) < 1e-5);
  // phi_lambda(a_t) decreases in |t| for real lambda.
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i].real() < s[i - 1].real());
}
