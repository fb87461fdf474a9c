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

// Serial reference against the OpenMP kernels. Arg is the batch size.

#include <benchmark/benchmark.h>

#include "f4/batch.hpp"
#include "f4/wordlang.hpp"

namespace {

using namespace f4;

std::vector<GroupElement> elements(int n) {
  std::mt19937_64 rng(5);
  std::vector<GroupElement> out;
  for (int i = 0; i < n; ++i) out.push_back(eval_word(random_word(rng)));
  return out;
}

std::vector<std::string> words(int n) {
  std::mt19937_64 rng(6);
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(print_word(random_word(rng)));
  return out;
}

template <Exec E>
void BM_Eval(benchmark::State& state) {
  const auto ws = words(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_batch(ws, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_Verify(benchmark::State& state) {
  std::vector<Mat27> mats;
  for (const auto& g : elements(static_cast<int>(state.range(0)))) mats.push_back(g.mat());
  for (auto _ : state) benchmark::DoNotOptimize(verify_batch(mats, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E, Decomposition D>
void BM_Decompose(benchmark::State& state) {
  const auto gs = elements(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_batch(D, gs, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Exec E>
void BM_Spherical(benchmark::State& state) {
  std::vector<double> ts;
  for (int i = 0; i < state.range(0); ++i) ts.push_back(0.1 * i);
  for (auto _ : state) benchmark::DoNotOptimize(spherical_batch({10.0}, ts, {1e-6, 15}, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Eval<Exec::Serial>)->Arg(256);
BENCHMARK(BM_Eval<Exec::Parallel>)->Arg(256);
BENCHMARK(BM_Verify<Exec::Serial>)->Arg(256);
BENCHMARK(BM_Verify<Exec::Parallel>)->Arg(256);
BENCHMARK(BM_Decompose<Exec::Serial, Decomposition::Iwasawa>)->Arg(256);
BENCHMARK(BM_Decompose<Exec::Parallel, Decomposition::Iwasawa>)->Arg(256);
BENCHMARK(BM_Decompose<Exec::Serial, Decomposition::Gauss>)->Arg(256);
BENCHMARK(BM_Decompose<Exec::Parallel, Decomposition::Gauss>)->Arg(256);
BENCHMARK(BM_Spherical<Exec::Serial>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spherical<Exec::Parallel>)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
