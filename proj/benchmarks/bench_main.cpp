// Copyright 2026 The hbsiegel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include <vector>

#include <benchmark/benchmark.h>

#include "hbsiegel/modembed.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/sampling.hpp"
#include "hbsiegel/symrep.hpp"
#include "hbsiegel/torsion.hpp"

namespace {

using namespace hbsiegel;

NumberField field_of_degree(int64_t g) {
  std::vector<RatVector> id;
  RatVector f;
  if (g == 2) f = {-1, -1, 1};
  else f = {1, -2, -1, 1};
  for (std::size_t i = 0; i < f.size() - 1; ++i) {
    RatVector e(f.size() - 1, Rational(0));
    e[i] = 1;
    id.push_back(e);
  }
  return NumberField::create(f, id);
}

void BM_FieldCreate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(field_of_degree(state.range(0)));
}
BENCHMARK(BM_FieldCreate)->Arg(2)->Arg(3);

void BM_IotaBar(benchmark::State& state) {
  const NumberField nf = field_of_degree(state.range(0));
  Rng rng(trial_seed(1, 0));
  const HBMatrix h = random_sl_dmo(nf, rng);
  for (auto _ : state) benchmark::DoNotOptimize(iota_bar(h));
}
BENCHMARK(BM_IotaBar)->Arg(2)->Arg(3);

void BM_Equivariance(benchmark::State& state) {
  const NumberField nf = field_of_degree(state.range(0));
  Rng rng(trial_seed(2, 0));
  const HBMatrix h = random_sl_dmo(nf, rng);
  const HBPoint tau = random_upper_point(nf, rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_equivariance(h, tau));
}
BENCHMARK(BM_Equivariance)->Arg(2)->Arg(3);

void BM_EmbeddingData(benchmark::State& state) {
  const NumberField nf = field_of_degree(3);
  for (auto _ : state) benchmark::DoNotOptimize(compute_embedding_data(nf, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EmbeddingData)->Arg(64)->Arg(128)->Arg(256);

void BM_TransportAllTorsion(benchmark::State& state) {
  const NumberField nf = field_of_degree(state.range(0));
  const auto points = enumerate_hb_torsion(nf, 3);
  for (auto _ : state)
    for (const auto& t : points) benchmark::DoNotOptimize(transport(t));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * points.size()));
}
BENCHMARK(BM_TransportAllTorsion)->Arg(2)->Arg(3);

void BM_CartesianCheck(benchmark::State& state) {
  const NumberField nf = field_of_degree(3);
  Rng rng(trial_seed(3, 0));
  const HBTorsionPoint t = random_hb_torsion(nf, 3, rng);
  const HBPoint tau = random_upper_point(nf, rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_cartesian_transport(t, tau));
}
BENCHMARK(BM_CartesianCheck);

void BM_SymAction(benchmark::State& state) {
  const std::size_t g = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  Rng rng(trial_seed(4, 0));
  const RatMatrix m = random_invertible(2 * g, rng, 2);
  const SymTensor v = random_tensor(g, k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sym_action(m, v));
}
BENCHMARK(BM_SymAction)->Args({1, 6})->Args({2, 4})->Args({3, 3})->Args({3, 6});

}  // namespace

BENCHMARK_MAIN();
