// Copyright 2026 The civ authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "civ/autgrp.hpp"
#include "civ/verify.hpp"

namespace {

civ::Field field_for(std::uint32_t q) {
  std::uint32_t p = q, f = 1;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  f = 0;
  while (q > 1) {
    q /= p;
    ++f;
  }
  return civ::Field(p, f);
}

void BM_BuildGraph(benchmark::State& state) {
  civ::Field F = field_for(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(civ::build_graph(F).edge_count());
}
BENCHMARK(BM_BuildGraph)->Arg(13)->Arg(31)->Arg(73);

void BM_BfsAllSources(benchmark::State& state) {
  civ::Field F = field_for(static_cast<std::uint32_t>(state.range(0)));
  civ::InvolutionGraph g = civ::build_graph(F);
  for (auto _ : state)
    for (int v = 0; v < g.n; ++v)
      benchmark::DoNotOptimize(civ::bfs_distances(g, v));
}
BENCHMARK(BM_BfsAllSources)->Arg(13)->Arg(31);

void BM_Fingerprints(benchmark::State& state) {
  civ::Field F = field_for(static_cast<std::uint32_t>(state.range(0)));
  civ::InvolutionGraph g = civ::build_graph(F);
  int t = g.verts.id_of(civ::base_vertex(F));
  civ::DiscDecomposition dd = civ::bfs_discs(g, t);
  std::vector<int> owners = dd.discs[2];
  for (auto _ : state)
    benchmark::DoNotOptimize(
        civ::fingerprint_owners(g, dd.discs[1], owners));
}
BENCHMARK(BM_Fingerprints)->Arg(29)->Arg(73);

void BM_AutSearch(benchmark::State& state) {
  civ::Field F = field_for(static_cast<std::uint32_t>(state.range(0)));
  civ::InvolutionGraph g = civ::build_graph(F);
  for (auto _ : state)
    benchmark::DoNotOptimize(civ::automorphism_group(g).group.order());
}
BENCHMARK(BM_AutSearch)->Arg(7)->Arg(13)->Arg(17);

}  // namespace

BENCHMARK_MAIN();
