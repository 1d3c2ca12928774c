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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "civ/graph.hpp"

using namespace civ;

namespace {

// hand-built fixture, not a C(L,X) instance
InvolutionGraph make_fixture(int n, const std::vector<std::pair<int, int>>& edges) {
  InvolutionGraph g;
  g.n = n;
  g.adj.assign(n, Bitset(n));
  g.nbrs.assign(n, {});
  for (auto [u, v] : edges) {
    g.adj[u].set(v);
    g.adj[v].set(u);
    g.nbrs[u].push_back(v);
    g.nbrs[v].push_back(u);
  }
  return g;
}

}  // namespace

TEST_CASE("bitset count and intersection") {
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(129);
  b.set(70);
  CHECK(a.count() == 3);
  CHECK(a.intersection_count(b) == 2);
  CHECK(a.to_vector() == std::vector<int>{0, 64, 129});
  a.reset(64);
  CHECK(a.count() == 2);
  CHECK(a.test(129));
  CHECK_FALSE(a.test(64));
}

TEST_CASE("q=7 graph shape") {
  Field F(7, 1);
  InvolutionGraph g = build_graph(F);
  CHECK(g.n == 21);
  CHECK(g.edge_count() == 42);
  for (int i = 0; i < g.n; ++i) {
    CHECK(g.degree(i) == 4);
    CHECK_FALSE(g.adjacent(i, i));
    for (int j : g.nbrs[i]) CHECK(g.adjacent(j, i));
  }
}

TEST_CASE("q=13 graph shape") {
  Field F(13, 1);
  InvolutionGraph g = build_graph(F);
  CHECK(g.n == 91);
  CHECK(g.edge_count() == 273);  // 91 * 6 / 2
  for (int i = 0; i < g.n; ++i) CHECK(g.degree(i) == 6);
}

TEST_CASE("disc sizes at the base vertex") {
  auto disc_sizes = [](std::uint32_t p) {
    Field F(p, 1);
    InvolutionGraph g = build_graph(F);
    int t = g.verts.id_of(base_vertex(F));
    REQUIRE(t >= 0);
    DiscDecomposition dd = bfs_discs(g, t);
    std::vector<int> sizes;
    for (const auto& d : dd.discs) sizes.push_back(static_cast<int>(d.size()));
    return sizes;
  };
  CHECK(disc_sizes(7) == std::vector<int>{1, 4, 8, 8});
  CHECK(disc_sizes(11) == std::vector<int>{1, 6, 24, 24});
  CHECK(disc_sizes(19) == std::vector<int>{1, 10, 80, 80});
}

TEST_CASE("bfs distances agree with disc membership") {
  Field F(11, 1);
  InvolutionGraph g = build_graph(F);
  int t = g.verts.id_of(base_vertex(F));
  auto dist = bfs_distances(g, t);
  DiscDecomposition dd = bfs_discs(g, t);
  for (std::size_t i = 0; i < dd.discs.size(); ++i)
    for (int v : dd.discs[i]) CHECK(dist[v] == static_cast<int>(i));
  CHECK(dd.eccentricity == 3);
  CHECK(dd.unreachable.empty());
}

TEST_CASE("four cycle detection on fixtures") {
  // K4 contains 4-cycles
  InvolutionGraph k4 = make_fixture(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  FourCycleResult r = check_four_cycle_free(k4);
  CHECK_FALSE(r.four_cycle_free);
  auto [x, u, y, w] = r.witness;
  CHECK(k4.adjacent(x, u));
  CHECK(k4.adjacent(u, y));
  CHECK(k4.adjacent(y, w));
  CHECK(k4.adjacent(w, x));
  // a 5-cycle has none
  InvolutionGraph c5 =
      make_fixture(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(check_four_cycle_free(c5).four_cycle_free);
}

TEST_CASE("odd q graphs are four-cycle free with common neighbors <= 1") {
  Field F(3, 2);  // GF(9)
  InvolutionGraph g = build_graph(F);
  CHECK(check_four_cycle_free(g).four_cycle_free);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      CHECK(common_neighbors(g, i, j).size() <= 1);
}

TEST_CASE("even q components are q+1 copies of K_{q-1}") {
  Field F(2, 2);
  InvolutionGraph g = build_graph(F);
  auto comps = components(g);
  CHECK(comps.size() == 5);
  for (const auto& comp : comps) {
    CHECK(comp.size() == 3);
    for (int u : comp)
      for (int v : comp)
        if (u != v) CHECK(g.adjacent(u, v));
  }
  Field F8(2, 3);
  auto comps8 = components(build_graph(F8));
  CHECK(comps8.size() == 9);
  for (const auto& comp : comps8) CHECK(comp.size() == 7);
}

TEST_CASE("q=13 graph is connected") {
  Field F(13, 1);
  InvolutionGraph g = build_graph(F);
  CHECK(components(g).size() == 1);
}

TEST_CASE("q=5 graph is five disjoint triangles") {
  Field F(5, 1);
  InvolutionGraph g = build_graph(F);
  auto comps = components(g);
  CHECK(comps.size() == 5);
  for (const auto& comp : comps) CHECK(comp.size() == 3);
}

TEST_CASE("relabeling preserves adjacency") {
  Field F(7, 1);
  InvolutionGraph g = build_graph(F);
  std::vector<int> pi(g.n);
  std::iota(pi.begin(), pi.end(), 0);
  std::mt19937_64 rng(7);
  std::shuffle(pi.begin(), pi.end(), rng);
  InvolutionGraph h = relabel_graph(g, pi);
  CHECK(h.n == g.n);
  CHECK(h.edge_count() == g.edge_count());
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      CHECK(g.adjacent(i, j) == h.adjacent(pi[i], pi[j]));
}

TEST_CASE("dimacs export is byte stable with the documented header") {
  Field F(7, 1);
  InvolutionGraph g = build_graph(F);
  std::ostringstream a, b;
  write_dimacs(g, a);
  write_dimacs(g, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 13) == "p edge 21 42\n");
  // every line u < v, 1-indexed
  std::istringstream in(a.str());
  std::string tag;
  in >> tag >> tag >> tag >> tag;
  int u, v, lines = 0;
  char e;
  while (in >> e >> u >> v) {
    CHECK(e == 'e');
    CHECK(u >= 1);
    CHECK(u < v);
    CHECK(v <= 21);
    ++lines;
  }
  CHECK(lines == 42);
}
