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

#include "civ/graph.hpp"

#include <bit>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace civ {

int Bitset::count() const {
  int c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

int Bitset::intersection_count(const Bitset& o) const {
  int c = 0;
  for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
  return c;
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::size_t InvolutionGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& row : nbrs) m += row.size();
  return m / 2;
}

InvolutionGraph build_graph(const Field& F) {
  if (F.q() <= 3) throw std::invalid_argument("build_graph: q > 3 required");
  InvolutionGraph g;
  g.field = &F;
  g.verts = involution_class(F);
  g.n = g.verts.size();
  g.adj.assign(g.n, Bitset(g.n));
  g.nbrs.assign(g.n, {});
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (commutes_in_L(F, g.verts.mats[i], g.verts.mats[j])) {
        g.adj[i].set(j);
        g.adj[j].set(i);
        g.nbrs[i].push_back(j);
        g.nbrs[j].push_back(i);
      }
    }
  }
  if (F.odd()) {
    int expect = F.q() % 4 == 1 ? (F.q() - 1) / 2 : (F.q() + 1) / 2;
    for (int i = 0; i < g.n; ++i)
      if (g.degree(i) != expect)
        throw std::logic_error("build_graph: degree regularity violated");
  }
  return g;
}

InvolutionGraph relabel_graph(const InvolutionGraph& g,
                              const std::vector<int>& pi) {
  InvolutionGraph h;
  h.field = g.field;
  h.verts = g.verts;
  h.n = g.n;
  h.adj.assign(g.n, Bitset(g.n));
  h.nbrs.assign(g.n, {});
  for (int i = 0; i < g.n; ++i) {
    for (int j : g.nbrs[i]) {
      h.adj[pi[i]].set(pi[j]);
      h.nbrs[pi[i]].push_back(pi[j]);
    }
  }
  return h;
}

std::vector<int> bfs_distances(const InvolutionGraph& g, int src) {
  std::vector<int> dist(g.n, -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.nbrs[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DiscDecomposition bfs_discs(const InvolutionGraph& g, int center) {
  if (center < 0 || center >= g.n)
    throw std::out_of_range("bfs_discs: center out of range");
  DiscDecomposition dd;
  dd.center = center;
  std::vector<int> dist = bfs_distances(g, center);
  for (int v = 0; v < g.n; ++v) {
    if (dist[v] < 0) {
      dd.unreachable.push_back(v);
      continue;
    }
    if (dist[v] >= static_cast<int>(dd.discs.size()))
      dd.discs.resize(dist[v] + 1);
    dd.discs[dist[v]].push_back(v);
  }
  dd.eccentricity = static_cast<int>(dd.discs.size()) - 1;
  return dd;
}

std::vector<int> common_neighbors(const InvolutionGraph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("common_neighbors: x == y");
  std::vector<int> out;
  const auto& wx = g.adj[x].words();
  const auto& wy = g.adj[y].words();
  for (size_t w = 0; w < wx.size(); ++w) {
    std::uint64_t both = wx[w] & wy[w];
    while (both) {
      int bit = std::countr_zero(both);
      out.push_back(static_cast<int>(w) * 64 + bit);
      both &= both - 1;
    }
  }
  return out;
}

FourCycleResult check_four_cycle_free(const InvolutionGraph& g) {
  FourCycleResult r;
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      if (g.adj[x].intersection_count(g.adj[y]) >= 2) {
        std::vector<int> cn = common_neighbors(g, x, y);
        r.four_cycle_free = false;
        r.witness = {x, cn[0], y, cn[1]};
        return r;
      }
    }
  }
  return r;
}

std::vector<std::vector<int>> components(const InvolutionGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v : g.nbrs[u])
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

void write_dimacs(const InvolutionGraph& g, std::ostream& os) {
  os << "p edge " << g.n << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.n; ++i)
    for (int j : g.nbrs[i])
      if (i < j) os << "e " << i + 1 << ' ' << j + 1 << '\n';
}

}  // namespace civ
