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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "civ/field.hpp"
#include "civ/psl2.hpp"

namespace civ {

/// Fixed-size bitset sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  int count() const;
  int intersection_count(const Bitset& o) const;
  std::vector<int> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// The commuting involution graph C(L,X): vertex set X, edges between
/// distinct commuting involutions. Symmetric irreflexive adjacency held as
/// bitset rows plus adjacency lists; immutable after build.
struct InvolutionGraph {
  const Field* field = nullptr;
  VertexSet verts;
  int n = 0;
  std::vector<Bitset> adj;
  std::vector<std::vector<int>> nbrs;

  bool adjacent(int i, int j) const { return adj[i].test(j); }
  int degree(int i) const { return static_cast<int>(nbrs[i].size()); }
  std::size_t edge_count() const;
};

/// Distance partition about a center vertex. Discs cover the center's
/// component; vertices in other components are reported as unreachable.
struct DiscDecomposition {
  int center = 0;
  std::vector<std::vector<int>> discs;  // discs[i] = vertices at distance i
  int eccentricity = 0;
  std::vector<int> unreachable;
};

/// O(n^2) pairwise build. Odd q: vertex degree is checked against
/// (q-1)/2 or (q+1)/2 by congruence class. q > 3 required.
InvolutionGraph build_graph(const Field& F);

/// Same adjacency under a relabeling pi (new id = pi[old id]).
/// The vertex table keeps its original order; intended for
/// relabeling-invariance checks only.
InvolutionGraph relabel_graph(const InvolutionGraph& g,
                              const std::vector<int>& pi);

std::vector<int> bfs_distances(const InvolutionGraph& g, int src);  // -1 = unreachable
DiscDecomposition bfs_discs(const InvolutionGraph& g, int center);

std::vector<int> common_neighbors(const InvolutionGraph& g, int x, int y);

struct FourCycleResult {
  bool four_cycle_free = true;
  std::array<int, 4> witness{};  // x, u, y, w with u,w common neighbors of x,y
};
FourCycleResult check_four_cycle_free(const InvolutionGraph& g);

std::vector<std::vector<int>> components(const InvolutionGraph& g);

/// DIMACS undirected format: "p edge n m" then 1-indexed "e u v" lines,
/// u < v, ascending. Byte-stable for a given graph.
void write_dimacs(const InvolutionGraph& g, std::ostream& os);

}  // namespace civ
