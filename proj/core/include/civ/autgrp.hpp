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

#include <chrono>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "civ/graph.hpp"
#include "civ/report.hpp"

namespace civ {

using Perm = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
/// (p * q)[x] = p[q[x]]  (q applied first).
Perm compose_perm(const Perm& p, const Perm& q);
bool is_identity_perm(const Perm& p);

/// Permutation group with a base and strong generating set, maintained by
/// deterministic incremental Schreier-Sims. Gives exact membership tests
/// and the exact group order as product of fundamental orbit lengths.
class PermGroup {
 public:
  explicit PermGroup(int degree);
  /// Forces the chain to start with the given base points, so the order of
  /// the pointwise stabilizer of a prefix can be read off the transversals.
  PermGroup(int degree, const std::vector<int>& initial_base);

  int degree() const { return degree_; }
  /// Sifts p into the chain; returns false if p was already a member.
  bool add_generator(const Perm& p);
  bool contains(const Perm& p) const;
  BigInt order() const;
  /// Product of transversal sizes from the given level down: the order of
  /// the pointwise stabilizer of base[0..level-1].
  BigInt stabilizer_order(int level) const;
  const std::vector<Perm>& strong_generators() const { return sgens_; }
  std::vector<int> base() const;
  /// Bumped every time the generating set grows.
  std::uint64_t version() const { return version_; }

  /// Orbit partition of [0, n) under the strong generators that fix the
  /// given points pointwise. (Generator-level filter: a subset of the
  /// actual stabilizer, so the orbits may be finer; never coarser.)
  std::vector<int> orbit_roots_fixing(const std::vector<int>& fixed) const;

 private:
  struct Level {
    int base = -1;
    std::vector<int> tr_pos;   // point -> index into tr, -1 outside orbit
    std::vector<Perm> tr;      // transversal perms u with u[base] = point
    std::vector<int> orbit;    // discovery order
  };

  int degree_;
  std::vector<Perm> sgens_;
  std::vector<int> sgen_level_;  // number of leading base points fixed
  std::vector<Level> levels_;
  std::uint64_t version_ = 0;

  void rebuild_orbit(int level);
  // Returns the residual and the level where sifting stopped.
  std::pair<Perm, int> sift(Perm p, int from) const;
  void insert_strong_generator(Perm p, int min_level);
  void close_level(int level);
};

BigInt group_order(int degree, const std::vector<Perm>& gens);

/// Ordered partition of the vertex set; cells kept sorted ascending.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;
  bool discrete() const;
  std::vector<int> cell_sizes() const;
};

OrderedPartition unit_partition(int n);

/// Coarsest equitable refinement under iterated neighbor-count splitting;
/// deterministic (fragments ordered by count) and idempotent.
OrderedPartition refine(const InvolutionGraph& g, OrderedPartition pi);

/// pi with v split off at the front of its cell, then refined.
OrderedPartition individualize_and_refine(const InvolutionGraph& g,
                                          const OrderedPartition& pi, int v);

struct AutResult {
  PermGroup group;
  bool timed_out = false;
  std::size_t nodes = 0;
};

/// Full automorphism group by individualization-refinement backtracking
/// with orbit pruning. Optional seed of known automorphisms tightens the
/// pruning; results are identical with or without it. Deterministic given
/// the first-smallest-cell target rule.
AutResult automorphism_group(
    const InvolutionGraph& g,
    const std::vector<Perm>* seed = nullptr,
    std::chrono::milliseconds timeout = std::chrono::minutes(10));

/// |PGammaL_2(q)| = f q (q^2 - 1).
BigInt pgammal_order(std::uint32_t q, std::uint32_t f);

/// ((q-1)!)^(q+1) (q+1)!, the order of Sym(q-1) wr Sym(q+1).
BigInt wreath_order(std::uint32_t q);

struct Theorem1Options {
  std::chrono::milliseconds timeout = std::chrono::minutes(10);
  /// Even q: run the direct search only when |X| is at most this size.
  int even_direct_search_max = 60;
};

/// Odd q: |Aut(C(L,X))| equals f q (q^2-1) and every PGammaL generator is a
/// graph automorphism. Even q: q+1 components, each complete on q-1
/// vertices, with the wreath order confirmed by direct search on small X.
/// q = 5 is reported in measurement mode (see the anomaly note in details).
LemmaReport verify_theorem1(const Field& F, const Theorem1Options& opts = {});

}  // namespace civ
