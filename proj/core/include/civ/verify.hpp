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

#include <vector>

#include "civ/graph.hpp"
#include "civ/report.hpp"

namespace civ {

/// d(x,y) <= 2 test without BFS, distinct x,y, odd q: xy has two distinct
/// eigenvalues over GF(q) iff tr(xy)^2 - 4 is a nonzero square, and the
/// two-distinct-eigenvalues condition characterizes d <= 2 (directly for
/// q = 1 mod 4, negated for q = 3 mod 4).
bool distance_le2_by_trace(const Field& F, const Mat2& x, const Mat2& y);

/// The separating invariant E_v = Delta_2(v) /\ Delta_1(t), stored as a
/// bitmask over positions in the sorted Delta_1(t) list.
struct Fingerprint {
  int owner = 0;
  Bitset mask;  // width |Delta_1(t)|
};

/// Fingerprints for the given owner vertices, masks over delta1 (sorted
/// vertex ids). Fast path via the trace criterion.
std::vector<Fingerprint> fingerprint_owners(const InvolutionGraph& g,
                                            const std::vector<int>& delta1,
                                            const std::vector<int>& owners);

/// Explicit disc sets of t against BFS, both congruence classes.
/// q = 1 mod 4 below 17 is measured, not asserted.
LemmaReport verify_disc_formulas(const InvolutionGraph& g);

/// No pair of vertices with two common neighbors; wraps
/// check_four_cycle_free into a report.
LemmaReport verify_four_cycle(const InvolutionGraph& g);

/// Trace criterion against BFS d <= 2 for every distinct pair.
LemmaReport verify_eigenvalue_criterion(const InvolutionGraph& g);

/// t_omega in E_{sigma,tau} iff omega^4 - (2 + 4/tau^2) omega^2 + 1 is a
/// nonzero square. q = 1 mod 4; tau != 0, omega != 0, +-1 (t_omega = +-s
/// is adjacent to s_{sigma,tau}, not at distance 2).
bool poly1_membership(const Field& F, Fq tau, Fq omega);

/// [[sigma,tau],[tau,-sigma]] in E_{alpha,omega} iff the discriminant
/// 4a(a^2-1)(w^2+w^-2-2)st + (a^4-6a^2+1)(w^2+w^-2-2)t^2
///   - 4(a^4 + a^2 w^2 + a^2 w^-2 + 1)
/// is zero or a non-square. q = 3 mod 4; omega != 0, +-1; s^2+t^2 = -1.
bool poly2_membership(const Field& F, Fq alpha, Fq omega, Fq sigma, Fq tau);

/// The s_{alpha,omega} vertex of Delta_3(t), q = 3 mod 4:
/// (1/(1+a^2)) [[a(w^-1 - w), a^2 w^-1 + w],[-a^2 w - w^-1, -a(w^-1 - w)]].
Mat2 delta3_vertex(const Field& F, Fq alpha, Fq omega);

/// poly1 predicate against direct disc membership, all valid tuples.
LemmaReport verify_poly1(const InvolutionGraph& g);

/// poly2 predicate against direct disc membership, all valid tuples.
LemmaReport verify_poly2(const InvolutionGraph& g);

/// Fingerprint collisions on Delta_1(s) /\ Delta_2(t) are exactly the
/// <t>-orbits {v, v^t}. Asserted for q >= 73, measured below.
LemmaReport verify_bound1(const InvolutionGraph& g);

/// Fingerprint collisions on Delta_3(t) are exactly {v, v^t}.
/// Asserted for q >= 67, measured below.
LemmaReport verify_bound2(const InvolutionGraph& g);

/// |Delta_1(u) /\ Delta_2(t)| = (q-5)/4 for every u = [[iota,alpha],[0,-iota]],
/// alpha != 0. Asserted for q >= 17, measured below.
LemmaReport verify_faithful1_count(const InvolutionGraph& g);

}  // namespace civ
