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

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "civ/field.hpp"

namespace civ {

/// 2x2 matrix over GF(q), row major.
struct Mat2 {
  Fq a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_mul(const Field& F, const Mat2& x, const Mat2& y);
Mat2 mat_neg(const Field& F, const Mat2& m);
Fq mat_det(const Field& F, const Mat2& m);
Fq mat_trace(const Field& F, const Mat2& m);
/// g^{-1} x g for g in GL2(q).
Mat2 mat_conjugate(const Field& F, const Mat2& x, const Mat2& g);
/// Entrywise a -> a^(p^e).
Mat2 mat_frobenius(const Field& F, const Mat2& m, std::uint32_t e = 1);

/// Sign-canonical representative of {m, -m}: the first nonzero entry e in
/// scan order (a,b,c,d) satisfies enc(e) < enc(-e). Identity map in
/// characteristic 2. Idempotent.
Mat2 canonicalize(const Field& F, const Mat2& m);

/// The involution class X of PSL2(q) as an indexed vertex table.
/// Matrices are canonical and sorted by encoding key, so vertex ids are
/// deterministic. Immutable after enumeration.
struct VertexSet {
  const Field* field = nullptr;
  std::vector<Mat2> mats;
  std::unordered_map<std::uint64_t, std::int32_t> index;

  int size() const { return static_cast<int>(mats.size()); }
  std::uint64_t key(const Mat2& m) const;
  /// Canonicalizes and looks up; -1 if the matrix is not a class member.
  int id_of(const Mat2& m) const;
};

/// Trace-zero det-1 matrices modulo +-I, odd q > 3. |X| = q(q+1)/2 for
/// q = 1 mod 4 and q(q-1)/2 for q = 3 mod 4.
VertexSet enumerate_involutions(const Field& F);

/// Involutions of PSL2(q) = SL2(q) for even q: trace-zero det-1 matrices
/// other than the identity. |X| = q^2 - 1.
VertexSet enumerate_involutions_even(const Field& F);

/// Dispatch on the parity of q.
VertexSet involution_class(const Field& F);

/// The fixed involution t: diag(iota, -iota) with iota^2 = -1 when
/// q = 1 mod 4, and [[0,1],[-1,0]] when q = 3 mod 4.
Mat2 base_vertex(const Field& F);

/// Adjacency test: distinct x, y commute in L iff xy = -yx in SL2(q)
/// (odd q), or xy = yx (even q). Throws on equal projective classes.
bool commutes_in_L(const Field& F, const Mat2& x, const Mat2& y);

/// v^t, canonicalized. t^{-1} = -t in SL2, so v^t = -(t v t).
Mat2 t_conjugate(const Field& F, const Mat2& v);

/// Representatives omega of the classes {+-omega, +-1/omega} on
/// GF(q)* \ {+-1}, least encoding first. q = 3 mod 4: the matrices
/// t_omega for these omega represent the G_t-orbits of Delta_3(t).
std::vector<Fq> gt_orbit_reps_delta3(const Field& F);

/// A PGammaL2(q) generator realized as a permutation of X.
struct ProjAction {
  enum class Kind { kConjugation, kFrobenius };
  Kind kind;
  Mat2 g;                  // conjugating element (kConjugation)
  std::uint32_t frobenius_power = 0;
  std::vector<int> perm;   // induced permutation of vertex ids
};

/// Generators of PGammaL2(q) acting on X: two PGL2(q) conjugations for odd
/// q (three for even q), plus the entrywise Frobenius when f > 1.
std::vector<ProjAction> pgammal_generators(const VertexSet& verts);

}  // namespace civ
