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

#include "civ/psl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace civ {

Mat2 mat_mul(const Field& F, const Mat2& x, const Mat2& y) {
  return Mat2{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
              F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
              F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
              F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Mat2 mat_neg(const Field& F, const Mat2& m) {
  return Mat2{F.neg(m.a), F.neg(m.b), F.neg(m.c), F.neg(m.d)};
}

Fq mat_det(const Field& F, const Mat2& m) {
  return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Fq mat_trace(const Field& F, const Mat2& m) { return F.add(m.a, m.d); }

Mat2 mat_conjugate(const Field& F, const Mat2& x, const Mat2& g) {
  Mat2 adj{g.d, F.neg(g.b), F.neg(g.c), g.a};
  Mat2 r = mat_mul(F, mat_mul(F, adj, x), g);
  Fq di = F.inv(mat_det(F, g));
  return Mat2{F.mul(r.a, di), F.mul(r.b, di), F.mul(r.c, di), F.mul(r.d, di)};
}

Mat2 mat_frobenius(const Field& F, const Mat2& m, std::uint32_t e) {
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) pe *= F.p();
  return Mat2{F.pow(m.a, pe), F.pow(m.b, pe), F.pow(m.c, pe), F.pow(m.d, pe)};
}

Mat2 canonicalize(const Field& F, const Mat2& m) {
  if (!F.odd()) return m;
  for (Fq e : {m.a, m.b, m.c, m.d}) {
    if (e == 0) continue;
    return e <= F.neg(e) ? m : mat_neg(F, m);
  }
  return m;
}

std::uint64_t VertexSet::key(const Mat2& m) const {
  std::uint64_t q = field->q();
  return (static_cast<std::uint64_t>(m.a) * q + m.b) * q + m.c;
}

int VertexSet::id_of(const Mat2& m) const {
  auto it = index.find(key(canonicalize(*field, m)));
  return it == index.end() ? -1 : it->second;
}

namespace {

VertexSet finalize(const Field& F, std::vector<Mat2> mats) {
  VertexSet vs;
  vs.field = &F;
  vs.mats = std::move(mats);
  std::sort(vs.mats.begin(), vs.mats.end(),
            [&](const Mat2& x, const Mat2& y) {
              return vs.key(x) < vs.key(y);
            });
  vs.mats.erase(std::unique(vs.mats.begin(), vs.mats.end()), vs.mats.end());
  vs.index.reserve(vs.mats.size());
  for (int i = 0; i < vs.size(); ++i) vs.index.emplace(vs.key(vs.mats[i]), i);
  return vs;
}

}  // namespace

VertexSet enumerate_involutions(const Field& F) {
  if (!F.odd())
    throw std::invalid_argument(
        "enumerate_involutions: even q uses the unipotent enumerator");
  if (F.q() <= 3) throw std::invalid_argument("enumerate_involutions: q > 3");
  // [[a,b],[c,-a]] with det = -a^2 - bc = 1, i.e. bc = -(1 + a^2)
  std::vector<Mat2> mats;
  for (Fq a = 0; a < F.q(); ++a) {
    Fq s = F.neg(F.add(F.one(), F.mul(a, a)));
    for (Fq b = 1; b < F.q(); ++b) {
      Fq c = F.div(s, b);
      mats.push_back(canonicalize(F, Mat2{a, b, c, F.neg(a)}));
    }
    if (s == 0) {  // b = 0 branch: a^2 = -1, any c
      for (Fq c = 0; c < F.q(); ++c)
        mats.push_back(canonicalize(F, Mat2{a, 0, c, F.neg(a)}));
    }
  }
  return finalize(F, std::move(mats));
}

VertexSet enumerate_involutions_even(const Field& F) {
  if (F.odd())
    throw std::invalid_argument("enumerate_involutions_even: q must be even");
  std::vector<Mat2> mats;
  for (Fq a = 0; a < F.q(); ++a) {
    Fq s = F.add(F.one(), F.mul(a, a));  // bc = 1 + a^2 = (1+a)^2
    for (Fq b = 1; b < F.q(); ++b)
      mats.push_back(Mat2{a, b, F.div(s, b), a});
    if (s == 0)
      for (Fq c = 0; c < F.q(); ++c)
        if (!(a == 1 && c == 0)) mats.push_back(Mat2{a, 0, c, a});
  }
  return finalize(F, std::move(mats));
}

VertexSet involution_class(const Field& F) {
  return F.odd() ? enumerate_involutions(F) : enumerate_involutions_even(F);
}

Mat2 base_vertex(const Field& F) {
  if (!F.odd()) throw std::invalid_argument("base_vertex: odd q only");
  if (F.q() % 4 == 1) {
    Fq iota = F.sqrt(F.neg(F.one()));
    return canonicalize(F, Mat2{iota, 0, 0, F.neg(iota)});
  }
  return canonicalize(F, Mat2{0, 1, F.neg(F.one()), 0});
}

bool commutes_in_L(const Field& F, const Mat2& x, const Mat2& y) {
  Mat2 cx = canonicalize(F, x), cy = canonicalize(F, y);
  if (cx == cy)
    throw std::invalid_argument("commutes_in_L: self-adjacency undefined");
  Mat2 xy = mat_mul(F, x, y);
  Mat2 yx = mat_mul(F, y, x);
  return F.odd() ? xy == mat_neg(F, yx) : xy == yx;
}

Mat2 t_conjugate(const Field& F, const Mat2& v) {
  Mat2 t = base_vertex(F);
  return canonicalize(F, mat_neg(F, mat_mul(F, mat_mul(F, t, v), t)));
}

std::vector<Fq> gt_orbit_reps_delta3(const Field& F) {
  if (F.q() % 4 != 3)
    throw std::invalid_argument("gt_orbit_reps_delta3: q = 3 mod 4 only");
  std::vector<bool> seen(F.q(), false);
  seen[0] = true;
  seen[1] = true;
  seen[F.neg(1)] = true;
  std::vector<Fq> reps;
  for (Fq w = 2; w < F.q(); ++w) {
    if (seen[w]) continue;
    reps.push_back(w);
    Fq wi = F.inv(w);
    for (Fq v : {w, F.neg(w), wi, F.neg(wi)}) seen[v] = true;
  }
  return reps;
}

std::vector<ProjAction> pgammal_generators(const VertexSet& verts) {
  const Field& F = *verts.field;
  std::vector<ProjAction> actions;
  std::vector<Mat2> conj;
  Fq g = F.generator();
  if (F.odd()) {
    // <x -> x+1, x -> -g/x> = PGL2(q) for g primitive
    conj.push_back(Mat2{1, 1, 0, 1});
    conj.push_back(Mat2{0, g, F.neg(F.one()), 0});
  } else {
    // translations, scaling by g and inversion generate all Mobius maps
    conj.push_back(Mat2{1, 1, 0, 1});
    conj.push_back(Mat2{g, 0, 0, 1});
    conj.push_back(Mat2{0, 1, 1, 0});
  }
  for (const Mat2& m : conj) {
    ProjAction act;
    act.kind = ProjAction::Kind::kConjugation;
    act.g = m;
    act.perm.resize(verts.size());
    for (int i = 0; i < verts.size(); ++i) {
      int j = verts.id_of(mat_conjugate(F, verts.mats[i], m));
      if (j < 0) throw std::logic_error("pgammal: conjugation left X");
      act.perm[i] = j;
    }
    actions.push_back(std::move(act));
  }
  if (F.f() > 1) {
    ProjAction act;
    act.kind = ProjAction::Kind::kFrobenius;
    act.frobenius_power = 1;
    act.perm.resize(verts.size());
    for (int i = 0; i < verts.size(); ++i) {
      int j = verts.id_of(mat_frobenius(F, verts.mats[i]));
      if (j < 0) throw std::logic_error("pgammal: frobenius left X");
      act.perm[i] = j;
    }
    actions.push_back(std::move(act));
  }
  return actions;
}

}  // namespace civ
