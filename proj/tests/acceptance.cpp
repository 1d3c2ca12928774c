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

// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure. Everything is exact integer computation; no tolerances.

#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "civ/autgrp.hpp"
#include "civ/cache.hpp"
#include "civ/verify.hpp"
#include "civ/weil.hpp"

using namespace civ;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

Field make_field(std::uint32_t q) {
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t f = 0;
  while (q > 1) {
    q /= p;
    ++f;
  }
  return Field(p, f);
}

std::uint64_t brute_count(const Poly& f) {
  const Field& F = f.field();
  std::uint64_t n = 0;
  for (Fq x = 0; x < F.q(); ++x)
    for (Fq y = 0; y < F.q(); ++y)
      if (F.mul(y, y) == f.eval(x)) ++n;
  return n;
}

}  // namespace

int main() {
  criterion(1, "|Aut(C(L,X))| = f q (q^2-1) for odd q in 7..31", [](auto& d) {
    for (std::uint32_t q : {7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31}) {
      Field F = make_field(q);
      LemmaReport rep = verify_theorem1(F);
      if (rep.status != LemmaReport::Status::kVerified) {
        d = "q=" + std::to_string(q) + " " +
            LemmaReport::status_name(rep.status);
        return false;
      }
      if (rep.details["aut_order"] != pgammal_order(q, F.f()).str()) {
        d = "q=" + std::to_string(q) + " order mismatch";
        return false;
      }
    }
    return true;
  });

  criterion(2, "even q components and the q=4 direct search", [](auto& d) {
    for (std::uint32_t q : {4, 8, 16}) {
      Field F = make_field(q);
      InvolutionGraph g = build_graph(F);
      auto comps = components(g);
      if (comps.size() != q + 1) {
        d = "q=" + std::to_string(q) + " wrong component count";
        return false;
      }
      for (const auto& comp : comps) {
        if (comp.size() != q - 1) {
          d = "q=" + std::to_string(q) + " wrong component size";
          return false;
        }
        for (int u : comp)
          for (int v : comp)
            if (u != v && !g.adjacent(u, v)) {
              d = "q=" + std::to_string(q) + " component not complete";
              return false;
            }
      }
      LemmaReport rep = verify_theorem1(F);
      if (rep.status != LemmaReport::Status::kVerified) {
        d = "q=" + std::to_string(q) + " theorem1 " +
            LemmaReport::status_name(rep.status);
        return false;
      }
      if (q == 4 && rep.details["search_order"] != "933120") {
        d = "q=4 search order != 933120";
        return false;
      }
    }
    return true;
  });

  criterion(3, "disc displays match BFS with diameter 3", [](auto& d) {
    for (std::uint32_t q : {17, 29, 7, 11, 19, 23}) {
      LemmaReport rep = verify_disc_formulas(build_graph(make_field(q)));
      if (rep.status != LemmaReport::Status::kVerified ||
          rep.details["diameter"] != 3) {
        d = "q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  criterion(4, "no 4-cycles for odd q in 5..31", [](auto& d) {
    for (std::uint32_t q : {5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31}) {
      InvolutionGraph g = build_graph(make_field(q));
      if (verify_four_cycle(g).status != LemmaReport::Status::kVerified) {
        d = "q=" + std::to_string(q);
        return false;
      }
      for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
          if (g.adj[i].intersection_count(g.adj[j]) > 1) {
            d = "q=" + std::to_string(q) + " common neighbors > 1";
            return false;
          }
    }
    return true;
  });

  criterion(5, "eigenvalue criterion equals BFS for odd q in 5..27",
            [](auto& d) {
              for (std::uint32_t q : {5, 7, 9, 11, 13, 17, 19, 23, 25, 27}) {
                LemmaReport rep =
                    verify_eigenvalue_criterion(build_graph(make_field(q)));
                if (rep.status != LemmaReport::Status::kVerified) {
                  d = "q=" + std::to_string(q);
                  return false;
                }
              }
              return true;
            });

  criterion(6, "poly1 at q in {13,17}, poly2 at q in {7,11,19}", [](auto& d) {
    for (std::uint32_t q : {13, 17}) {
      if (verify_poly1(build_graph(make_field(q))).status !=
          LemmaReport::Status::kVerified) {
        d = "poly1 q=" + std::to_string(q);
        return false;
      }
    }
    for (std::uint32_t q : {7, 11, 19}) {
      if (verify_poly2(build_graph(make_field(q))).status !=
          LemmaReport::Status::kVerified) {
        d = "poly2 q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  criterion(7, "faithful1 count (q-5)/4 at q in {17,29}", [](auto& d) {
    for (std::uint32_t q : {17, 29}) {
      if (verify_faithful1_count(build_graph(make_field(q))).status !=
          LemmaReport::Status::kVerified) {
        d = "q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  criterion(8, "collision classes are <t>-orbits at q=73 and q=67",
            [](auto& d) {
              LemmaReport b1 = verify_bound1(build_graph(make_field(73)));
              if (b1.status != LemmaReport::Status::kVerified ||
                  b1.details["max_class_size"] != 2) {
                d = "bound1 q=73";
                return false;
              }
              LemmaReport b2 = verify_bound2(build_graph(make_field(67)));
              if (b2.status != LemmaReport::Status::kVerified ||
                  b2.details["max_class_size"] != 2) {
                d = "bound2 q=67";
                return false;
              }
              return true;
            });

  criterion(9, "weil audits and brute-force count agreement", [](auto& d) {
    for (std::uint32_t q : {73, 89, 67, 71}) {
      if (verify_weil_samples(make_field(q), 20, 1).status !=
          LemmaReport::Status::kVerified) {
        d = "samples q=" + std::to_string(q);
        return false;
      }
    }
    for (std::uint32_t q : {5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31}) {
      Field F = make_field(q);
      std::mt19937_64 rng(2024);
      for (int i = 0; i < 100; ++i) {
        std::vector<Fq> c(1 + rng() % 9);  // degree <= 8
        for (auto& x : c) x = static_cast<Fq>(rng() % F.q());
        Poly f(F, c);
        if (count_solutions(f).n_solutions != brute_count(f)) {
          d = "count mismatch q=" + std::to_string(q);
          return false;
        }
      }
    }
    return true;
  });

  criterion(10, "property suite", [](auto& d) {
    // refinement idempotence and relabeling invariance
    for (std::uint32_t q : {7, 9, 11}) {
      Field F = make_field(q);
      InvolutionGraph g = build_graph(F);
      OrderedPartition pi = refine(g, unit_partition(g.n));
      if (refine(g, pi).cells != pi.cells) {
        d = "refinement not idempotent q=" + std::to_string(q);
        return false;
      }
      AutResult aut = automorphism_group(g);
      BigInt base = aut.group.order();
      std::vector<int> perm(g.n);
      std::iota(perm.begin(), perm.end(), 0);
      std::mt19937_64 rng(31 * q);
      std::shuffle(perm.begin(), perm.end(), rng);
      if (automorphism_group(relabel_graph(g, perm)).group.order() != base) {
        d = "relabeling changed |Aut| q=" + std::to_string(q);
        return false;
      }
      // seeded/unseeded agreement
      std::vector<Perm> seed;
      for (const ProjAction& a : pgammal_generators(g.verts))
        seed.push_back(a.perm);
      if (automorphism_group(g, &seed).group.order() != base) {
        d = "seeded search disagrees q=" + std::to_string(q);
        return false;
      }
      // transitivity: |A| = |X| * |A_t|
      int t = g.verts.id_of(base_vertex(F));
      PermGroup chain(g.n, {t});
      for (const Perm& p : aut.group.strong_generators())
        chain.add_generator(p);
      if (chain.order() != base ||
          chain.order() != BigInt(g.n) * chain.stabilizer_order(1)) {
        d = "|A| != |X| |A_t| at q=" + std::to_string(q);
        return false;
      }
    }
    // field axioms, exhaustive at every prime power q <= 81
    for (std::uint32_t q = 4; q <= 81; ++q) {
      std::uint32_t p = q;
      for (std::uint32_t v = 2; v * v <= q; ++v)
        if (q % v == 0) {
          p = v;
          break;
        }
      std::uint32_t rest = q;
      while (rest % p == 0) rest /= p;
      if (rest != 1) continue;
      Field F = make_field(q);
      for (Fq a = 0; a < q; ++a) {
        if (a != 0 && F.mul(a, F.inv(a)) != 1) {
          d = "inverse fails q=" + std::to_string(q);
          return false;
        }
        for (Fq b = 0; b < q; ++b) {
          if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) {
            d = "commutativity fails q=" + std::to_string(q);
            return false;
          }
          for (Fq cc = 0; cc < q; ++cc) {
            if (F.add(F.add(a, b), cc) != F.add(a, F.add(b, cc)) ||
                F.mul(F.mul(a, b), cc) != F.mul(a, F.mul(b, cc)) ||
                F.mul(a, F.add(b, cc)) != F.add(F.mul(a, b), F.mul(a, cc))) {
              d = "ring axiom fails q=" + std::to_string(q);
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  criterion(11, "q=5 anomaly reported in measurement mode", [](auto& d) {
    LemmaReport rep = verify_theorem1(make_field(5));
    if (rep.status != LemmaReport::Status::kMeasured || !rep.passed()) {
      d = "status not measured";
      return false;
    }
    if (rep.details["aut_order"] != "933120" ||
        rep.details["pgammal_order"] != "120") {
      d = "unexpected orders";
      return false;
    }
    auto comps = components(build_graph(make_field(5)));
    if (comps.size() != 5) {
      d = "not five components";
      return false;
    }
    for (const auto& comp : comps)
      if (comp.size() != 3) {
        d = "component not a triangle";
        return false;
      }
    return true;
  });

  std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED"
                                : "ACCEPTANCE FAILED: " +
                                      std::to_string(g_failures) + " criteria")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
