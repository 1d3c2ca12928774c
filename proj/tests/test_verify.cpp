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

#include <stdexcept>

#include "civ/verify.hpp"

using namespace civ;

TEST_CASE("report status names and pass semantics") {
  LemmaReport rep;
  rep.lemma = "x";
  rep.status = LemmaReport::Status::kVerified;
  CHECK(rep.passed());
  rep.status = LemmaReport::Status::kMeasured;
  CHECK(rep.passed());
  rep.status = LemmaReport::Status::kOutOfStatedRange;
  CHECK(rep.passed());
  rep.status = LemmaReport::Status::kFailed;
  CHECK_FALSE(rep.passed());
  rep.status = LemmaReport::Status::kTimeout;
  CHECK_FALSE(rep.passed());
  CHECK(std::string(LemmaReport::status_name(
            LemmaReport::Status::kVerified)) == "verified");
  auto j = rep.to_json();
  CHECK(j["lemma"] == "x");
  CHECK(j.contains("status"));
}

TEST_CASE("trace criterion equals BFS distance <= 2 exhaustively") {
  for (auto [p, f] : {std::pair<std::uint32_t, std::uint32_t>{7, 1},
                      {13, 1},
                      {3, 2},
                      {11, 1}}) {
    Field F(p, f);
    InvolutionGraph g = build_graph(F);
    auto rep = verify_eigenvalue_criterion(g);
    CAPTURE(F.q());
    CHECK(rep.status == LemmaReport::Status::kVerified);
    // spot check against BFS directly
    auto dist = bfs_distances(g, 0);
    for (int j = 1; j < g.n; ++j)
      CHECK(distance_le2_by_trace(F, g.verts.mats[0], g.verts.mats[j]) ==
            (dist[j] >= 0 && dist[j] <= 2));
  }
}

TEST_CASE("disc formulas match BFS in the stated range") {
  for (std::uint32_t p : {17u, 7u, 11u, 19u, 23u}) {
    Field F(p, 1);
    auto rep = verify_disc_formulas(build_graph(F));
    CAPTURE(p);
    CHECK(rep.status == LemmaReport::Status::kVerified);
    CHECK(rep.details["diameter"] == 3);
  }
}

TEST_CASE("disc formulas below the stated range are measured only") {
  Field F(13, 1);
  auto rep = verify_disc_formulas(build_graph(F));
  CHECK(rep.status == LemmaReport::Status::kOutOfStatedRange);
  CHECK(rep.passed());
  CHECK(rep.details["diameter"] == 4);  // finding: diameter exceeds 3 here
}

TEST_CASE("four cycle freeness verified on real graphs") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    auto rep = verify_four_cycle(build_graph(Field(p, 1)));
    CHECK(rep.status == LemmaReport::Status::kVerified);
  }
}

TEST_CASE("poly1 membership agrees with disc membership") {
  for (std::uint32_t p : {13u, 17u}) {
    auto rep = verify_poly1(build_graph(Field(p, 1)));
    CAPTURE(p);
    CHECK(rep.status == LemmaReport::Status::kVerified);
    CHECK(rep.details["tuples_checked"].get<int>() > 0);
  }
  Field F(13, 1);
  CHECK_THROWS_AS(poly1_membership(F, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(poly1_membership(F, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(poly1_membership(F, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(poly1_membership(F, 2, 12), std::invalid_argument);
}

TEST_CASE("poly2 membership agrees with disc membership") {
  for (std::uint32_t p : {7u, 11u, 19u}) {
    auto rep = verify_poly2(build_graph(Field(p, 1)));
    CAPTURE(p);
    CHECK(rep.status == LemmaReport::Status::kVerified);
  }
}

TEST_CASE("delta3 vertices are class members at distance 3") {
  Field F(11, 1);
  InvolutionGraph g = build_graph(F);
  int t = g.verts.id_of(base_vertex(F));
  auto dist = bfs_distances(g, t);
  for (Fq omega : gt_orbit_reps_delta3(F)) {
    for (Fq alpha = 0; alpha < F.q(); ++alpha) {
      Mat2 v = delta3_vertex(F, alpha, omega);
      int id = g.verts.id_of(v);
      REQUIRE(id >= 0);
      CHECK(dist[id] == 3);
    }
  }
}

TEST_CASE("fingerprints are invariant under t-conjugation") {
  Field F(17, 1);
  InvolutionGraph g = build_graph(F);
  int t = g.verts.id_of(base_vertex(F));
  DiscDecomposition dd = bfs_discs(g, t);
  std::vector<int> delta1 = dd.discs[1];
  std::vector<int> owners(dd.discs[2].begin(), dd.discs[2].begin() + 10);
  std::vector<int> partners;
  for (int v : owners)
    partners.push_back(g.verts.id_of(t_conjugate(F, g.verts.mats[v])));
  auto fp = fingerprint_owners(g, delta1, owners);
  auto fp2 = fingerprint_owners(g, delta1, partners);
  for (std::size_t i = 0; i < owners.size(); ++i)
    CHECK(fp[i].mask == fp2[i].mask);
}

TEST_CASE("bound collision classes asserted at the threshold q") {
  auto rep1 = verify_bound1(build_graph(Field(73, 1)));
  CHECK(rep1.status == LemmaReport::Status::kVerified);
  CHECK(rep1.details["max_class_size"] == 2);
  auto rep2 = verify_bound2(build_graph(Field(67, 1)));
  CHECK(rep2.status == LemmaReport::Status::kVerified);
  CHECK(rep2.details["max_class_size"] == 2);
}

TEST_CASE("bound collisions below threshold are measured") {
  auto rep = verify_bound1(build_graph(Field(13, 1)));
  CHECK(rep.status == LemmaReport::Status::kMeasured);
  CHECK(rep.passed());
  // finding: one collision class of size 4 exists at q = 13
  CHECK(rep.details["max_class_size"] == 4);
}

TEST_CASE("faithful1 count equals (q-5)/4 in range") {
  auto rep17 = verify_faithful1_count(build_graph(Field(17, 1)));
  CHECK(rep17.status == LemmaReport::Status::kVerified);
  CHECK(rep17.details["expected_count"] == 3);
  auto rep29 = verify_faithful1_count(build_graph(Field(29, 1)));
  CHECK(rep29.status == LemmaReport::Status::kVerified);
  CHECK(rep29.details["expected_count"] == 6);
}
