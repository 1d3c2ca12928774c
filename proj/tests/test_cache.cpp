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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "civ/cache.hpp"

using namespace civ;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("civ_cache_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("graph cache round trip") {
  TempDir dir;
  Field F(7, 1);
  InvolutionGraph g = build_graph(F);
  fs::path file = cache_path(F, dir.path);
  save_graph(g, file);
  auto loaded = load_graph(F, file);
  REQUIRE(loaded.has_value());
  CHECK(loaded->n == g.n);
  CHECK(loaded->nbrs == g.nbrs);
  for (int i = 0; i < g.n; ++i) CHECK(loaded->adj[i] == g.adj[i]);
  CHECK(loaded->verts.mats == g.verts.mats);
}

TEST_CASE("corruption and mismatch yield nullopt") {
  TempDir dir;
  Field F(11, 1);
  InvolutionGraph g = build_graph(F);
  fs::path file = cache_path(F, dir.path);
  save_graph(g, file);

  SUBCASE("flipped byte fails the checksum") {
    std::fstream io(file, std::ios::in | std::ios::out | std::ios::binary);
    io.seekp(30);
    char c;
    io.seekg(30);
    io.get(c);
    io.seekp(30);
    io.put(static_cast<char>(c ^ 0x40));
    io.close();
    CHECK_FALSE(load_graph(F, file).has_value());
  }
  SUBCASE("truncation") {
    auto size = fs::file_size(file);
    fs::resize_file(file, size - 9);
    CHECK_FALSE(load_graph(F, file).has_value());
  }
  SUBCASE("wrong field") {
    Field G(13, 1);
    CHECK_FALSE(load_graph(G, file).has_value());
  }
  SUBCASE("missing file") {
    CHECK_FALSE(load_graph(F, dir.path / "nope.graph").has_value());
  }
}

TEST_CASE("cached_graph builds then reuses") {
  TempDir dir;
  Field F(13, 1);
  InvolutionGraph built = cached_graph(F, dir.path);
  CHECK(fs::exists(cache_path(F, dir.path)));
  InvolutionGraph again = cached_graph(F, dir.path);
  CHECK(again.n == built.n);
  CHECK(again.nbrs == built.nbrs);
  // empty dir disables caching but still builds
  InvolutionGraph direct = cached_graph(F, "");
  CHECK(direct.n == built.n);
}

TEST_CASE("cache file name embeds the field parameters") {
  Field F(3, 2);
  CHECK(cache_path(F, "x").filename() == "civ_q9_p3_f2.graph");
}
