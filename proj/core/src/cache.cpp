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

#include "civ/cache.hpp"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace civ {

namespace {

constexpr char kMagic[4] = {'C', 'I', 'V', 'G'};
constexpr std::uint32_t kFormatVersion = 1;

std::uint64_t fnv1a(const std::vector<unsigned char>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

struct ByteReader {
  const std::vector<unsigned char>& b;
  std::size_t pos = 0;
  bool ok = true;

  std::uint32_t u32() {
    if (pos + 4 > b.size()) {
      ok = false;
      return 0;
    }
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[pos + i]} << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    if (pos + 8 > b.size()) {
      ok = false;
      return 0;
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[pos + i]} << (8 * i);
    pos += 8;
    return v;
  }
};

}  // namespace

void save_graph(const InvolutionGraph& g, const std::filesystem::path& path) {
  const Field& F = *g.field;
  std::vector<unsigned char> out(kMagic, kMagic + 4);
  put_u32(out, kFormatVersion);
  put_u32(out, F.p());
  put_u32(out, F.f());
  put_u32(out, static_cast<std::uint32_t>(F.modulus().size()));
  for (Fq c : F.modulus()) put_u32(out, c);
  put_u32(out, static_cast<std::uint32_t>(g.n));
  for (const Bitset& row : g.adj)
    for (std::uint64_t w : row.words()) put_u64(out, w);
  put_u64(out, fnv1a(out));
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  os.write(reinterpret_cast<const char*>(out.data()),
           static_cast<std::streamsize>(out.size()));
}

std::optional<InvolutionGraph> load_graph(const Field& F,
                                          const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  std::vector<unsigned char> bytes(
      (std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (bytes.size() < 8 + 4) return std::nullopt;
  std::vector<unsigned char> body(bytes.begin(), bytes.end() - 8);
  ByteReader tail{bytes, bytes.size() - 8};
  if (tail.u64() != fnv1a(body)) return std::nullopt;
  ByteReader r{body};
  if (std::memcmp(body.data(), kMagic, 4) != 0) return std::nullopt;
  r.pos = 4;
  if (r.u32() != kFormatVersion) return std::nullopt;
  if (r.u32() != F.p() || r.u32() != F.f()) return std::nullopt;
  std::uint32_t mlen = r.u32();
  if (!r.ok || mlen != F.modulus().size()) return std::nullopt;
  for (Fq c : F.modulus())
    if (r.u32() != c) return std::nullopt;
  std::uint32_t n = r.u32();
  if (!r.ok) return std::nullopt;

  InvolutionGraph g;
  g.field = &F;
  g.verts = involution_class(F);
  g.n = g.verts.size();
  if (n != static_cast<std::uint32_t>(g.n)) return std::nullopt;
  std::size_t words_per_row = (n + 63) / 64;
  if (body.size() != r.pos + 8ull * words_per_row * n) return std::nullopt;
  g.adj.assign(g.n, Bitset(g.n));
  g.nbrs.assign(g.n, {});
  for (int i = 0; i < g.n; ++i)
    for (std::size_t w = 0; w < words_per_row; ++w)
      g.adj[i].words()[w] = r.u64();
  if (!r.ok) return std::nullopt;
  for (int i = 0; i < g.n; ++i) {
    if (g.adj[i].test(i)) return std::nullopt;
    for (int j : g.adj[i].to_vector()) {
      if (!g.adj[j].test(i)) return std::nullopt;
      g.nbrs[i].push_back(j);
    }
  }
  return g;
}

std::filesystem::path cache_path(const Field& F,
                                 const std::filesystem::path& dir) {
  return dir / ("civ_q" + std::to_string(F.q()) + "_p" +
                std::to_string(F.p()) + "_f" + std::to_string(F.f()) +
                ".graph");
}

InvolutionGraph cached_graph(const Field& F,
                             const std::filesystem::path& dir) {
  if (dir.empty()) return build_graph(F);
  std::filesystem::path path = cache_path(F, dir);
  if (auto g = load_graph(F, path)) return std::move(*g);
  InvolutionGraph g = build_graph(F);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  save_graph(g, path);
  return g;
}

}  // namespace civ
