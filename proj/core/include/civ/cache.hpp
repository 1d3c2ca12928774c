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

#include <filesystem>
#include <optional>

#include "civ/graph.hpp"

namespace civ {

/// Binary adjacency cache. Layout: magic "CIVG", format version, p, f,
/// modulus coefficients, n, adjacency words, FNV-1a checksum of everything
/// before it. Little-endian fixed-width integers.
void save_graph(const InvolutionGraph& g, const std::filesystem::path& path);

/// Reloads a cached graph for F. Any mismatch (magic, version, field
/// parameters, checksum, truncation) yields nullopt so the caller rebuilds.
std::optional<InvolutionGraph> load_graph(const Field& F,
                                          const std::filesystem::path& path);

/// File name "civ_q<q>_p<p>_f<f>.graph" under dir.
std::filesystem::path cache_path(const Field& F,
                                 const std::filesystem::path& dir);

/// Loads from cache when possible, else builds and writes the cache.
/// An empty dir disables caching.
InvolutionGraph cached_graph(const Field& F, const std::filesystem::path& dir);

}  // namespace civ
