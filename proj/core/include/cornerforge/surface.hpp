// Copyright 2026 The Cornerforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cornerforge/mpoly.hpp"
#include "cornerforge/variety.hpp"

namespace cornerforge::surface {

using Point = std::pair<Rat, Rat>;

/// Strictly convex polygon with counterclockwise vertices. Edge i (0-based
/// here, 1-based in partitions) runs from vertex i to vertex i+1, and
/// `edges[i]` is its primitive integer inward form over {"x","y"}.
struct ConvexPolygon {
  std::vector<Point> vertices;
  std::vector<poly::MPoly> edges;

  std::size_t size() const { return vertices.size(); }
};

ConvexPolygon polygon_from_vertices(const std::vector<Point>& points);

/// Convex lattice n-gon with vertices (i, i^2), i = 0..n-1.
ConvexPolygon lattice_polygon(int n);

/// Average of the vertices; an interior point.
Point centroid(const ConvexPolygon& p);

/// Classes of 1-based edge indices.
struct EdgePartition {
  std::vector<std::vector<int>> classes;

  std::size_t size() const { return classes.size(); }
};

/// Throws Error unless the classes are nonempty and partition {1..n}.
void validate_partition(const EdgePartition& j, std::size_t n);

/// 0-based class index of every edge.
std::vector<std::size_t> class_of_edges(const EdgePartition& j, std::size_t n);

/// Exact test: no two lines of a class meet inside the polygon.
bool compatible_geometric(const ConvexPolygon& p, const EdgePartition& j);
/// Cycle test: no class holds two cyclically adjacent edges.
bool compatible_cyclic(const EdgePartition& j, std::size_t n);
/// Runs both tests; throws Error if they ever disagree.
bool check_compatibility(const ConvexPolygon& p, const EdgePartition& j);

/// All partitions of {1..n} into exactly s classes.
std::vector<EdgePartition> all_partitions(int n, int s);

/// First proper cyclic coloring of the n edges using all s colors, as a
/// partition; nullopt if none exists.
std::optional<EdgePartition> canonical_partition(int n, int s);

/// Variables x, y, t1..ts; equations t_k^2 - prod_{i in J_k} h_i; the
/// inequalities h_i >= 0 select the polygon chamber.
VarietySystem emit_surface(const ConvexPolygon& p, const EdgePartition& j);

struct RegularityReport {
  bool ok = false;
  std::size_t points = 0;          // points examined
  std::size_t full_checks = 0;     // points where the full Jacobian was also ranked exactly
  std::string witness;             // first failure
};

/// Exact rank-s certificate at every vertex, every edge midpoint and the
/// centroid.
RegularityReport verify_regularity(const ConvexPolygon& p, const EdgePartition& j);

/// 2^(s-3)(n-4)+1 when the pair is admissible, else nullopt.
std::optional<long> genus_formula(int n, int s);

struct EulerCounts {
  long v = 0;
  long e = 0;
  long f = 0;
  long chi = 0;
};

/// (2^(s-2)n, 2^(s-1)n, 2^s, 2^(s-2)(4-n)); throws Error for inadmissible pairs.
EulerCounts euler_formula(int n, int s);

struct TopologyReport {
  long v = 0;
  long e = 0;
  long f = 0;
  long chi = 0;
  std::optional<long> genus;  // from chi, assuming orientability
  bool connected = false;
  bool orientable = false;    // consistent face orientations found
};

/// Glues 2^s copies of the polygon along the partition and counts cells.
TopologyReport quotient_complex(const ConvexPolygon& p, const EdgePartition& j);

/// Plain-text genus grid for 3 <= n <= n_max and 2 <= s <= s_max.
std::string table(int n_max, int s_max);

}  // namespace cornerforge::surface
