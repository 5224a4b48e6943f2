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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cornerforge/germ.hpp"
#include "cornerforge/rng.hpp"

namespace cornerforge::drill {

// ---------------------------------------------------------------------------
// Descriptors on R^e x [0,inf) x S^{d-e-1}
// ---------------------------------------------------------------------------

enum class RhoDomain { kZero, kHalf, kLine };
enum class SphereConstraint { kFree, kNonNegative, kNonPositive, kZero };

/// One product set: base R^e, a rho range, and per-coordinate conditions on
/// the sphere coordinates w_{e+1}..w_d (index 0 of `sphere` is w_{e+1}).
struct Atom {
  int e = 0;
  int d = 0;
  RhoDomain rho = RhoDomain::kHalf;
  std::vector<SphereConstraint> sphere;

  /// The sphere factor is empty iff every coordinate is forced to zero.
  bool empty() const;
  /// Dimension as a semialgebraic set; meaningless when empty().
  int dimension() const;
  /// Membership of (y, rho, w) with tolerance on the sign conditions.
  bool contains(const std::vector<double>& y, double rho, const std::vector<double>& w,
                double tol) const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite union of atoms.
struct SetDescriptor {
  std::vector<Atom> atoms;
};

/// Preimage of the divisor component {x_k = 0} for e < k <= d.
SetDescriptor divisor_preimage(int k, int e, int d);

/// Closure of the preimage of the orthant {eps_j x_j >= 0} minus the center,
/// with eps indexed over coordinates e+1..d.
SetDescriptor strict_transform_orthant(const germ::SignVector& eps, int e);

/// Coordinatewise intersection of two atoms over the same (e, d).
Atom intersect(const Atom& a, const Atom& b);

/// Dimension of the intersection of two strict transforms, or nullopt when
/// the intersection is empty.
std::optional<int> transforms_intersection_dim(const germ::SignVector& eps,
                                               const germ::SignVector& eps2, int e);

/// Uniform-angle sample of a nonempty atom: y in [-1,1]^e, rho in its domain
/// clipped to [-1,1], w on the constrained sphere. Layout is y, rho, w.
std::vector<double> sample_atom(const Atom& a, Rng& rng);

struct SampleSearch {
  std::size_t cross_members = 0;  // samples of one set lying in the other
  std::size_t close_pairs = 0;    // sample pairs closer than the tolerance
  double min_distance = 0.0;
};

/// Samples `count` points of each atom and looks for evidence of a common
/// point: membership of samples in the other atom and near pairs.
SampleSearch search_common_points(const Atom& a, const Atom& b, std::size_t count, double tol,
                                  Rng& rng);

// ---------------------------------------------------------------------------
// Blow-up charts
// ---------------------------------------------------------------------------

/// Sign pattern of a cell of the exceptional sphere, entries in {-1,0,1}.
using SphereCell = std::vector<int>;

std::string cell_to_string(const SphereCell& cell);
SphereCell cell_from_string(const std::string& text);
/// All of {-1,0,1}^l minus the zero vector.
std::vector<SphereCell> all_cells(std::size_t l);

enum class PivotRule { kFirst, kLast };

/// kPositive keeps the strict transform inside the rho >= 0 half of the
/// twisted double; kTwisted also keeps the antipodal sheet rho <= 0.
enum class Sheet { kPositive, kTwisted };

/// Chart germ before and after normalization, with the coordinate roles.
struct Chart {
  germ::OrthantGerm raw;
  germ::OrthantGerm normalized;
  int rho_coord = 0;            // ambient slot holding the exceptional coordinate
  std::vector<int> residual_w;  // slots holding w_j for sigma_j = 0
};

/// Chart at one cell, or nullopt when no orthant of `g` reaches that cell.
std::optional<Chart> blowup_chart(const germ::OrthantGerm& g, const std::vector<int>& center,
                                  const SphereCell& cell, Sheet sheet = Sheet::kPositive,
                                  PivotRule pivot = PivotRule::kFirst);

/// Normalized chart germs for every cell reached by `g`.
std::map<SphereCell, germ::OrthantGerm> blowup_charts(const germ::OrthantGerm& g,
                                                      const std::vector<int>& center,
                                                      Sheet sheet = Sheet::kPositive,
                                                      PivotRule pivot = PivotRule::kFirst);

/// Flips the given ambient coordinates in every orthant of F.
germ::OrthantGerm flip_coords(const germ::OrthantGerm& g, const std::vector<int>& coords);

/// Empirical chart germ: samples points near a representative of the cell in
/// chart coordinates, pushes them forward to x-space and tests membership in
/// `g` (rho < 0 counts only on the twisted sheet). Returns the normalized
/// result, or nullopt when nothing is hit.
std::optional<germ::OrthantGerm> chart_numeric_oracle(const germ::OrthantGerm& g,
                                                      const std::vector<int>& center,
                                                      const SphereCell& cell, Sheet sheet,
                                                      std::size_t samples, Rng& rng);

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

struct BlowupNode {
  germ::OrthantGerm germ;
  std::optional<std::vector<int>> center;
  std::map<std::string, BlowupNode> children;
};

/// Blows up the full disconnecting set repeatedly, following the rho >= 0
/// strict transform, until every leaf is a corner germ. Throws Error when a
/// branch would exceed `max_depth`.
BlowupNode desingularize(const germ::OrthantGerm& g, int max_depth);

int tree_depth(const BlowupNode& node);
std::vector<const BlowupNode*> tree_leaves(const BlowupNode& node);

}  // namespace cornerforge::drill
