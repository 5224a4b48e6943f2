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
#include <set>
#include <vector>

namespace cornerforge::germ {

/// Entries are -1 or +1, one per divisor coordinate.
using SignVector = std::vector<int>;

/// Germ at the origin of R^d of a union of closed orthants. Only the divisor
/// coordinates carry signs; the remaining coordinates are free.
///
/// `divisor` holds 1-based ambient coordinates in increasing order and
/// `orthants[k][j]` is the sign of coordinate `divisor[j]`.
struct OrthantGerm {
  int dim = 0;
  std::vector<int> divisor;
  std::set<SignVector> orthants;

  std::size_t rank() const { return divisor.size(); }
  /// Position of ambient coordinate `coord` within `divisor`, if present.
  std::optional<std::size_t> slot_of(int coord) const;

  friend bool operator==(const OrthantGerm&, const OrthantGerm&) = default;
};

/// A stratum of the coordinate stratification: the coordinates in `zeros`
/// vanish and every other divisor coordinate has the recorded strict sign.
struct StratumDescriptor {
  std::vector<int> zeros;
  std::map<int, int> signs;

  friend bool operator==(const StratumDescriptor&, const StratumDescriptor&) = default;
  friend auto operator<=>(const StratumDescriptor&, const StratumDescriptor&) = default;
};

/// Checks shape invariants: sign entries are +-1, lengths match, coordinates
/// lie in 1..dim and increase. Throws Error otherwise; also rejects empty F
/// with "empty germ".
void validate(const OrthantGerm& g);

/// Germ over all of R^d with every coordinate a divisor coordinate and the
/// given orthants.
OrthantGerm make_germ(int dim, std::set<SignVector> orthants);

/// True when flipping coordinate `slot` maps some orthant of `g` outside F.
bool is_active(const OrthantGerm& g, std::size_t slot);

/// Drops inactive divisor coordinates and projects F accordingly. Idempotent.
OrthantGerm normalize(const OrthantGerm& g);

/// True iff F has orthants on both sides of the divisor coordinate `coord`.
bool disconnects(const OrthantGerm& g, int coord);

/// Divisor coordinates of the normalized germ that disconnect it.
std::vector<int> disconnecting_coords(const OrthantGerm& g);

/// Number of disconnecting coordinates after normalization.
int e_value(const OrthantGerm& g);

/// True iff e_value is zero. Throws Error if e is zero but the normalized
/// germ has more than one orthant, which would contradict the model.
bool is_corner_germ(const OrthantGerm& g);

/// Normalized germ at a generic point of the stratum `s`.
OrthantGerm germ_at_face(const OrthantGerm& g, const StratumDescriptor& s);

/// Every stratum whose closure meets the germ, open strata included.
std::vector<StratumDescriptor> enumerate_strata(const OrthantGerm& g);

/// Combinatorial closure test: the closure of `a` contains all of `b`.
bool closure_contains(const StratumDescriptor& a, const StratumDescriptor& b);
/// Point test: a representative point of `b` lies in the closure of `a`.
bool closure_meets(const StratumDescriptor& a, const StratumDescriptor& b);

/// Counts connected components of the grid sample of the germ in [-1,1]^d,
/// with n_per_axis points per axis. If `removed` is given, points on
/// {x_removed = 0} are excluded. Neighbors along an axis are adjacent when
/// both endpoints and the midpoint of their segment lie in the set.
std::size_t grid_connectivity_oracle(const OrthantGerm& g, std::optional<int> removed,
                                     int n_per_axis = 9);

/// All 2^r sign vectors of length r in lexicographic order (-1 before +1).
std::vector<SignVector> all_sign_vectors(std::size_t r);

/// All germs with dim = r and every nonempty subset of orthants, normalized
/// and deduplicated.
std::vector<OrthantGerm> all_normalized_germs(int dim);

}  // namespace cornerforge::germ
