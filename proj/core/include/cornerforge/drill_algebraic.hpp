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
#include <string>
#include <vector>

#include "cornerforge/mpoly.hpp"
#include "cornerforge/rng.hpp"
#include "cornerforge/variety.hpp"

namespace cornerforge::algdrill {

/// An affine variety X (by `ambient` equations over `vars`) together with
/// generators f_1..f_r of the ideal of the center Y. `anchors` are points of
/// X around which samplers draw.
struct CenterData {
  poly::VarList vars;
  std::vector<poly::MPoly> ambient;
  std::vector<poly::MPoly> generators;
  std::vector<std::vector<double>> anchors;
};

enum class Side { kPlus, kMinus, kBoth };

/// Names of the sphere variables: "u" when r = 1, else "u1".."ur".
poly::VarList sphere_vars(std::size_t r);

/// Equations of the twisted double, plus the one-sided inequality unless
/// `side` is kBoth. Variables are vars(X) followed by the sphere variables.
VarietySystem emit_twisted_double(const CenterData& c, Side side);

/// (x, side * f(x) / |f(x)|) for a point x off the center. `side` must be
/// kPlus or kMinus.
std::vector<double> lift_point(const CenterData& c, const std::vector<double>& x, Side side);

/// Point of X near `anchor`: a uniform sample of the unit box around it,
/// pulled onto X by Gauss-Newton. Returns an empty vector if that fails.
std::vector<double> sample_on_variety(const CenterData& c, const std::vector<double>& anchor,
                                      Rng& rng);

struct FiberReport {
  bool on_center = false;          // q satisfies ambient and generators
  std::size_t samples = 0;
  std::size_t points_found = 0;    // fiber points produced
  std::size_t distinct_points = 0; // after merging within tolerance
  int dimension = -1;              // observed sphere dimension
  double max_residual = 0.0;       // emitted equations at the fiber points
  bool ok = false;                 // residuals small, and 2 points when r = 1
  std::string message;
  std::vector<std::vector<double>> points;
};

/// Samples fiber points over q as limits of lifted points along tangent
/// directions of X at q.
FiberReport verify_fiber(const CenterData& c, const std::vector<double>& q, std::size_t samples,
                         Rng& rng, double tol = 1e-9);

struct ThetaReport {
  std::size_t samples = 0;
  std::size_t cardinality_two = 0;  // samples whose theta fiber has exactly two points
  std::size_t same_class = 0;       // samples where u and -u give the same class
  std::size_t involution_ok = 0;    // (x,-u) solves the system and swaps the sides
  double max_residual = 0.0;
  bool ok = false;
};

/// Projective class of u, scaled so that its first entry above `tol` in
/// magnitude is +1.
std::vector<double> projective_class(const std::vector<double>& u, double tol = 1e-9);

/// Draws samples on X off the center, lifts them, and checks the antipodal
/// pair structure of the two-to-one covering.
ThetaReport theta_check(const CenterData& c, std::size_t samples, Rng& rng, double tol = 1e-9);

}  // namespace cornerforge::algdrill
