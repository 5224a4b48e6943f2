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

#include "cornerforge/variety.hpp"

#include <algorithm>
#include <cmath>

#include "cornerforge/error.hpp"

namespace cornerforge {

void conform(VarietySystem& system) {
  for (auto& eq : system.equations) eq = eq.embed(system.vars);
  for (auto& ineq : system.inequalities) ineq.poly = ineq.poly.embed(system.vars);
}

double max_residual(const VarietySystem& system, std::span<const double> point) {
  if (point.size() != system.vars.size()) throw Error("point has the wrong number of coordinates");
  double worst = 0.0;
  for (const auto& eq : system.equations) worst = std::max(worst, std::abs(poly::eval(eq, point)));
  return worst;
}

bool satisfies_inequalities(const VarietySystem& system, std::span<const double> point, double tol) {
  if (point.size() != system.vars.size()) throw Error("point has the wrong number of coordinates");
  for (const auto& ineq : system.inequalities) {
    const double v = poly::eval(ineq.poly, point);
    if (ineq.relation == Relation::kGe ? v < -tol : v <= 0.0) return false;
  }
  return true;
}

bool vanishes_exactly(const VarietySystem& system, std::span<const Rat> point) {
  if (point.size() != system.vars.size()) throw Error("point has the wrong number of coordinates");
  return std::all_of(system.equations.begin(), system.equations.end(),
                     [&](const poly::MPoly& eq) { return poly::eval(eq, point) == 0; });
}

}  // namespace cornerforge
