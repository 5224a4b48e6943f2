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

#include <span>
#include <string>
#include <vector>

#include "cornerforge/mpoly.hpp"

namespace cornerforge {

enum class Relation { kGe, kGt };

struct Inequality {
  poly::MPoly poly;
  Relation relation = Relation::kGe;
};

/// Named variables with polynomial equations and inequalities. Every
/// polynomial is stored over exactly `vars`.
struct VarietySystem {
  poly::VarList vars;
  std::vector<poly::MPoly> equations;
  std::vector<Inequality> inequalities;
  std::string description;
};

/// Re-expresses every polynomial over `vars`; throws Error if one uses a
/// variable outside it.
void conform(VarietySystem& system);

/// Largest |equation| at a point given in `vars` order.
double max_residual(const VarietySystem& system, std::span<const double> point);

/// Whether every inequality holds at the point, allowing `tol` slack for >=.
bool satisfies_inequalities(const VarietySystem& system, std::span<const double> point, double tol);

/// Exact versions at a rational point.
bool vanishes_exactly(const VarietySystem& system, std::span<const Rat> point);

}  // namespace cornerforge
