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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cornerforge/report.hpp"
#include "cornerforge/rng.hpp"

namespace cornerforge::suite {

/// Expected genus grid, rows n = 3..7 and columns s = 2..7; -1 marks "--".
extern const int kGenusTable[5][6];

struct Criterion {
  int id = 0;
  std::string title;
  double budget_seconds = 0.0;
  std::function<Verdict(Rng&)> run;
};

/// The nine acceptance criteria in order.
const std::vector<Criterion>& criteria();

struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict verdict;          // outcome of the checks alone
  double seconds = 0.0;
  double budget_seconds = 0.0;
  bool within_budget = false;

  bool pass() const { return verdict.pass && within_budget; }
};

/// Runs one criterion with a generator derived from `seed` and its id.
CriterionResult run_criterion(const Criterion& c, std::uint64_t seed);

std::vector<CriterionResult> run_all(std::uint64_t seed);

}  // namespace cornerforge::suite
