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
#include <vector>

#include "cornerforge/mpoly.hpp"
#include "cornerforge/report.hpp"
#include "cornerforge/variety.hpp"

namespace cornerforge::corners {

// ---------------------------------------------------------------------------
// Doubles of manifolds with corners
// ---------------------------------------------------------------------------

/// Q = {h_1 >= 0, ..., h_l >= 0} in R^n with coordinates `vars`.
struct CornersSpec {
  poly::VarList vars;
  std::vector<poly::MPoly> inequalities;
};

/// "t" when l = 1, else "t1".."tl".
poly::VarList double_vars(std::size_t l);

/// {t_i^2 - h_i(x) = 0}; with `plus_copy`, also t_i >= 0.
VarietySystem emit_double(const CornersSpec& spec, bool plus_copy = false);

/// (x, sqrt(h_1(x)), ..., sqrt(h_l(x))). Values of h_i down to -1e-12 are
/// clamped to zero; anything lower is rejected with "point outside Q".
std::vector<double> section_plus(const CornersSpec& spec, const std::vector<double>& x);

/// Drops the t coordinates.
std::vector<double> project(const CornersSpec& spec, const std::vector<double>& z);

struct SmoothnessReport {
  bool ok = false;
  std::vector<std::size_t> ranks;     // one per point
  std::optional<std::size_t> witness; // first rank-deficient point
};

/// Exact Jacobian rank of the l defining equations at rational points.
SmoothnessReport smoothness_check(const CornersSpec& spec, const std::vector<std::vector<Rat>>& points);

/// Numerical rank (singular values above `tol`) at floating-point points.
SmoothnessReport smoothness_check_numeric(const CornersSpec& spec,
                                          const std::vector<std::vector<double>>& points,
                                          double tol = 1e-9);

// ---------------------------------------------------------------------------
// Folding function
// ---------------------------------------------------------------------------

struct FoldParams {
  Rat a;
  int k = 1;
};

void validate(const FoldParams& p);

/// The function P(t) + Q(t) sqrt(t) with P, Q univariate in "t".
struct SqrtPair {
  poly::MPoly p;
  poly::MPoly q;
};

/// sigma(t) = (1 - (t/a)^(2k))^(2k).
poly::MPoly fold_sigma(const FoldParams& p);

/// P = sigma t, Q = 1 - sigma.
SqrtPair fold_symbolic(const FoldParams& p);

/// f_{a,k}(t) for t in [0,1]; P and Q are evaluated exactly at the rational
/// value of t and combined in extended precision.
double fold_eval(const FoldParams& p, double t);

/// The four checks T0, Ta, MONO and LE, in that order.
std::vector<Verdict> fold_certify(const FoldParams& p);

/// F_{a,k}(y, s) for constant a: s below 0 is kept, [0,a] is folded, and
/// above a the square root is taken.
std::vector<double> glue_eval(const FoldParams& p, const std::vector<double>& y, double s);

/// Compares one-sided finite-difference derivatives of orders 1..2k-1 of the
/// two branches meeting at s = 0 and at s = a, with step `h`. One verdict per
/// junction and order.
std::vector<Verdict> junction_check(const FoldParams& p, const Rat& h, double tol);

// ---------------------------------------------------------------------------
// Fold normal form
// ---------------------------------------------------------------------------

/// Squares the first s coordinates of y.
std::vector<double> fold_normal_form(int d, int s, const std::vector<double>& y);

/// All preimages of z under fold_normal_form(d, s, .).
std::vector<std::vector<double>> fold_preimages(int d, int s, const std::vector<double>& z);

}  // namespace cornerforge::corners
