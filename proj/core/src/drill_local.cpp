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

#include "cornerforge/drill_local.hpp"

#include <algorithm>
#include <cmath>

#include "cornerforge/error.hpp"

namespace cornerforge::drill {
namespace {

using germ::OrthantGerm;
using germ::SignVector;

bool sign_ok(SphereConstraint c, double w, double tol) {
  switch (c) {
    case SphereConstraint::kFree: return true;
    case SphereConstraint::kNonNegative: return w >= -tol;
    case SphereConstraint::kNonPositive: return w <= tol;
    case SphereConstraint::kZero: return std::abs(w) <= tol;
  }
  return false;
}

SphereConstraint meet(SphereConstraint a, SphereConstraint b) {
  using C = SphereConstraint;
  if (a == C::kFree) return b;
  if (b == C::kFree || a == b) return a;
  return C::kZero;  // opposite half-lines, or anything against zero
}

RhoDomain meet(RhoDomain a, RhoDomain b) {
  if (a == RhoDomain::kZero || b == RhoDomain::kZero) return RhoDomain::kZero;
  if (a == RhoDomain::kHalf || b == RhoDomain::kHalf) return RhoDomain::kHalf;
  return RhoDomain::kLine;
}

void check_signs(const SignVector& eps) {
  for (int s : eps) {
    if (s != 1 && s != -1) throw Error("sign entries must be +1 or -1");
  }
}

std::vector<double> flatten(const std::vector<double>& y, double rho, const std::vector<double>& w) {
  std::vector<double> p = y;
  p.push_back(rho);
  p.insert(p.end(), w.begin(), w.end());
  return p;
}

// Position of the pivot among the nonzero entries of a cell.
std::size_t pivot_index(const SphereCell& cell, PivotRule rule) {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < cell.size(); ++j) {
    if (cell[j] == 0) continue;
    if (!found || rule == PivotRule::kLast) found = j;
    if (rule == PivotRule::kFirst) break;
  }
  if (!found) throw Error("sphere cell must be nonzero");
  return *found;
}

void check_center(const OrthantGerm& g, const std::vector<int>& center) {
  if (center.size() < 2) throw Error("center must have codimension >= 2 in divisor");
  for (std::size_t j = 0; j < center.size(); ++j) {
    if (!g.slot_of(center[j])) {
      throw Error("center coordinate " + std::to_string(center[j]) + " is not a divisor coordinate");
    }
    if (j > 0 && center[j] <= center[j - 1]) throw Error("center coordinates must increase");
  }
}

void check_cell(const SphereCell& cell, std::size_t l) {
  if (cell.size() != l) throw Error("sphere cell length does not match the center");
  bool nonzero = false;
  for (int s : cell) {
    if (s < -1 || s > 1) throw Error("sphere cell entries must be -1, 0 or +1");
    nonzero = nonzero || s != 0;
  }
  if (!nonzero) throw Error("sphere cell must be nonzero");
}

// Chart divisor in increasing order: the rho slot, residual w slots and the
// divisor coordinates outside the center.
std::vector<int> chart_divisor(const OrthantGerm& g, const std::vector<int>& center,
                               const SphereCell& cell, int rho_coord) {
  std::vector<int> out;
  for (int c : g.divisor) {
    const auto it = std::find(center.begin(), center.end(), c);
    if (it == center.end() || c == rho_coord || cell[static_cast<std::size_t>(it - center.begin())] == 0) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

bool Atom::empty() const {
  return std::all_of(sphere.begin(), sphere.end(),
                     [](SphereConstraint c) { return c == SphereConstraint::kZero; });
}

int Atom::dimension() const {
  const auto nonzero = std::count_if(sphere.begin(), sphere.end(),
                                     [](SphereConstraint c) { return c != SphereConstraint::kZero; });
  return e + (rho == RhoDomain::kZero ? 0 : 1) + static_cast<int>(nonzero) - 1;
}

bool Atom::contains(const std::vector<double>& y, double rho_value, const std::vector<double>& w,
                    double tol) const {
  if (y.size() != static_cast<std::size_t>(e) || w.size() != sphere.size()) return false;
  if (rho == RhoDomain::kZero && std::abs(rho_value) > tol) return false;
  if (rho == RhoDomain::kHalf && rho_value < -tol) return false;
  double norm2 = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!sign_ok(sphere[j], w[j], tol)) return false;
    norm2 += w[j] * w[j];
  }
  return std::abs(std::sqrt(norm2) - 1.0) <= tol;
}

SetDescriptor divisor_preimage(int k, int e, int d) {
  if (e < 0 || k <= e || k > d) {
    throw Error("divisor index " + std::to_string(k) + " out of range (" + std::to_string(e) +
                ", " + std::to_string(d) + "]");
  }
  const auto n = static_cast<std::size_t>(d - e);
  Atom exceptional{e, d, RhoDomain::kZero, std::vector<SphereConstraint>(n, SphereConstraint::kFree)};
  Atom strict{e, d, RhoDomain::kHalf, std::vector<SphereConstraint>(n, SphereConstraint::kFree)};
  strict.sphere[static_cast<std::size_t>(k - e - 1)] = SphereConstraint::kZero;
  return SetDescriptor{{exceptional, strict}};
}

SetDescriptor strict_transform_orthant(const SignVector& eps, int e) {
  check_signs(eps);
  if (e < 0) throw Error("negative free dimension");
  Atom a{e, e + static_cast<int>(eps.size()), RhoDomain::kHalf, {}};
  for (int s : eps) {
    a.sphere.push_back(s > 0 ? SphereConstraint::kNonNegative : SphereConstraint::kNonPositive);
  }
  return SetDescriptor{{a}};
}

Atom intersect(const Atom& a, const Atom& b) {
  if (a.e != b.e || a.d != b.d) throw Error("atoms live over different spaces");
  Atom out{a.e, a.d, meet(a.rho, b.rho), {}};
  for (std::size_t j = 0; j < a.sphere.size(); ++j) out.sphere.push_back(meet(a.sphere[j], b.sphere[j]));
  return out;
}

std::optional<int> transforms_intersection_dim(const SignVector& eps, const SignVector& eps2, int e) {
  if (eps.size() != eps2.size()) throw Error("sign vectors have different lengths");
  const Atom a = intersect(strict_transform_orthant(eps, e).atoms[0],
                           strict_transform_orthant(eps2, e).atoms[0]);
  if (a.empty()) return std::nullopt;
  return a.dimension();
}

std::vector<double> sample_atom(const Atom& a, Rng& rng) {
  if (a.empty()) throw Error("cannot sample an empty atom");
  std::vector<double> y(static_cast<std::size_t>(a.e));
  for (auto& v : y) v = rng.uniform(-1.0, 1.0);
  double rho = 0.0;
  if (a.rho == RhoDomain::kHalf) rho = rng.uniform(0.0, 1.0);
  if (a.rho == RhoDomain::kLine) rho = rng.uniform(-1.0, 1.0);
  std::vector<double> w(a.sphere.size(), 0.0);
  double norm2 = 0.0;
  while (norm2 < 1e-24) {
    norm2 = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double g = rng.normal();
      switch (a.sphere[j]) {
        case SphereConstraint::kFree: w[j] = g; break;
        case SphereConstraint::kNonNegative: w[j] = std::abs(g); break;
        case SphereConstraint::kNonPositive: w[j] = -std::abs(g); break;
        case SphereConstraint::kZero: w[j] = 0.0; break;
      }
      norm2 += w[j] * w[j];
    }
  }
  const double norm = std::sqrt(norm2);
  for (auto& v : w) v /= norm;
  return flatten(y, rho, w);
}

SampleSearch search_common_points(const Atom& a, const Atom& b, std::size_t count, double tol,
                                  Rng& rng) {
  SampleSearch out;
  const auto ne = static_cast<std::size_t>(a.e);
  auto split = [&](const std::vector<double>& p, std::vector<double>& y, double& rho,
                   std::vector<double>& w) {
    y.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ne));
    rho = p[ne];
    w.assign(p.begin() + static_cast<std::ptrdiff_t>(ne + 1), p.end());
  };
  std::vector<std::vector<double>> pa;
  std::vector<std::vector<double>> pb;
  if (!a.empty()) {
    for (std::size_t i = 0; i < count; ++i) pa.push_back(sample_atom(a, rng));
  }
  if (!b.empty()) {
    for (std::size_t i = 0; i < count; ++i) pb.push_back(sample_atom(b, rng));
  }
  std::vector<double> y;
  std::vector<double> w;
  double rho = 0.0;
  for (const auto& p : pa) {
    split(p, y, rho, w);
    if (b.contains(y, rho, w, tol)) ++out.cross_members;
  }
  for (const auto& p : pb) {
    split(p, y, rho, w);
    if (a.contains(y, rho, w, tol)) ++out.cross_members;
  }
  if (pa.empty() || pb.empty()) return out;
  // Sweep along a generic direction; a close pair is close in projection.
  const std::size_t dim = pa.front().size();
  std::vector<double> dir(dim);
  double dn = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    dir[j] = std::sqrt(static_cast<double>(j + 2));
    dn += dir[j] * dir[j];
  }
  for (auto& v : dir) v /= std::sqrt(dn);
  auto project = [&](const std::vector<double>& p) {
    double s = 0.0;
    for (std::size_t j = 0; j < dim; ++j) s += dir[j] * p[j];
    return s;
  };
  std::vector<std::pair<double, std::size_t>> keyed;
  keyed.reserve(pb.size());
  for (std::size_t i = 0; i < pb.size(); ++i) keyed.emplace_back(project(pb[i]), i);
  std::sort(keyed.begin(), keyed.end());
  out.min_distance = INFINITY;
  for (const auto& p : pa) {
    const double key = project(p);
    auto it = std::lower_bound(keyed.begin(), keyed.end(), std::make_pair(key - tol, std::size_t{0}));
    for (; it != keyed.end() && it->first <= key + tol; ++it) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const double diff = p[j] - pb[it->second][j];
        d2 += diff * diff;
      }
      out.min_distance = std::min(out.min_distance, std::sqrt(d2));
      if (std::sqrt(d2) <= tol) ++out.close_pairs;
    }
  }
  return out;
}

std::string cell_to_string(const SphereCell& cell) {
  std::string out;
  for (int s : cell) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
  return out;
}

SphereCell cell_from_string(const std::string& text) {
  SphereCell out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(1);
    } else if (c == '-') {
      out.push_back(-1);
    } else if (c == '0') {
      out.push_back(0);
    } else {
      throw Error("malformed sphere cell '" + text + "'");
    }
  }
  return out;
}

std::vector<SphereCell> all_cells(std::size_t l) {
  std::vector<SphereCell> out;
  SphereCell cell(l, -1);
  while (true) {
    if (std::any_of(cell.begin(), cell.end(), [](int s) { return s != 0; })) out.push_back(cell);
    std::size_t j = 0;
    while (j < l && cell[j] == 1) cell[j++] = -1;
    if (j == l) break;
    ++cell[j];
  }
  return out;
}

std::optional<Chart> blowup_chart(const OrthantGerm& g, const std::vector<int>& center,
                                  const SphereCell& cell, Sheet sheet, PivotRule pivot) {
  germ::validate(g);
  check_center(g, center);
  check_cell(cell, center.size());
  const std::size_t p = pivot_index(cell, pivot);
  Chart chart;
  chart.rho_coord = center[pivot_index(cell, PivotRule::kFirst)];
  for (std::size_t j = 0; j < center.size(); ++j) {
    if (cell[j] == 0) chart.residual_w.push_back(center[j]);
  }
  chart.raw.dim = g.dim;
  chart.raw.divisor = chart_divisor(g, center, cell, chart.rho_coord);

  std::vector<std::size_t> center_slot(center.size());
  for (std::size_t j = 0; j < center.size(); ++j) center_slot[j] = *g.slot_of(center[j]);

  for (const auto& eps : g.orthants) {
    const int delta = eps[center_slot[p]] * cell[p];
    if (sheet == Sheet::kPositive && delta < 0) continue;
    bool compatible = true;
    for (std::size_t j = 0; j < center.size() && compatible; ++j) {
      if (cell[j] != 0) compatible = eps[center_slot[j]] == delta * cell[j];
    }
    if (!compatible) continue;
    SignVector image;
    for (int c : chart.raw.divisor) {
      if (c == chart.rho_coord) {
        image.push_back(delta);
      } else if (std::find(center.begin(), center.end(), c) != center.end()) {
        image.push_back(eps[*g.slot_of(c)] * delta);
      } else {
        image.push_back(eps[*g.slot_of(c)]);
      }
    }
    chart.raw.orthants.insert(std::move(image));
  }
  if (chart.raw.orthants.empty()) return std::nullopt;
  chart.normalized = germ::normalize(chart.raw);
  return chart;
}

std::map<SphereCell, OrthantGerm> blowup_charts(const OrthantGerm& g, const std::vector<int>& center,
                                                Sheet sheet, PivotRule pivot) {
  check_center(g, center);
  std::map<SphereCell, OrthantGerm> out;
  for (const auto& cell : all_cells(center.size())) {
    if (auto chart = blowup_chart(g, center, cell, sheet, pivot)) out.emplace(cell, std::move(chart->normalized));
  }
  return out;
}

OrthantGerm flip_coords(const OrthantGerm& g, const std::vector<int>& coords) {
  OrthantGerm out = g;
  out.orthants.clear();
  for (SignVector eps : g.orthants) {
    for (int c : coords) {
      const auto slot = g.slot_of(c);
      if (!slot) throw Error("cannot flip a non-divisor coordinate");
      eps[*slot] = -eps[*slot];
    }
    out.orthants.insert(std::move(eps));
  }
  return out;
}

std::optional<OrthantGerm> chart_numeric_oracle(const OrthantGerm& g, const std::vector<int>& center,
                                                const SphereCell& cell, Sheet sheet,
                                                std::size_t samples, Rng& rng) {
  germ::validate(g);
  check_center(g, center);
  check_cell(cell, center.size());
  if (samples == 0) throw Error("oracle needs at least one sample");
  const int rho_coord = center[pivot_index(cell, PivotRule::kFirst)];
  OrthantGerm found;
  found.dim = g.dim;
  found.divisor = chart_divisor(g, center, cell, rho_coord);
  const std::size_t r = found.divisor.size();
  const double nonzero = static_cast<double>(std::count_if(cell.begin(), cell.end(), [](int s) { return s != 0; }));
  const double w_star = 1.0 / std::sqrt(nonzero);
  const double tol = 1e-9;

  for (const auto& tau : germ::all_sign_vectors(r)) {
    const auto rho_slot = found.slot_of(rho_coord);
    if (sheet == Sheet::kPositive && tau[*rho_slot] < 0) continue;  // outside the rho >= 0 half
    bool hit = false;
    for (std::size_t s = 0; s < samples && !hit; ++s) {
      // Chart coordinates near the representative (rho = 0, w = w*, y = 0).
      std::vector<double> x(static_cast<std::size_t>(g.dim));
      for (auto& v : x) v = rng.uniform(-1.0, 1.0);  // free coordinates
      double rho = 0.0;
      std::vector<double> w(center.size(), 0.0);
      for (std::size_t k = 0; k < r; ++k) {
        const int c = found.divisor[k];
        if (c == rho_coord) {
          rho = tau[k] * rng.uniform(1e-4, 1e-3);
        } else if (auto it = std::find(center.begin(), center.end(), c); it != center.end()) {
          w[static_cast<std::size_t>(it - center.begin())] = tau[k] * rng.uniform(1e-3, 1e-2);
        } else {
          x[static_cast<std::size_t>(c - 1)] = tau[k] * rng.uniform(1e-3, 1.0);
        }
      }
      double norm2 = 0.0;
      for (std::size_t j = 0; j < center.size(); ++j) {
        if (cell[j] != 0) w[j] = cell[j] * w_star + rng.uniform(-0.1, 0.1) * w_star;
        norm2 += w[j] * w[j];
      }
      for (std::size_t j = 0; j < center.size(); ++j) {
        x[static_cast<std::size_t>(center[j] - 1)] = rho * w[j] / std::sqrt(norm2);
      }
      for (const auto& eps : g.orthants) {
        bool inside = true;
        for (std::size_t k = 0; k < g.rank() && inside; ++k) {
          inside = eps[k] * x[static_cast<std::size_t>(g.divisor[k] - 1)] >= -tol;
        }
        if (inside) {
          hit = true;
          break;
        }
      }
    }
    if (hit) found.orthants.insert(tau);
  }
  if (found.orthants.empty()) return std::nullopt;
  return germ::normalize(found);
}

BlowupNode desingularize(const OrthantGerm& g, int max_depth) {
  if (max_depth < 0) throw Error("max_depth must be non-negative");
  BlowupNode node;
  node.germ = germ::normalize(g);
  const std::vector<int> center = germ::disconnecting_coords(node.germ);
  if (center.empty()) return node;
  if (center.size() == 1) throw Error("germ with e = 1 cannot occur");
  if (max_depth == 0) throw Error("desingularization exceeded the maximum depth");
  node.center = center;
  for (const auto& [cell, chart] : blowup_charts(node.germ, center, Sheet::kPositive)) {
    node.children.emplace(cell_to_string(cell), desingularize(chart, max_depth - 1));
  }
  return node;
}

int tree_depth(const BlowupNode& node) {
  int depth = 0;
  for (const auto& [key, child] : node.children) depth = std::max(depth, 1 + tree_depth(child));
  return depth;
}

std::vector<const BlowupNode*> tree_leaves(const BlowupNode& node) {
  if (node.children.empty()) return {&node};
  std::vector<const BlowupNode*> out;
  for (const auto& [key, child] : node.children) {
    auto sub = tree_leaves(child);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace cornerforge::drill
