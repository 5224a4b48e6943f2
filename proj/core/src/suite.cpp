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

#include "cornerforge/suite.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "cornerforge/double_fold.hpp"
#include "cornerforge/drill_algebraic.hpp"
#include "cornerforge/drill_local.hpp"
#include "cornerforge/germ.hpp"
#include "cornerforge/surface.hpp"

namespace cornerforge::suite {

const int kGenusTable[5][6] = {
    {-1, 0, -1, -1, -1, -1},
    {1, 1, 1, -1, -1, -1},
    {-1, 2, 3, 5, -1, -1},
    {2, 3, 5, 9, 17, -1},
    {-1, 4, 7, 13, 25, 49},
};

namespace {

using poly::MPoly;

// Counts checks and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  bool check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
    return ok;
  }

  Verdict verdict(const std::string& summary) const {
    if (failures_ == 0) return {name_, true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {name_, false, std::to_string(failures_) + " of " + std::to_string(checks_) +
                              " checks failed; first: " + first_};
  }

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string germ_text(const germ::OrthantGerm& g) {
  std::ostringstream os;
  os << "d=" << g.dim << " divisor{";
  for (int c : g.divisor) os << c << ' ';
  os << "} F{";
  for (const auto& e : g.orthants) {
    os << '(';
    for (int s : e) os << (s > 0 ? '+' : '-');
    os << ')';
  }
  os << '}';
  return os.str();
}

germ::OrthantGerm random_germ(int dim, Rng& rng) {
  const auto vectors = germ::all_sign_vectors(static_cast<std::size_t>(dim));
  std::set<germ::SignVector> f;
  while (f.empty()) {
    for (const auto& v : vectors) {
      if (rng.coin()) f.insert(v);
    }
  }
  return germ::normalize(germ::make_germ(dim, std::move(f)));
}

// ---------------------------------------------------------------------------

Verdict table_reproduction(Rng&) {
  Tally t("table reproduction");
  const std::string text = surface::table(7, 7);
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  for (int n = 3; n <= 7; ++n) {
    std::string row;
    std::getline(lines, row);
    std::istringstream cells(row);
    std::string label;
    cells >> label;
    t.check(label == "n=" + std::to_string(n), "row label " + label);
    for (int s = 2; s <= 7; ++s) {
      std::string cell;
      cells >> cell;
      const int want = kGenusTable[n - 3][s - 2];
      const std::string expected = want < 0 ? "--" : std::to_string(want);
      t.check(cell == expected, "cell (n=" + std::to_string(n) + ", s=" + std::to_string(s) + ") is '" +
                                    cell + "', expected '" + expected + "'");
    }
  }
  return t.verdict("30 cells match");
}

Verdict euler_equivalence(Rng&) {
  Tally t("Euler oracle equivalence");
  std::size_t instances = 0;
  for (int n = 3; n <= 8; ++n) {
    const auto poly = surface::lattice_polygon(n);
    for (int s = 2; s <= 5; ++s) {
      for (const auto& part : surface::all_partitions(n, s)) {
        if (!surface::check_compatibility(poly, part)) continue;
        ++instances;
        const auto top = surface::quotient_complex(poly, part);
        const long want = (4 - n) * (1L << s) / 4;
        const std::string tag = "(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")";
        t.check(top.chi == want, "chi " + std::to_string(top.chi) + " != " + std::to_string(want) + " " + tag);
        t.check(top.connected, "disconnected complex " + tag);
      }
    }
  }
  return t.verdict(std::to_string(instances) + " compatible partitions");
}

Verdict regularity_certificates(Rng&) {
  Tally t("regularity certificates");
  std::size_t instances = 0;
  std::size_t points = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto poly = surface::lattice_polygon(n);
    for (int s = 2; s <= n; ++s) {
      for (const auto& part : surface::all_partitions(n, s)) {
        if (!surface::check_compatibility(poly, part)) continue;
        ++instances;
        const auto rep = surface::verify_regularity(poly, part);
        points += rep.points;
        t.check(rep.ok, "(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ") " + rep.witness);
      }
    }
  }
  return t.verdict(std::to_string(instances) + " instances, " + std::to_string(points) + " points");
}

void check_germ_lemmas(Tally& t, const germ::OrthantGerm& g) {
  const int e = germ::e_value(g);
  const std::string tag = germ_text(g);
  if (!g.divisor.empty()) t.check(e != 1, "e = 1 for " + tag);
  t.check((e == 0) == (g.orthants.size() == 1), "e = 0 iff single orthant fails for " + tag);
  for (const auto& s : germ::enumerate_strata(g)) {
    t.check(germ::e_value(germ::germ_at_face(g, s)) <= e, "semi-continuity fails on a face of " + tag);
  }
}

Verdict germ_lemmas(Rng& rng) {
  Tally t("germ lemma suite");
  std::size_t exhaustive = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& g : germ::all_normalized_germs(d)) {
      ++exhaustive;
      check_germ_lemmas(t, g);
      for (int c : g.divisor) {
        const bool oracle = germ::grid_connectivity_oracle(g, c, 9) >= 2;
        t.check(germ::disconnects(g, c) == oracle,
                "grid oracle disagrees at coordinate " + std::to_string(c) + " for " + germ_text(g));
      }
    }
  }
  for (int i = 0; i < 10000; ++i) check_germ_lemmas(t, random_germ(4, rng));
  return t.verdict(std::to_string(exhaustive) + " exhaustive germs and 10000 random germs at d=4");
}

Verdict blowup_reduction(Rng& rng) {
  Tally t("blow-up reduction");
  std::size_t charts = 0;
  std::vector<germ::OrthantGerm> drivers;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& g : germ::all_normalized_germs(d)) {
      drivers.push_back(g);
      const auto center = germ::disconnecting_coords(g);
      const int e = static_cast<int>(center.size());
      if (e < 2) continue;
      const auto out = drill::blowup_charts(g, center);
      for (const auto& cell : drill::all_cells(center.size())) {
        const auto it = out.find(cell);
        const std::string tag = drill::cell_to_string(cell) + " of " + germ_text(g);
        if (it != out.end()) {
          ++charts;
          t.check(germ::e_value(it->second) <= e - 1, "e does not drop on chart " + tag);
        }
        const auto oracle = drill::chart_numeric_oracle(g, center, cell, drill::Sheet::kPositive, 4, rng);
        const bool agree = it == out.end() ? !oracle.has_value() : (oracle && *oracle == it->second);
        t.check(agree, "numeric chart oracle disagrees on " + tag);
      }
    }
  }
  for (int i = 0; i < 500; ++i) drivers.push_back(random_germ(4, rng));
  for (const auto& g : drivers) {
    try {
      const auto tree = drill::desingularize(g, 4);
      bool leaves_ok = true;
      for (const auto* leaf : drill::tree_leaves(tree)) leaves_ok = leaves_ok && germ::e_value(leaf->germ) == 0;
      t.check(leaves_ok, "a leaf has e > 0 for " + germ_text(g));
    } catch (const std::exception& ex) {
      t.check(false, std::string(ex.what()) + " for " + germ_text(g));
    }
  }
  return t.verdict(std::to_string(charts) + " charts; " + std::to_string(drivers.size()) + " germs desingularized");
}

Verdict strict_transforms(Rng& rng) {
  Tally t("strict-transform identities");
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int e = 0; e <= 2; ++e) {
      for (const auto& eps : germ::all_sign_vectors(static_cast<std::size_t>(n))) {
        germ::SignVector anti = eps;
        for (auto& s : anti) s = -s;
        const std::string tag = "(e=" + std::to_string(e) + ", d-e=" + std::to_string(n) + ")";
        t.check(!drill::transforms_intersection_dim(eps, anti, e).has_value(), "antipodal pair not empty " + tag);
        // Normal form: agree on the first m - e entries, opposite after.
        for (int m = e; m <= e + n; ++m) {
          germ::SignVector other = eps;
          for (int j = m - e; j < n; ++j) other[static_cast<std::size_t>(j)] = -other[static_cast<std::size_t>(j)];
          const auto dim = drill::transforms_intersection_dim(eps, other, e);
          if (m == e) {
            t.check(!dim.has_value(), "m = e pair not empty " + tag);
          } else {
            t.check(dim.has_value() && *dim == m, "normal-form pair with m=" + std::to_string(m) + " " + tag);
          }
        }
        if (eps.front() < 0) continue;  // one representative per antipodal pair
        ++pairs;
        const auto a = drill::strict_transform_orthant(eps, e).atoms[0];
        const auto b = drill::strict_transform_orthant(anti, e).atoms[0];
        const auto found = drill::search_common_points(a, b, 10000, 1e-9, rng);
        t.check(found.cross_members == 0 && found.close_pairs == 0, "sampled common point for an antipodal pair " + tag);
      }
    }
  }
  return t.verdict(std::to_string(pairs) + " antipodal pairs sampled with 10000 points each");
}

algdrill::CenterData plane_line() {
  const poly::VarList v{"x", "y"};
  return {v, {}, {MPoly::variable(v, "x")}, {{0.0, 0.0}}};
}

Verdict algebraic_double(Rng& rng) {
  Tally t("algebraic double sanity");
  const auto c = plane_line();
  const auto both = algdrill::emit_twisted_double(c, algdrill::Side::kBoth);
  const auto plus = algdrill::emit_twisted_double(c, algdrill::Side::kPlus);
  const poly::VarList v{"x", "y", "u"};
  const MPoly u = MPoly::variable(v, "u");
  t.check(both.vars == v, "variables are not (x, y, u)");
  t.check(both.equations.size() == 1 && both.equations[0] == u * u - MPoly::constant(v, Rat(1)),
          "equations are not {u^2 - 1}");
  t.check(plus.inequalities.size() == 1 && plus.inequalities[0].poly == u * MPoly::variable(v, "x"),
          "side inequality is not u x >= 0");
  // On u = +-1 the side is {x >= 0, u = 1} union {x <= 0, u = -1}.
  for (int i = -8; i <= 8; ++i) {
    for (int sign : {-1, 1}) {
      const std::vector<Rat> pt{ratio(i, 4), Rat(3), Rat(sign)};
      const bool in = poly::eval(plus.inequalities[0].poly, pt) >= 0;
      const bool described = (i >= 0 && sign == 1) || (i <= 0 && sign == -1);
      t.check(vanishes_exactly(plus, pt), "u = +-1 does not solve the equations");
      t.check(in == described, "two-line description fails at x=" + format_rat(ratio(i, 4)));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (std::abs(x[0]) <= 1e-9) continue;
    const auto p = algdrill::lift_point(c, x, algdrill::Side::kPlus);
    t.check(max_residual(plus, p) <= 1e-9 && satisfies_inequalities(plus, p, 1e-9), "lifted sample off the side");
  }
  for (double y : {3.0, -1.5, 0.25}) {
    const auto fib = algdrill::verify_fiber(c, {0.0, y}, 16, rng);
    t.check(fib.ok && fib.distinct_points == 2, "fiber over (0," + std::to_string(y) + "): " + fib.message);
  }
  const poly::VarList s3{"x", "y", "z"};
  const MPoly x = MPoly::variable(s3, "x"), y = MPoly::variable(s3, "y"), z = MPoly::variable(s3, "z");
  const algdrill::CenterData sphere{s3, {x * x + y * y + z * z - MPoly::constant(s3, Rat(1))}, {z}, {{1.0, 0.0, 0.0}}};
  const auto fib = algdrill::verify_fiber(sphere, {1.0, 0.0, 0.0}, 16, rng);
  t.check(fib.ok && fib.distinct_points == 2, "sphere fiber: " + fib.message);
  const auto theta = algdrill::theta_check(c, 100, rng);
  t.check(theta.ok && theta.cardinality_two == 100, "theta fibers: " + std::to_string(theta.cardinality_two) + " of 100 have two points");
  return t.verdict("equations, sides, fibers and theta");
}

Verdict fold_certification(Rng&) {
  Tally t("fold certification");
  const std::vector<corners::FoldParams> params{{Rat(1), 1}, {ratio(1, 2), 2}, {ratio(1, 2), 6}};
  for (const auto& p : params) {
    for (const auto& v : corners::fold_certify(p)) t.check(v.pass, v.name + ": " + v.witness);
  }
  const double f = corners::fold_eval({ratio(1, 2), 2}, 0.5);
  t.check(std::abs(f - std::sqrt(0.5)) <= 1e-12, "fold_eval(1/2, 2, 1/2) = " + std::to_string(f));
  for (const auto& p : params) {
    for (const auto& v : corners::junction_check(p, ratio(1, 1000), 1e-6)) t.check(v.pass, v.witness);
  }
  return t.verdict("T0, Ta, MONO, LE, value at 1/2 and junction differences");
}

Verdict double_round_trips(Rng& rng) {
  Tally t("double round trips");
  const poly::VarList x1{"x"};
  const poly::VarList xy{"x", "y"};
  const MPoly one = MPoly::constant(xy, Rat(1));
  const MPoly x = MPoly::variable(xy, "x");
  const MPoly y = MPoly::variable(xy, "y");
  struct Case {
    std::string name;
    corners::CornersSpec spec;
    std::vector<double> lo, hi;
    std::vector<std::vector<Rat>> witnesses;
  };
  const std::vector<Case> cases{
      {"parabola", {x1, {MPoly::variable(x1, "x")}}, {0.0}, {4.0},
       {{Rat(0), Rat(0)}, {Rat(4), Rat(2)}, {Rat(4), Rat(-2)}}},
      {"square", {xy, {x, one - x, y, one - y}}, {0.0, 0.0}, {1.0, 1.0},
       {{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)},
        {Rat(1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)},
        {Rat(1), Rat(1), Rat(1), Rat(0), Rat(1), Rat(0)},
        {Rat(0), Rat(1), Rat(0), Rat(1), Rat(1), Rat(0)}}},
      {"half-disc", {xy, {one - x * x - y * y, y}}, {-1.0, 0.0}, {1.0, 1.0},
       {{Rat(0), Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(1)}}},
  };
  for (const auto& c : cases) {
    const auto sys = corners::emit_double(c.spec);
    int accepted = 0;
    while (accepted < 1000) {
      std::vector<double> pt;
      for (std::size_t i = 0; i < c.lo.size(); ++i) pt.push_back(rng.uniform(c.lo[i], c.hi[i]));
      bool inside = true;
      for (const auto& h : c.spec.inequalities) inside = inside && poly::eval(h, pt) >= 0;
      if (!inside) continue;
      ++accepted;
      const auto z = corners::section_plus(c.spec, pt);
      t.check(corners::project(c.spec, z) == pt, c.name + ": projection of the section is not the identity");
      t.check(max_residual(sys, z) <= 1e-9, c.name + ": section misses the equations");
      t.check(corners::section_plus(c.spec, corners::project(c.spec, z)) == z, c.name + ": section of projection");
    }
    for (const auto& w : c.witnesses) t.check(vanishes_exactly(sys, w), c.name + ": witness is not on the double");
    const auto smooth = corners::smoothness_check(c.spec, c.witnesses);
    t.check(smooth.ok, c.name + ": rank deficiency at witness " + std::to_string(smooth.witness.value_or(0)));
  }
  return t.verdict("3 specs, 1000 samples each");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Table reproduction", 1.0, table_reproduction},
      {2, "Euler oracle equivalence", 10.0, euler_equivalence},
      {3, "Regularity certificates", 10.0, regularity_certificates},
      {4, "Germ lemma suite", 30.0, germ_lemmas},
      {5, "Blow-up reduction", 60.0, blowup_reduction},
      {6, "Strict-transform identities", 10.0, strict_transforms},
      {7, "Algebraic double sanity", 5.0, algebraic_double},
      {8, "Fold certification", 5.0, fold_certification},
      {9, "Double round trips", 5.0, double_round_trips},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, std::uint64_t seed) {
  Rng rng = Rng(seed).split(static_cast<std::uint64_t>(c.id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult out;
  out.id = c.id;
  out.title = c.title;
  out.budget_seconds = c.budget_seconds;
  try {
    out.verdict = c.run(rng);
  } catch (const std::exception& ex) {
    out.verdict = {c.title, false, std::string("exception: ") + ex.what()};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.within_budget = out.seconds < out.budget_seconds;
  return out;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c, seed));
  return out;
}

}  // namespace cornerforge::suite
