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


#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "cornerforge/error.hpp"
#include "cornerforge/rng.hpp"
#include "cornerforge/surface.hpp"

namespace cornerforge::surface {
namespace {

using poly::MPoly;

const poly::VarList kXY{"x", "y"};

ConvexPolygon unit_square() {
  return polygon_from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
}

MPoly form(const Rat& c, const Rat& a, const Rat& b) {
  return MPoly::from_terms(kXY, {{{0, 0}, c}, {{1, 0}, a}, {{0, 1}, b}});
}

// Expected grid, rows n = 3..7 and columns s = 2..7; -1 marks "--".
constexpr int kExpected[5][6] = {{-1, 0, -1, -1, -1, -1},
                                  {1, 1, 1, -1, -1, -1},
                                  {-1, 2, 3, 5, -1, -1},
                                  {2, 3, 5, 9, 17, -1},
                                  {-1, 4, 7, 13, 25, 49}};

// Oracle: is there a proper coloring of the n-cycle using exactly s colors?
bool cycle_colorable(int n, int s) {
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<bool(int)> go = [&](int i) {
    if (i == n) {
      if (color[0] == color[static_cast<std::size_t>(n - 1)]) return false;
      std::vector<bool> used(static_cast<std::size_t>(s), false);
      for (int c : color) used[static_cast<std::size_t>(c)] = true;
      return std::find(used.begin(), used.end(), false) == used.end();
    }
    for (int c = 0; c < s; ++c) {
      if (i > 0 && color[static_cast<std::size_t>(i - 1)] == c) continue;
      color[static_cast<std::size_t>(i)] = c;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

TEST(Polygon, EdgeForms) {
  const auto sq = unit_square();
  EXPECT_EQ(sq.edges, (std::vector<MPoly>{form(0, 0, 1), form(1, -1, 0), form(1, 0, -1), form(0, 1, 0)}));
  const auto tri = polygon_from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  EXPECT_EQ(tri.edges, (std::vector<MPoly>{form(0, 0, 1), form(1, -1, -1), form(0, 1, 0)}));
  const auto pent = polygon_from_vertices(
      {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(3), Rat(1)}, {Rat(1), Rat(3)}, {Rat(0), Rat(2)}});
  ASSERT_EQ(pent.edges.size(), 5u);
  for (const auto& h : pent.edges) {
    EXPECT_EQ(h.total_degree(), 1u);
    EXPECT_GT(poly::eval(h, poly::Assignment{{"x", Rat(1)}, {"y", Rat(1)}}), 0);
  }
}

TEST(Polygon, RejectsDegenerateInput) {
  EXPECT_THROW(polygon_from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}), Error);
  EXPECT_THROW(polygon_from_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}}), Error);
  EXPECT_THROW(polygon_from_vertices({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}}), Error);
  EXPECT_THROW(polygon_from_vertices({{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}}),
               Error);
}

TEST(Polygon, LatticePolygonsAreConvex) {
  for (int n = 3; n <= 10; ++n) {
    const auto p = lattice_polygon(n);
    const auto c = centroid(p);
    for (const auto& h : p.edges) EXPECT_GT(poly::eval(h, poly::Assignment{{"x", c.first}, {"y", c.second}}), 0);
  }
}

TEST(Compatibility, Examples) {
  const auto sq = unit_square();
  EXPECT_TRUE(check_compatibility(sq, EdgePartition{{{1, 3}, {2, 4}}}));
  EXPECT_FALSE(check_compatibility(sq, EdgePartition{{{1, 2}, {3, 4}}}));
  EXPECT_TRUE(check_compatibility(lattice_polygon(3), EdgePartition{{{1}, {2}, {3}}}));
  EXPECT_THROW(check_compatibility(sq, EdgePartition{{{1, 3}, {2}}}), Error);
  EXPECT_THROW(check_compatibility(sq, EdgePartition{{{1, 3}, {2, 4}, {}}}), Error);
}

TEST(CompatibilityProperty, GeometricAndCyclicTestsAgree) {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.integer(3, 10));
    const int s = static_cast<int>(rng.integer(1, n));
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(s));
    for (int i = 1; i <= n; ++i) {
      const auto k = static_cast<std::size_t>(i <= s ? i - 1 : rng.integer(0, s - 1));
      classes[k].push_back(i);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    const EdgePartition j{classes};
    const auto p = lattice_polygon(n);
    EXPECT_EQ(compatible_geometric(p, j), compatible_cyclic(j, static_cast<std::size_t>(n)));
  }
}

TEST(Partitions, CountsAreStirlingNumbers) {
  EXPECT_EQ(all_partitions(4, 2).size(), 7u);
  EXPECT_EQ(all_partitions(5, 3).size(), 25u);
  EXPECT_EQ(all_partitions(6, 6).size(), 1u);
  const auto c = canonical_partition(6, 2);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->classes, (std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}}));
  EXPECT_FALSE(canonical_partition(5, 2).has_value());
}

TEST(Emit, SquareTorus) {
  const auto sys = emit_surface(unit_square(), EdgePartition{{{1, 3}, {2, 4}}});
  EXPECT_EQ(sys.vars, (poly::VarList{"x", "y", "t1", "t2"}));
  const MPoly x = MPoly::variable(sys.vars, "x"), y = MPoly::variable(sys.vars, "y");
  const MPoly t1 = MPoly::variable(sys.vars, "t1"), t2 = MPoly::variable(sys.vars, "t2");
  const MPoly one = MPoly::constant(sys.vars, Rat(1));
  ASSERT_EQ(sys.equations.size(), 2u);
  EXPECT_EQ(sys.equations[0], t1 * t1 - y * (one - y));
  EXPECT_EQ(sys.equations[1], t2 * t2 - x * (one - x));
  EXPECT_EQ(sys.inequalities.size(), 4u);
  EXPECT_THROW(emit_surface(unit_square(), EdgePartition{{{1, 2}, {3, 4}}}), Error);
}

TEST(Emit, TriangleAndHexagon) {
  EXPECT_EQ(emit_surface(lattice_polygon(3), EdgePartition{{{1}, {2}, {3}}}).equations.size(), 3u);
  EXPECT_EQ(emit_surface(lattice_polygon(6), *canonical_partition(6, 2)).vars.size(), 4u);
}

TEST(EmitProperty, SignSymmetry) {
  Rng rng(3);
  const auto sys = emit_surface(lattice_polygon(6), *canonical_partition(6, 3));
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> pt;
    for (std::size_t k = 0; k < sys.vars.size(); ++k) pt.push_back(ratio(rng.integer(-9, 9), rng.integer(1, 4)));
    std::vector<Rat> flipped = pt;
    const auto k = static_cast<std::size_t>(rng.integer(2, static_cast<std::int64_t>(pt.size()) - 1));
    flipped[k] = -flipped[k];
    for (const auto& e : sys.equations) EXPECT_EQ(poly::eval(e, pt), poly::eval(e, flipped));
  }
}

TEST(Regularity, Square) {
  const auto r = verify_regularity(unit_square(), EdgePartition{{{1, 3}, {2, 4}}});
  EXPECT_TRUE(r.ok) << r.witness;
  EXPECT_EQ(r.points, 9u);
}

TEST(RegularityProperty, AllCompatibleInstancesUpToHexagons) {
  for (int n = 3; n <= 6; ++n) {
    const auto p = lattice_polygon(n);
    for (int s = 2; s <= n; ++s) {
      for (const auto& j : all_partitions(n, s)) {
        if (!check_compatibility(p, j)) continue;
        const auto r = verify_regularity(p, j);
        EXPECT_TRUE(r.ok) << r.witness;
      }
    }
  }
}

TEST(Formulas, Examples) {
  EXPECT_EQ(genus_formula(6, 6), 17);
  EXPECT_EQ(genus_formula(7, 7), 49);
  EXPECT_FALSE(genus_formula(3, 2).has_value());
  const auto a = euler_formula(6, 2);
  EXPECT_EQ((std::vector<long>{a.v, a.e, a.f, a.chi}), (std::vector<long>{6, 12, 4, -2}));
  const auto b = euler_formula(4, 2);
  EXPECT_EQ((std::vector<long>{b.v, b.e, b.f, b.chi}), (std::vector<long>{4, 8, 4, 0}));
  const auto c = euler_formula(3, 3);
  EXPECT_EQ((std::vector<long>{c.v, c.e, c.f, c.chi}), (std::vector<long>{6, 12, 8, 2}));
  EXPECT_THROW(euler_formula(3, 2), Error);
}

TEST(FormulaProperty, ValidityMatchesCycleColorings) {
  for (int n = 3; n <= 9; ++n) {
    for (int s = 2; s <= 10; ++s) {
      const long long scaled = (n - 4) * (1LL << s) / 8 + 1;  // exact when s >= 3
      const bool integral = s >= 3 || (n - 4) % 2 == 0;
      const bool valid = s <= n && cycle_colorable(n, s) && integral && scaled >= 0;
      EXPECT_EQ(genus_formula(n, s).has_value(), valid) << n << "," << s;
      if (valid) EXPECT_EQ(*genus_formula(n, s), scaled);
    }
  }
}

TEST(Quotient, Examples) {
  const auto sq = quotient_complex(unit_square(), EdgePartition{{{1, 3}, {2, 4}}});
  EXPECT_EQ((std::vector<long>{sq.v, sq.e, sq.f, sq.chi}), (std::vector<long>{4, 8, 4, 0}));
  EXPECT_TRUE(sq.connected);
  EXPECT_TRUE(sq.orientable);
  EXPECT_EQ(sq.genus, 1);
  const auto tri = quotient_complex(lattice_polygon(3), EdgePartition{{{1}, {2}, {3}}});
  EXPECT_EQ((std::vector<long>{tri.v, tri.e, tri.f, tri.chi}), (std::vector<long>{6, 12, 8, 2}));
  EXPECT_EQ(tri.genus, 0);
  const auto hex = quotient_complex(lattice_polygon(6), *canonical_partition(6, 2));
  EXPECT_EQ(hex.chi, -2);
  EXPECT_EQ(hex.genus, 2);
}

TEST(QuotientProperty, AgreesWithEulerFormula) {
  for (int n = 3; n <= 8; ++n) {
    const auto p = lattice_polygon(n);
    for (int s = 2; s <= 5; ++s) {
      for (const auto& j : all_partitions(n, s)) {
        if (!check_compatibility(p, j)) continue;
        const auto q = quotient_complex(p, j);
        const auto f = euler_formula(n, s);
        EXPECT_EQ(q.chi, f.chi);
        EXPECT_EQ(q.v, f.v);
        EXPECT_EQ(q.e, f.e);
        EXPECT_TRUE(q.connected);
        EXPECT_TRUE(q.orientable);
      }
    }
  }
}

TEST(Table, MatchesExpectedGrid) {
  const std::string t = table(7, 7);
  std::istringstream in(t);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n\\s    s=2  s=3  s=4  s=5  s=6  s=7");
  for (int r = 0; r < 5; ++r) {
    ASSERT_TRUE(std::getline(in, line));
    std::istringstream row(line);
    std::string label;
    row >> label;
    EXPECT_EQ(label, "n=" + std::to_string(r + 3));
    for (int c = 0; c < 6; ++c) {
      std::string cell;
      row >> cell;
      EXPECT_EQ(cell, kExpected[r][c] < 0 ? "--" : std::to_string(kExpected[r][c])) << line;
    }
  }
}

}  // namespace
}  // namespace cornerforge::surface
