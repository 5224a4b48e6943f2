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

#include "cornerforge/drill_local.hpp"
#include "cornerforge/error.hpp"

namespace cornerforge::drill {
namespace {

using germ::e_value;
using germ::make_germ;
using germ::OrthantGerm;
using germ::SignVector;

const std::vector<int> kPlane{1, 2};

SphereCell neg(SphereCell c) {
  for (auto& v : c) v = -v;
  return c;
}

// Raw chart orthants, or none when the cell is not reached.
std::set<SignVector> raw_or_empty(const OrthantGerm& g, const std::vector<int>& center,
                                  const SphereCell& cell, Sheet sheet) {
  const auto c = blowup_chart(g, center, cell, sheet);
  return c ? c->raw.orthants : std::set<SignVector>{};
}

TEST(Descriptors, IntersectionExamples) {
  EXPECT_FALSE(transforms_intersection_dim({1, 1}, {-1, -1}, 0).has_value());
  EXPECT_EQ(transforms_intersection_dim({1, 1, 1}, {1, -1, -1}, 1), 2);
  EXPECT_EQ(transforms_intersection_dim({1, -1, 1}, {1, -1, 1}, 2), 5);
  EXPECT_THROW(transforms_intersection_dim({1}, {1, 1}, 0), Error);
}

TEST(Descriptors, DivisorPreimage) {
  const auto d = divisor_preimage(2, 0, 2);
  ASSERT_EQ(d.atoms.size(), 2u);
  EXPECT_EQ(d.atoms[0].rho, RhoDomain::kZero);
  EXPECT_EQ(d.atoms[1].sphere[1], SphereConstraint::kZero);
  EXPECT_THROW(divisor_preimage(1, 1, 3), Error);
  EXPECT_THROW(divisor_preimage(4, 0, 3), Error);
}

TEST(Descriptors, SamplesStayInTheirAtom) {
  Rng rng(2);
  const Atom a = strict_transform_orthant({1, -1, 1}, 1).atoms[0];
  for (int i = 0; i < 500; ++i) {
    const auto p = sample_atom(a, rng);
    const std::vector<double> y(p.begin(), p.begin() + 1);
    const std::vector<double> w(p.begin() + 2, p.end());
    EXPECT_TRUE(a.contains(y, p[1], w, 1e-12));
  }
}

TEST(DescriptorProperty, AntipodalPairsHaveNoCommonSamples) {
  Rng rng(4);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& eps : germ::all_sign_vectors(static_cast<std::size_t>(n))) {
      SignVector anti = eps;
      for (auto& s : anti) s = -s;
      ASSERT_FALSE(transforms_intersection_dim(eps, anti, 1).has_value());
      const auto r = search_common_points(strict_transform_orthant(eps, 1).atoms[0],
                                          strict_transform_orthant(anti, 1).atoms[0], 500, 1e-9, rng);
      EXPECT_EQ(r.cross_members, 0u);
      EXPECT_EQ(r.close_pairs, 0u);
    }
  }
}

TEST(Cells, StringRoundTrip) {
  EXPECT_EQ(cell_to_string({1, 0, -1}), "+0-");
  EXPECT_EQ(cell_from_string("-+0"), (SphereCell{-1, 1, 0}));
  EXPECT_THROW(cell_from_string("+x"), Error);
  EXPECT_EQ(all_cells(3).size(), 26u);
}

TEST(TwistedCharts, DiagonalExample) {
  const auto g = make_germ(2, {{1, 1}, {-1, -1}});
  const auto charts = blowup_charts(g, kPlane, Sheet::kTwisted);
  const auto& side = charts.at({1, 0});
  EXPECT_EQ(side.rank(), 1u);
  EXPECT_EQ(side.orthants, (std::set<SignVector>{{1}}));
  EXPECT_EQ(e_value(side), 0);
  EXPECT_TRUE(charts.at({1, 1}).divisor.empty());
  EXPECT_EQ(charts.count({1, -1}), 0u);
}

TEST(TwistedCharts, ThirdCoordinateExample) {
  const auto g = make_germ(3, {{1, 1, 1}, {-1, -1, 1}});
  const auto charts = blowup_charts(g, kPlane, Sheet::kTwisted);
  const auto& c = charts.at({1, 0});
  EXPECT_EQ(c.divisor, (std::vector<int>{2, 3}));
  EXPECT_EQ(c.orthants, (std::set<SignVector>{{1, 1}}));
}

TEST(TwistedCharts, CornerStaysCorner) {
  const auto charts = blowup_charts(make_germ(2, {{1, 1}}), kPlane, Sheet::kTwisted);
  for (const auto& [cell, c] : charts) EXPECT_EQ(e_value(c), 0) << cell_to_string(cell);
  EXPECT_EQ(charts.at({1, 1}).orthants.size(), 1u);
}

TEST(PositiveCharts, DiagonalExample) {
  const auto g = make_germ(2, {{1, 1}, {-1, -1}});
  const auto charts = blowup_charts(g, kPlane);
  // rho >= 0 on the positive sheet.
  EXPECT_EQ(charts.at({1, 1}).divisor, (std::vector<int>{1}));
  EXPECT_EQ(charts.at({1, 1}).orthants, (std::set<SignVector>{{1}}));
  EXPECT_EQ(charts.at({1, 0}).orthants, (std::set<SignVector>{{1, 1}}));
  EXPECT_EQ(charts.at({-1, 0}).orthants, (std::set<SignVector>{{1, -1}}));
  EXPECT_EQ(charts.count({1, -1}), 0u);
}

TEST(PositiveCharts, ThreeQuadrantsReduce) {
  // On the twisted sheet the cell (0,-) reproduces this germ; one-sided it does not.
  const auto g = make_germ(2, {{-1, -1}, {-1, 1}, {1, -1}});
  ASSERT_EQ(e_value(g), 2);
  EXPECT_EQ(e_value(blowup_charts(g, kPlane, Sheet::kTwisted).at({0, -1})), 2);
  for (const auto& [cell, c] : blowup_charts(g, kPlane)) EXPECT_LE(e_value(c), 1) << cell_to_string(cell);
}

TEST(Charts, CenterMustHaveCodimensionTwo) {
  try {
    blowup_charts(make_germ(2, {{1, 1}, {-1, -1}}), {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "center must have codimension >= 2 in divisor");
  }
}

TEST(ChartProperty, ReductionAndOracleExhaustive) {
  Rng rng(13);
  for (int d = 2; d <= 3; ++d) {
    for (const auto& g : germ::all_normalized_germs(d)) {
      const int e = e_value(g);
      if (e < 2) continue;
      const auto center = germ::disconnecting_coords(g);
      const auto charts = blowup_charts(g, center);
      for (const auto& cell : all_cells(center.size())) {
        const auto it = charts.find(cell);
        if (it != charts.end()) EXPECT_LE(e_value(it->second), e - 1);
        for (Sheet sheet : {Sheet::kPositive, Sheet::kTwisted}) {
          const auto chart = blowup_chart(g, center, cell, sheet);
          const auto oracle = chart_numeric_oracle(g, center, cell, sheet, 4, rng);
          ASSERT_EQ(chart.has_value(), oracle.has_value()) << cell_to_string(cell);
          if (chart) EXPECT_EQ(chart->normalized, *oracle);
          const auto last = blowup_chart(g, center, cell, sheet, PivotRule::kLast);
          ASSERT_EQ(chart.has_value(), last.has_value());
          if (chart) EXPECT_EQ(e_value(chart->normalized), e_value(last->normalized));
        }
      }
    }
  }
}

TEST(ChartProperty, WeakMonotonicityForSubCenters) {
  for (const auto& g : germ::all_normalized_germs(3)) {
    const auto dis = germ::disconnecting_coords(g);
    if (dis.size() < 3) continue;
    for (std::size_t skip = 0; skip < dis.size(); ++skip) {
      std::vector<int> sub;
      for (std::size_t j = 0; j < dis.size(); ++j) {
        if (j != skip) sub.push_back(dis[j]);
      }
      for (const auto& [cell, c] : blowup_charts(g, sub)) EXPECT_LE(e_value(c), e_value(g));
    }
  }
}

TEST(ChartProperty, TwistedIsPositiveUnionAntipode) {
  for (int d = 2; d <= 3; ++d) {
    for (const auto& g : germ::all_normalized_germs(d)) {
      if (g.rank() < 2) continue;
      const std::vector<int> center(g.divisor.begin(), g.divisor.begin() + 2);
      for (const auto& cell : all_cells(2)) {
        const auto twisted = blowup_chart(g, center, cell, Sheet::kTwisted);
        const auto pos = blowup_chart(g, center, cell, Sheet::kPositive);
        const auto anti = blowup_chart(g, center, neg(cell), Sheet::kPositive);
        ASSERT_EQ(twisted.has_value(), pos.has_value() || anti.has_value());
        if (!twisted) continue;
        std::vector<int> flip{twisted->rho_coord};
        flip.insert(flip.end(), twisted->residual_w.begin(), twisted->residual_w.end());
        std::set<SignVector> joined = raw_or_empty(g, center, cell, Sheet::kPositive);
        if (anti) {
          const auto back = flip_coords(anti->raw, flip).orthants;
          joined.insert(back.begin(), back.end());
        }
        EXPECT_EQ(joined, twisted->raw.orthants);
        // The involution: the chart at -sigma is the chart at sigma with rho
        // and the residual sphere coordinates reversed.
        const auto opposite = blowup_chart(g, center, neg(cell), Sheet::kTwisted);
        ASSERT_TRUE(opposite.has_value());
        EXPECT_EQ(flip_coords(opposite->raw, flip).orthants, twisted->raw.orthants);
      }
    }
  }
}

TEST(Desingularize, Examples) {
  const auto diag = desingularize(make_germ(2, {{1, 1}, {-1, -1}}), 8);
  EXPECT_EQ(tree_depth(diag), 1);
  for (const auto* leaf : tree_leaves(diag)) EXPECT_EQ(e_value(leaf->germ), 0);
  EXPECT_EQ(tree_depth(desingularize(make_germ(2, {{1, 1}}), 8)), 0);
  const auto cube = desingularize(make_germ(3, {{1, 1, 1}, {-1, -1, -1}}), 8);
  for (const auto& [cell, child] : cube.children) EXPECT_LE(e_value(child.germ), 2);
  for (const auto* leaf : tree_leaves(cube)) EXPECT_EQ(leaf->germ.orthants.size(), 1u);
  EXPECT_THROW(desingularize(make_germ(2, {{1, 1}, {-1, -1}}), 0), Error);
}

TEST(DesingularizeProperty, TerminatesWithinDepthFour) {
  Rng rng(21);
  std::vector<OrthantGerm> germs;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& g : germ::all_normalized_germs(d)) germs.push_back(g);
  }
  for (int i = 0; i < 200; ++i) {
    std::set<SignVector> f;
    for (const auto& v : germ::all_sign_vectors(4)) {
      if (rng.coin()) f.insert(v);
    }
    if (!f.empty()) germs.push_back(make_germ(4, f));
  }
  for (const auto& g : germs) {
    const auto tree = desingularize(g, 4);
    EXPECT_LE(tree_depth(tree), 4);
    for (const auto* leaf : tree_leaves(tree)) EXPECT_TRUE(germ::is_corner_germ(leaf->germ));
  }
}

}  // namespace
}  // namespace cornerforge::drill
