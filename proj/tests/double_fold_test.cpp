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
#include <cmath>

#include "cornerforge/double_fold.hpp"
#include "cornerforge/error.hpp"
#include "cornerforge/rng.hpp"

namespace cornerforge::corners {
namespace {

using poly::MPoly;

const poly::VarList kX{"x"};
const poly::VarList kXY{"x", "y"};

MPoly v(const poly::VarList& vars, const char* name) { return MPoly::variable(vars, name); }
MPoly one(const poly::VarList& vars) { return MPoly::constant(vars, Rat(1)); }

CornersSpec parabola() { return {kX, {v(kX, "x")}}; }
CornersSpec square() {
  return {kXY, {v(kXY, "x"), one(kXY) - v(kXY, "x"), v(kXY, "y"), one(kXY) - v(kXY, "y")}};
}
CornersSpec half_disc() {
  return {kXY, {one(kXY) - v(kXY, "x") * v(kXY, "x") - v(kXY, "y") * v(kXY, "y"), v(kXY, "y")}};
}

const std::vector<FoldParams> kParams{{Rat(1), 1}, {ratio(1, 2), 2}, {ratio(1, 2), 6}};

TEST(Double, EmitExamples) {
  const auto p = emit_double(parabola());
  EXPECT_EQ(p.vars, (poly::VarList{"x", "t"}));
  ASSERT_EQ(p.equations.size(), 1u);
  EXPECT_EQ(p.equations[0], v(p.vars, "t") * v(p.vars, "t") - v(p.vars, "x"));
  const auto s = emit_double(square(), true);
  EXPECT_EQ(s.vars.size(), 6u);
  EXPECT_EQ(s.equations.size(), 4u);
  EXPECT_EQ(s.inequalities.size(), 4u);
  const auto h = emit_double(half_disc());
  EXPECT_EQ(h.equations[0], v(h.vars, "t1") * v(h.vars, "t1") - one(h.vars) + v(h.vars, "x") * v(h.vars, "x") +
                                v(h.vars, "y") * v(h.vars, "y"));
  EXPECT_EQ(h.equations[1], v(h.vars, "t2") * v(h.vars, "t2") - v(h.vars, "y"));
}

TEST(Double, SectionExamples) {
  EXPECT_EQ(section_plus(parabola(), {4.0}), (std::vector<double>{4.0, 2.0}));
  EXPECT_EQ(section_plus(parabola(), {0.0}), (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(section_plus(half_disc(), {0.0, 0.0}), (std::vector<double>{0.0, 0.0, 1.0, 0.0}));
  EXPECT_EQ(section_plus(parabola(), {-1e-13}), (std::vector<double>{-1e-13, 0.0}));
  try {
    section_plus(parabola(), {-0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "point outside Q");
  }
}

TEST(Double, SmoothnessExamples) {
  EXPECT_EQ(smoothness_check(parabola(), {{Rat(0), Rat(0)}}).ranks, (std::vector<std::size_t>{1}));
  const auto sq = smoothness_check(square(), {{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)}});
  EXPECT_TRUE(sq.ok);
  EXPECT_EQ(sq.ranks[0], 4u);
  EXPECT_EQ(smoothness_check(half_disc(), {{Rat(0), Rat(0), Rat(1), Rat(0)}}).ranks[0], 2u);
  // x^2 >= 0 doubles to a singular cone at the origin.
  const CornersSpec cone{kX, {v(kX, "x") * v(kX, "x")}};
  const auto bad = smoothness_check(cone, {{Rat(1), Rat(1)}, {Rat(0), Rat(0)}});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.witness, 1u);
  EXPECT_TRUE(smoothness_check_numeric(half_disc(), {{0.6, 0.0, 0.8, 0.0}}).ok);
}

TEST(DoubleProperty, SectionRoundTripAndSignFlips) {
  Rng rng(6);
  for (const auto& spec : {parabola(), square(), half_disc()}) {
    const auto sys = emit_double(spec);
    const std::size_t n = spec.vars.size();
    int kept = 0;
    while (kept < 300) {
      std::vector<double> x(n);
      for (auto& c : x) c = rng.uniform(-1.2, 1.2);
      std::vector<double> z;
      try {
        z = section_plus(spec, x);
      } catch (const Error&) {
        continue;
      }
      ++kept;
      EXPECT_EQ(project(spec, z), x);
      EXPECT_EQ(section_plus(spec, project(spec, z)), z);
      EXPECT_LE(max_residual(sys, z), 1e-9);
      const auto mask = rng.integer(0, (1 << spec.inequalities.size()) - 1);
      for (std::size_t i = 0; i < spec.inequalities.size(); ++i) {
        if ((mask >> i) & 1) z[n + i] = -z[n + i];
      }
      EXPECT_LE(max_residual(sys, z), 1e-9);
    }
  }
}

TEST(Fold, SymbolicMatchesBinomialExpansion) {
  for (const auto& p : kParams) {
    // sigma = sum_j C(2k, j) (-1)^j (t/a)^(2kj)
    const poly::VarList t{"t"};
    MPoly sigma(t);
    BigInt c = 1;
    for (int j = 0; j <= 2 * p.k; ++j) {
      if (j > 0) c = c * (2 * p.k - j + 1) / j;
      Rat coeff(c);
      if (j % 2) coeff = -coeff;
      Rat scale = 1;
      for (int i = 0; i < 2 * p.k * j; ++i) scale /= p.a;
      sigma += MPoly::from_terms(t, {{{static_cast<unsigned>(2 * p.k * j)}, coeff * scale}});
    }
    EXPECT_EQ(fold_sigma(p), sigma);
    const auto f = fold_symbolic(p);
    EXPECT_EQ(f.p, sigma * v(t, "t"));
    EXPECT_EQ(f.q, one(t) - sigma);
    EXPECT_EQ(poly::eval(f.p, poly::Assignment{{"t", Rat(0)}}), 0);
    EXPECT_EQ(poly::eval(f.q, poly::Assignment{{"t", Rat(0)}}), 0);
    EXPECT_EQ(poly::eval(f.p, poly::Assignment{{"t", p.a}}), 0);
    EXPECT_EQ(poly::eval(f.q, poly::Assignment{{"t", p.a}}), 1);
  }
  const auto k1 = fold_symbolic({Rat(1), 1});
  EXPECT_EQ(k1.p, MPoly::from_terms({"t"}, {{{1}, Rat(1)}, {{3}, Rat(-2)}, {{5}, Rat(1)}}));
  EXPECT_EQ(k1.q, MPoly::from_terms({"t"}, {{{2}, Rat(2)}, {{4}, Rat(-1)}}));
}

TEST(Fold, EvalExamples) {
  EXPECT_NEAR(fold_eval({ratio(1, 2), 2}, 0.5), std::sqrt(0.5), 1e-12);
  for (const auto& p : kParams) EXPECT_EQ(fold_eval(p, 0.0), 0.0);
  // P(1/4) = 225/1024 and Q(1/4) = 31/256, so f = 287/1024.
  EXPECT_NEAR(fold_eval({Rat(1), 1}, 0.25), 287.0 / 1024.0, 1e-15);
  EXPECT_THROW(fold_eval({Rat(1), 1}, 1.5), Error);
  EXPECT_THROW(fold_eval({Rat(1), 1}, -0.1), Error);
}

TEST(Fold, ParamsValidated) {
  EXPECT_THROW(validate(FoldParams{Rat(0), 1}), Error);
  EXPECT_THROW(validate(FoldParams{Rat(2), 1}), Error);
  EXPECT_THROW(validate(FoldParams{Rat(1), 0}), Error);
}

TEST(Fold, CertifyPassesAllFour) {
  for (const auto& p : kParams) {
    const auto verdicts = fold_certify(p);
    ASSERT_EQ(verdicts.size(), 4u);
    EXPECT_EQ(verdicts[0].name, "T0");
    EXPECT_EQ(verdicts[3].name, "LE");
    for (const auto& v : verdicts) EXPECT_TRUE(v.pass) << v.name << ": " << v.witness;
  }
}

TEST(FoldProperty, EvalMatchesSigmaFormAndStaysBelowSqrt) {
  for (const auto& p : kParams) {
    const auto sigma = fold_sigma(p);
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
      const double t = i / 200.0;
      const Rat exact_t = rat_from_double(t);
      const long double s = to_double(poly::eval(sigma, poly::Assignment{{"t", exact_t}}));
      const long double lt = t;
      const double f = fold_eval(p, t);
      // f grows to ~1e36 past t = a for k = 6, so the tolerance is relative there.
      EXPECT_NEAR(f, static_cast<double>(std::sqrt(lt) + s * (lt - std::sqrt(lt))),
                  1e-12 * std::max(1.0, std::abs(f)));
      EXPECT_LE(f, std::sqrt(t) + 1e-15);
      if (t <= to_double(p.a)) EXPECT_GT(f, prev);
      prev = f;
    }
  }
}

TEST(Glue, Branches) {
  const FoldParams p{ratio(1, 2), 2};
  EXPECT_EQ(glue_eval(p, {3.0}, -0.3), (std::vector<double>{3.0, -0.3}));
  const auto at_a = glue_eval(p, {3.0}, 0.5);
  EXPECT_NEAR(at_a[1], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(glue_eval(p, {3.0}, 0.5 + 1e-12)[1], at_a[1], 1e-11);
  EXPECT_NEAR(glue_eval(p, {}, 0.7)[0], std::sqrt(0.7), 1e-15);
}

TEST(Glue, JunctionStencilsConverge) {
  const FoldParams p{Rat(1), 1};
  EXPECT_EQ(junction_check(p, ratio(1, 1000), 1e-6).size(), 2u);
  EXPECT_EQ(junction_check({ratio(1, 2), 6}, ratio(1, 1000), 1e-6).size(), 22u);
  // Away from s = 0 the branches agree at the coarse step.
  EXPECT_TRUE(junction_check(p, ratio(1, 1000), 1e-6)[1].pass);
  for (const auto& v : junction_check(p, ratio(1, 10000), 1e-6)) EXPECT_TRUE(v.pass) << v.witness;
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(fold_normal_form(3, 2, {2, -3, 5}), (std::vector<double>{4, 9, 5}));
  EXPECT_EQ(fold_normal_form(3, 3, {-1, -1, -1}), (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(fold_normal_form(2, 2, {0, 1}), (std::vector<double>{0, 1}));
  EXPECT_THROW(fold_normal_form(2, 3, {1, 1}), Error);
  EXPECT_THROW(fold_normal_form(2, 0, {1, 1}), Error);
}

TEST(NormalFormProperty, FiberCounts) {
  for (int d = 1; d <= 4; ++d) {
    for (int s = 1; s <= d; ++s) {
      std::vector<double> z(static_cast<std::size_t>(d), 4.0);
      EXPECT_EQ(fold_preimages(d, s, z).size(), std::size_t{1} << s);
      for (const auto& y : fold_preimages(d, s, z)) EXPECT_EQ(fold_normal_form(d, s, y), z);
      z[0] = 0.0;
      EXPECT_EQ(fold_preimages(d, s, z).size(), std::size_t{1} << (s - 1));
      z[0] = -1.0;
      EXPECT_TRUE(fold_preimages(d, s, z).empty());
    }
  }
}

}  // namespace
}  // namespace cornerforge::corners
