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

#include <cmath>
#include <vector>

#include "cornerforge/error.hpp"
#include "cornerforge/mpoly.hpp"
#include "cornerforge/rng.hpp"

namespace cornerforge::poly {
namespace {

MPoly var(const std::string& name) { return MPoly::variable({name}, name); }
MPoly cst(const Rat& v) { return MPoly::constant({}, v); }

// Random polynomial over {x, y, z} with small integer and fractional coefficients.
MPoly random_poly(Rng& rng) {
  std::vector<std::pair<Exponents, Rat>> terms;
  const auto n = rng.integer(0, 5);
  for (int i = 0; i < n; ++i) {
    Exponents e{static_cast<unsigned>(rng.integer(0, 3)), static_cast<unsigned>(rng.integer(0, 3)),
                static_cast<unsigned>(rng.integer(0, 2))};
    terms.emplace_back(e, ratio(rng.integer(-9, 9), rng.integer(1, 4)));
  }
  return MPoly::from_terms({"x", "y", "z"}, terms);
}

Assignment random_point(Rng& rng) {
  return {{"x", ratio(rng.integer(-7, 7), rng.integer(1, 5))},
          {"y", ratio(rng.integer(-7, 7), rng.integer(1, 5))},
          {"z", ratio(rng.integer(-7, 7), rng.integer(1, 5))}};
}

TEST(Rat, ParseAndFormatAreCanonical) {
  EXPECT_EQ(format_rat(parse_rat("-6/4")), "-3/2");
  EXPECT_EQ(ratio(4, -6), Rat(-2, 3));
  EXPECT_THROW(parse_rat("6/-4"), Error);
  EXPECT_EQ(format_rat(parse_rat("7")), "7/1");
  EXPECT_EQ(format_rat(parse_rat("0/5")), "0/1");
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("abc"), Error);
  EXPECT_THROW(parse_rat("1.5"), Error);
}

TEST(Rat, DoubleConversionIsExact) {
  EXPECT_EQ(rat_from_double(0.375), Rat(3, 8));
  EXPECT_EQ(to_double(rat_from_double(0.1)), 0.1);
}

TEST(Rat, SqrtSignsMatchLongDouble) {
  Rng rng(11);
  int decided = 0;
  for (int i = 0; i < 2000; ++i) {
    const Rat a = ratio(rng.integer(-30, 30), rng.integer(1, 6));
    const Rat b = ratio(rng.integer(-30, 30), rng.integer(1, 6));
    const Rat c = ratio(rng.integer(0, 40), rng.integer(1, 6));
    const Rat d = ratio(rng.integer(-30, 30), rng.integer(1, 6));
    const Rat v = ratio(rng.integer(0, 40), rng.integer(1, 6));
    const long double x = to_double(a) + to_double(b) * std::sqrt(static_cast<long double>(to_double(c)));
    const long double y = x + to_double(d) * std::sqrt(static_cast<long double>(to_double(v)));
    if (std::fabs(x) > 1e-9) {
      EXPECT_EQ(sign_with_sqrt(a, b, c), x > 0 ? 1 : -1);
      ++decided;
    }
    if (std::fabs(y) > 1e-9) EXPECT_EQ(sign_with_two_sqrts(a, b, c, d, v), y > 0 ? 1 : -1);
  }
  EXPECT_GT(decided, 1500);
  // Exact zeros that floating point cannot see.
  EXPECT_EQ(sign_with_sqrt(Rat(-3), Rat(1), Rat(9)), 0);
  EXPECT_EQ(sign_with_two_sqrts(Rat(0), Rat(1), Rat(2), Rat(-1), Rat(8, 4)), 0);
  EXPECT_EQ(sign_with_two_sqrts(Rat(-5), Rat(1), Rat(4), Rat(1), Rat(9)), 0);
}

TEST(MPoly, EvalExamples) {
  const MPoly p = var("x1").pow(2) - var("x2");
  EXPECT_EQ(eval(p, Assignment{{"x1", Rat(2)}, {"x2", Rat(4)}}), Rat(0));
  EXPECT_EQ(eval(cst(Rat(5)), Assignment{{"q", Rat(9)}}), Rat(5));
  EXPECT_EQ(eval(cst(Rat(1)) - var("x"), Assignment{{"x", Rat(1, 2)}}), Rat(1, 2));
}

TEST(MPoly, EvalNamesMissingVariable) {
  const MPoly p = var("x") * var("y");
  try {
    eval(p, Assignment{{"x", Rat(1)}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(MPoly, PartialExamples) {
  const MPoly f = var("t").pow(2) - var("x");
  EXPECT_EQ(partial(f, "t"), Rat(2) * var("t"));
  EXPECT_EQ(partial(f, "x"), cst(Rat(-1)));
  EXPECT_EQ(partial(var("x") * var("y"), "x"), var("y"));
  EXPECT_THROW(partial(f, "w"), Error);
}

TEST(MPoly, JacobianRankExamples) {
  const std::vector<MPoly> a{var("t1").pow(2) - var("x"), var("t2").pow(2) - var("y")};
  const Assignment origin{{"x", Rat(0)}, {"y", Rat(0)}, {"t1", Rat(0)}, {"t2", Rat(0)}};
  EXPECT_EQ(jacobian_rank(a, origin), 2u);
  const std::vector<MPoly> b{var("x").pow(2) + var("y").pow(2)};
  EXPECT_EQ(jacobian_rank(b, Assignment{{"x", Rat(0)}, {"y", Rat(0)}}), 0u);
  const std::vector<MPoly> c{var("x")};
  EXPECT_EQ(jacobian_rank(c, Assignment{{"x", Rat(7)}}), 1u);
}

TEST(MPoly, MatrixRankAgreesWithGaussianElimination) {
  // Oracle: plain rational Gaussian elimination.
  auto oracle = [](std::vector<std::vector<Rat>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[rank]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == rank || m[r][c] == 0) continue;
        const Rat f = m[r][c] / m[rank][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
      ++rank;
    }
    return rank;
  };
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 5));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 5));
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (auto& row : m) {
      for (auto& v : row) v = rng.coin() ? Rat(0) : ratio(rng.integer(-3, 3), rng.integer(1, 3));
    }
    if (rows > 2 && rng.coin()) {
      for (std::size_t k = 0; k < cols; ++k) m[2][k] = m[0][k] * Rat(2, 3) - m[1][k];
    }
    EXPECT_EQ(matrix_rank(m), oracle(m));
  }
}

TEST(MPoly, TaylorExamples) {
  const MPoly t = var("t");
  EXPECT_EQ(univariate_taylor(t.pow(2), Rat(0), 3), (std::vector<Rat>{0, 0, 1, 0}));
  EXPECT_EQ(univariate_taylor((t - cst(Rat(1))).pow(2), Rat(1), 2), (std::vector<Rat>{0, 0, 1}));
  EXPECT_EQ(univariate_taylor(cst(Rat(1)) - t.pow(4), Rat(1), 1), (std::vector<Rat>{0, -4}));
  EXPECT_THROW(univariate_taylor(var("x") * var("y"), Rat(0), 1), Error);
}

TEST(MPoly, TaylorMatchesRepeatedDifferentiation) {
  // Oracle: c_m = p^(m)(center) / m!.
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<Exponents, Rat>> terms;
    for (unsigned k = 0; k <= 7; ++k) terms.emplace_back(Exponents{k}, ratio(rng.integer(-5, 5), rng.integer(1, 3)));
    const MPoly p = MPoly::from_terms({"t"}, terms);
    const Rat center = ratio(rng.integer(-4, 4), rng.integer(1, 3));
    const auto got = univariate_taylor(p, center, 8);
    MPoly d = p;
    Rat fact(1);
    for (unsigned m = 0; m <= 8; ++m) {
      if (m > 0) {
        d = partial(d, "t");
        fact *= m;
      }
      const Rat want = d.is_zero() ? Rat(0) : eval(d, Assignment{{"t", center}}) / fact;
      EXPECT_EQ(got[m], want) << "order " << m;
    }
  }
}

TEST(MPoly, UnivariateEvaluatorMatchesEval) {
  const MPoly p = MPoly::from_terms({"t"}, {{{0}, Rat(1, 3)}, {{3}, Rat(-7, 2)}, {{5}, Rat(2)}});
  const UnivariateEvaluator f(p);
  EXPECT_EQ(f.degree(), 5u);
  for (int i = -10; i <= 10; ++i) {
    const Rat t = ratio(i, 7);
    EXPECT_EQ(f(t), eval(p, Assignment{{"t", t}}));
  }
}

TEST(MPolyProperty, RingAxiomsAndEvaluationHomomorphism) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    const Assignment pt = random_point(rng);
    EXPECT_EQ(eval(a * b + c, pt), eval(a, pt) * eval(b, pt) + eval(c, pt));
    // Leibniz rule.
    EXPECT_EQ(partial(a * b, "x"), partial(a, "x") * b + a * partial(b, "x"));
  }
}

TEST(MPolyProperty, MixedVariableListsAlign) {
  const MPoly p = var("x") + var("y");
  const MPoly q = MPoly::variable({"y", "x"}, "x") + MPoly::variable({"y", "x"}, "y");
  EXPECT_EQ(p, q);
  const MPoly s = p * var("z");
  EXPECT_EQ(s.vars(), (VarList{"x", "y", "z"}));
  EXPECT_EQ(s.total_degree(), 2u);
  EXPECT_THROW((var("x") * var("w")).embed({"x"}), Error);
}

TEST(MPoly, DenseCoefficients) {
  const MPoly p = cst(Rat(2)) - Rat(3) * var("t").pow(2);
  EXPECT_EQ(dense_coefficients(p), (std::vector<Rat>{2, 0, -3}));
}

}  // namespace
}  // namespace cornerforge::poly
