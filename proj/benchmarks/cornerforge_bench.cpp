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


#include <benchmark/benchmark.h>

#include "cornerforge/double_fold.hpp"
#include "cornerforge/drill_algebraic.hpp"
#include "cornerforge/drill_local.hpp"
#include "cornerforge/germ.hpp"
#include "cornerforge/surface.hpp"

namespace {

using namespace cornerforge;

void BM_EValueAllGerms(benchmark::State& state) {
  const auto germs = germ::all_normalized_germs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (const auto& g : germs) total += germ::e_value(g);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(germs.size()));
}
BENCHMARK(BM_EValueAllGerms)->Arg(2)->Arg(3);

void BM_BlowupCharts(benchmark::State& state) {
  const auto germs = germ::all_normalized_germs(3);
  const auto sheet = state.range(0) == 0 ? drill::Sheet::kPositive : drill::Sheet::kTwisted;
  for (auto _ : state) {
    std::size_t charts = 0;
    for (const auto& g : germs) {
      const auto center = germ::disconnecting_coords(g);
      if (center.size() >= 2) charts += drill::blowup_charts(g, center, sheet).size();
    }
    benchmark::DoNotOptimize(charts);
  }
}
BENCHMARK(BM_BlowupCharts)->Arg(0)->Arg(1);

void BM_Desingularize(benchmark::State& state) {
  const auto g = germ::make_germ(3, {{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(drill::desingularize(g, 8));
}
BENCHMARK(BM_Desingularize);

void BM_LiftPoint(benchmark::State& state) {
  algdrill::CenterData c;
  c.vars = {"x", "y", "z"};
  c.generators = {poly::MPoly::variable(c.vars, "x"), poly::MPoly::variable(c.vars, "y")};
  const std::vector<double> x{0.3, -0.2, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(algdrill::lift_point(c, x, algdrill::Side::kPlus));
}
BENCHMARK(BM_LiftPoint);

void BM_FoldCertify(benchmark::State& state) {
  const corners::FoldParams p{ratio(1, 2), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(corners::fold_certify(p));
}
BENCHMARK(BM_FoldCertify)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FoldEval(benchmark::State& state) {
  const corners::FoldParams p{ratio(1, 2), 3};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(corners::fold_eval(p, t));
    t = t < 1.0 ? t + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_FoldEval);

void BM_QuotientComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int s = static_cast<int>(state.range(1));
  const auto poly = surface::lattice_polygon(n);
  const auto j = *surface::canonical_partition(n, s);
  for (auto _ : state) benchmark::DoNotOptimize(surface::quotient_complex(poly, j));
}
BENCHMARK(BM_QuotientComplex)->Args({6, 3})->Args({12, 6})->Args({16, 10});

void BM_VerifyRegularity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto poly = surface::lattice_polygon(n);
  const auto j = *surface::canonical_partition(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(surface::verify_regularity(poly, j));
}
BENCHMARK(BM_VerifyRegularity)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
