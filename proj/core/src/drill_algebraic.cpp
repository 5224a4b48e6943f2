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

#include "cornerforge/drill_algebraic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cornerforge/error.hpp"

namespace cornerforge::algdrill {
namespace {

using poly::MPoly;

Eigen::MatrixXd numeric_jacobian(const std::vector<MPoly>& polys, const poly::VarList& vars,
                                 const std::vector<double>& x) {
  Eigen::MatrixXd j(static_cast<Eigen::Index>(polys.size()), static_cast<Eigen::Index>(vars.size()));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const MPoly p = polys[i].embed(vars);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = poly::eval(poly::partial(p, vars[k]), x);
    }
  }
  return j;
}

std::vector<double> values(const std::vector<MPoly>& polys, const poly::VarList& vars,
                           const std::vector<double>& x) {
  std::vector<double> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(poly::eval(p.embed(vars), x));
  return out;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_center(const CenterData& c) {
  if (c.generators.empty()) throw Error("center needs at least one generator");
}

std::vector<double> concat(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

poly::VarList sphere_vars(std::size_t r) {
  if (r == 1) return {"u"};
  poly::VarList out;
  for (std::size_t i = 1; i <= r; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

VarietySystem emit_twisted_double(const CenterData& c, Side side) {
  check_center(c);
  const std::size_t r = c.generators.size();
  const poly::VarList u = sphere_vars(r);
  VarietySystem sys;
  sys.vars = c.vars;
  for (const auto& name : u) {
    if (std::find(c.vars.begin(), c.vars.end(), name) != c.vars.end()) {
      throw Error("variable name '" + name + "' is reserved for sphere coordinates");
    }
    sys.vars.push_back(name);
  }
  std::vector<MPoly> f;
  for (const auto& g : c.generators) f.push_back(g.embed(sys.vars));
  std::vector<MPoly> uvar;
  for (const auto& name : u) uvar.push_back(MPoly::variable(sys.vars, name));

  for (const auto& eq : c.ambient) sys.equations.push_back(eq.embed(sys.vars));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) sys.equations.push_back(uvar[i] * f[j] - uvar[j] * f[i]);
  }
  MPoly sphere = MPoly::constant(sys.vars, Rat(-1));
  for (const auto& ui : uvar) sphere += ui * ui;
  sys.equations.push_back(sphere);

  sys.description = "twisted double of the drilling blow-up";
  if (side != Side::kBoth) {
    MPoly pairing(sys.vars);
    for (std::size_t i = 0; i < r; ++i) pairing += uvar[i] * f[i];
    if (side == Side::kMinus) pairing = -pairing;
    sys.inequalities.push_back({pairing, Relation::kGe});
    sys.description = std::string("one-sided part, side ") + (side == Side::kPlus ? "+" : "-");
  }
  sys.description +=
      "; algebraic superset: components contained in Y x S^{r-1} must be discarded by the caller";
  return sys;
}

std::vector<double> lift_point(const CenterData& c, const std::vector<double>& x, Side side) {
  check_center(c);
  if (side == Side::kBoth) throw Error("lift_point needs side + or -");
  if (x.size() != c.vars.size()) throw Error("point has the wrong number of coordinates");
  const std::vector<double> f = values(c.generators, c.vars, x);
  const double n = norm(f);
  if (n <= 1e-9) throw Error("center-adjacent point");
  const double s = side == Side::kPlus ? 1.0 : -1.0;
  std::vector<double> u;
  for (double v : f) u.push_back(s * v / n);
  return concat(x, u);
}

std::vector<double> sample_on_variety(const CenterData& c, const std::vector<double>& anchor, Rng& rng) {
  if (anchor.size() != c.vars.size()) throw Error("anchor has the wrong number of coordinates");
  std::vector<double> x = anchor;
  for (auto& v : x) v += rng.uniform(-0.5, 0.5);
  if (c.ambient.empty()) return x;
  for (int iter = 0; iter < 60; ++iter) {
    const std::vector<double> r = values(c.ambient, c.vars, x);
    if (max_abs(r) <= 1e-13) return x;
    const Eigen::MatrixXd j = numeric_jacobian(c.ambient, c.vars, x);
    const Eigen::VectorXd rv = Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
    const Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(rv);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= step(static_cast<Eigen::Index>(k));
  }
  return max_abs(values(c.ambient, c.vars, x)) <= 1e-12 ? x : std::vector<double>{};
}

FiberReport verify_fiber(const CenterData& c, const std::vector<double>& q, std::size_t samples,
                         Rng& rng, double tol) {
  check_center(c);
  FiberReport rep;
  rep.samples = samples;
  if (q.size() != c.vars.size()) {
    rep.message = "point has the wrong number of coordinates";
    return rep;
  }
  rep.on_center = max_abs(values(c.ambient, c.vars, q)) <= tol &&
                  max_abs(values(c.generators, c.vars, q)) <= tol;
  if (!rep.on_center) {
    rep.message = "q is not a point of the center";
    return rep;
  }
  const auto n = static_cast<Eigen::Index>(c.vars.size());
  Eigen::MatrixXd tangent = Eigen::MatrixXd::Identity(n, n);
  if (!c.ambient.empty()) {
    const Eigen::MatrixXd ja = numeric_jacobian(c.ambient, c.vars, q);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ja, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-9 ? 1 : 0;
    tangent = svd.matrixV().rightCols(n - rank);
  }
  const Eigen::MatrixXd jf = numeric_jacobian(c.generators, c.vars, q) * tangent;
  const VarietySystem sys = emit_twisted_double(c, Side::kBoth);
  std::vector<std::vector<double>> dirs;
  for (std::size_t s = 0; s < samples; ++s) {
    Eigen::VectorXd v(tangent.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.normal();
    const Eigen::VectorXd w = jf * v;
    if (w.norm() <= tol) continue;
    std::vector<double> u(static_cast<std::size_t>(w.size()));
    for (Eigen::Index i = 0; i < w.size(); ++i) u[static_cast<std::size_t>(i)] = w(i) / w.norm();
    dirs.push_back(u);
    for (double sign : {1.0, -1.0}) {
      std::vector<double> su = u;
      for (auto& x : su) x *= sign;
      std::vector<double> p = concat(q, su);
      rep.max_residual = std::max(rep.max_residual, max_residual(sys, p));
      rep.points.push_back(std::move(p));
    }
  }
  rep.points_found = rep.points.size();
  std::vector<std::vector<double>> distinct;
  for (const auto& p : rep.points) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const auto& d) {
      double m = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - d[i]));
      return m <= 1e-6;
    });
    if (!seen) distinct.push_back(p);
  }
  rep.distinct_points = distinct.size();
  if (!dirs.empty()) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(dirs.size()), static_cast<Eigen::Index>(dirs[0].size()));
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      for (std::size_t k = 0; k < dirs[i].size(); ++k) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = dirs[i][k];
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-8);
    rep.dimension = static_cast<int>(lu.rank()) - 1;
  }
  rep.ok = !rep.points.empty() && rep.max_residual <= tol &&
           (c.generators.size() != 1 || rep.distinct_points == 2);
  rep.message = rep.points.empty() ? "no tangent direction leaves the center" : "";
  if (c.generators.size() == 1 && rep.distinct_points != 2) {
    rep.message = "expected 2 preimages, found " + std::to_string(rep.distinct_points);
  }
  return rep;
}

std::vector<double> projective_class(const std::vector<double>& u, double tol) {
  std::vector<double> out = u;
  for (double x : u) {
    if (std::abs(x) > tol) {
      for (auto& v : out) v /= x;
      return out;
    }
  }
  throw Error("zero vector has no projective class");
}

ThetaReport theta_check(const CenterData& c, std::size_t samples, Rng& rng, double tol) {
  check_center(c);
  ThetaReport rep;
  const VarietySystem both = emit_twisted_double(c, Side::kBoth);
  const VarietySystem plus = emit_twisted_double(c, Side::kPlus);
  const VarietySystem minus = emit_twisted_double(c, Side::kMinus);
  const std::vector<double> origin(c.vars.size(), 0.0);
  std::size_t attempts = 0;
  while (rep.samples < samples) {
    if (++attempts > 20 * samples + 100) break;
    const auto& anchor = c.anchors.empty() ? origin : c.anchors[attempts % c.anchors.size()];
    const std::vector<double> x = sample_on_variety(c, anchor, rng);
    if (x.empty() || norm(values(c.generators, c.vars, x)) <= 1e-6) continue;
    ++rep.samples;
    const std::vector<double> p = lift_point(c, x, Side::kPlus);
    std::vector<double> anti = p;
    for (std::size_t i = x.size(); i < anti.size(); ++i) anti[i] = -anti[i];
    const double res = std::max(max_residual(both, p), max_residual(both, anti));
    rep.max_residual = std::max(rep.max_residual, res);

    const std::vector<double> u(p.begin() + static_cast<std::ptrdiff_t>(x.size()), p.end());
    const std::vector<double> v(anti.begin() + static_cast<std::ptrdiff_t>(x.size()), anti.end());
    const auto cu = projective_class(u, tol);
    const auto cv = projective_class(v, tol);
    double gap = 0.0;
    for (std::size_t i = 0; i < cu.size(); ++i) gap = std::max(gap, std::abs(cu[i] - cv[i]));
    if (gap <= tol) ++rep.same_class;

    double sep = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) sep = std::max(sep, std::abs(u[i] - v[i]));
    if (res <= tol && sep > tol && gap <= tol) ++rep.cardinality_two;

    if (res <= tol && satisfies_inequalities(plus, p, tol) && satisfies_inequalities(minus, anti, tol) &&
        !satisfies_inequalities(plus, anti, -tol)) {
      ++rep.involution_ok;
    }
  }
  rep.ok = rep.samples == samples && rep.cardinality_two == samples && rep.same_class == samples &&
           rep.involution_ok == samples;
  return rep;
}

}  // namespace cornerforge::algdrill
