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

#include "cornerforge/double_fold.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>
#include <sstream>

#include "cornerforge/error.hpp"

namespace cornerforge::corners {
namespace {

using poly::MPoly;
using Big = boost::multiprecision::cpp_bin_float_100;

constexpr int kGridPoints = 1000;

Big to_big(const Rat& r) { return Big(r.get_num().get_str()) / Big(r.get_den().get_str()); }

std::string show(const Rat& r) { return format_rat(r); }

// Finite-difference weights for derivatives 0..max_order at 0 on the given
// nodes (Fornberg's recurrence), exactly.
std::vector<std::vector<Rat>> fd_weights(const std::vector<Rat>& x, int max_order) {
  const std::size_t n = x.size();
  const auto m = static_cast<std::size_t>(max_order);
  std::vector<std::vector<Rat>> c(n, std::vector<Rat>(m + 1, Rat(0)));
  Rat c1 = 1;
  Rat c4 = x[0];
  c[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, m);
    Rat c2 = 1;
    const Rat c5 = c4;
    c4 = x[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Rat c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (Rat(static_cast<long>(k)) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - Rat(static_cast<long>(k)) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return c;
}

}  // namespace

poly::VarList double_vars(std::size_t l) {
  if (l == 1) return {"t"};
  poly::VarList out;
  for (std::size_t i = 1; i <= l; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

VarietySystem emit_double(const CornersSpec& spec, bool plus_copy) {
  if (spec.inequalities.empty()) throw Error("corners spec needs at least one inequality");
  VarietySystem sys;
  sys.vars = spec.vars;
  const poly::VarList t = double_vars(spec.inequalities.size());
  for (const auto& name : t) {
    if (std::find(spec.vars.begin(), spec.vars.end(), name) != spec.vars.end()) {
      throw Error("variable name '" + name + "' is reserved for the double");
    }
    sys.vars.push_back(name);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const MPoly ti = MPoly::variable(sys.vars, t[i]);
    sys.equations.push_back(ti * ti - spec.inequalities[i].embed(sys.vars));
    if (plus_copy) sys.inequalities.push_back({ti, Relation::kGe});
  }
  sys.description = plus_copy ? "copy of Q inside its Nash double (all t_i >= 0)" : "Nash double of Q";
  return sys;
}

std::vector<double> section_plus(const CornersSpec& spec, const std::vector<double>& x) {
  if (x.size() != spec.vars.size()) throw Error("point has the wrong number of coordinates");
  std::vector<double> out = x;
  for (const auto& h : spec.inequalities) {
    double v = poly::eval(h.embed(spec.vars), x);
    if (v < -1e-12) throw Error("point outside Q");
    out.push_back(std::sqrt(std::max(v, 0.0)));
  }
  return out;
}

std::vector<double> project(const CornersSpec& spec, const std::vector<double>& z) {
  if (z.size() != spec.vars.size() + spec.inequalities.size()) {
    throw Error("point has the wrong number of coordinates");
  }
  return {z.begin(), z.begin() + static_cast<std::ptrdiff_t>(spec.vars.size())};
}

SmoothnessReport smoothness_check(const CornersSpec& spec, const std::vector<std::vector<Rat>>& points) {
  const VarietySystem sys = emit_double(spec);
  SmoothnessReport rep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != sys.vars.size()) throw Error("point has the wrong number of coordinates");
    poly::Assignment at;
    for (std::size_t k = 0; k < sys.vars.size(); ++k) at[sys.vars[k]] = points[i][k];
    const std::size_t rank = poly::matrix_rank(poly::jacobian_at(sys.equations, sys.vars, at));
    rep.ranks.push_back(rank);
    if (rank != spec.inequalities.size() && !rep.witness) rep.witness = i;
  }
  rep.ok = !rep.witness;
  return rep;
}

SmoothnessReport smoothness_check_numeric(const CornersSpec& spec,
                                          const std::vector<std::vector<double>>& points, double tol) {
  const VarietySystem sys = emit_double(spec);
  std::vector<std::vector<MPoly>> grads(sys.equations.size());
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    for (const auto& v : sys.vars) grads[i].push_back(poly::partial(sys.equations[i], v));
  }
  SmoothnessReport rep;
  for (std::size_t p = 0; p < points.size(); ++p) {
    Eigen::MatrixXd j(static_cast<Eigen::Index>(grads.size()), static_cast<Eigen::Index>(sys.vars.size()));
    for (std::size_t i = 0; i < grads.size(); ++i) {
      for (std::size_t k = 0; k < sys.vars.size(); ++k) {
        j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = poly::eval(grads[i][k], points[p]);
      }
    }
    const Eigen::VectorXd sv = j.jacobiSvd().singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > tol ? 1 : 0;
    rep.ranks.push_back(rank);
    if (rank != spec.inequalities.size() && !rep.witness) rep.witness = p;
  }
  rep.ok = !rep.witness;
  return rep;
}

void validate(const FoldParams& p) {
  if (p.a <= 0 || p.a > 1) throw Error("fold parameter a must lie in (0, 1]");
  if (p.k < 1) throw Error("fold parameter k must be at least 1");
}

MPoly fold_sigma(const FoldParams& p) {
  validate(p);
  const poly::VarList v{"t"};
  const MPoly scaled = MPoly::variable(v, "t") * Rat(Rat(1) / p.a);
  const auto twok = static_cast<unsigned>(2 * p.k);
  const MPoly base = MPoly::constant(v, Rat(1)) - scaled.pow(twok);
  return base.pow(twok);
}

SqrtPair fold_symbolic(const FoldParams& p) {
  const MPoly sigma = fold_sigma(p);
  const poly::VarList v{"t"};
  return {sigma * MPoly::variable(v, "t"), MPoly::constant(v, Rat(1)) - sigma};
}

double fold_eval(const FoldParams& p, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("fold_eval needs t in [0, 1]");
  const SqrtPair f = fold_symbolic(p);
  const Rat tr = rat_from_double(t);
  const Rat pv = poly::UnivariateEvaluator(f.p)(tr);
  const Rat qv = poly::UnivariateEvaluator(f.q)(tr);
  return static_cast<double>(to_big(pv) + to_big(qv) * boost::multiprecision::sqrt(to_big(tr)));
}

std::vector<Verdict> fold_certify(const FoldParams& p) {
  validate(p);
  const SqrtPair f = fold_symbolic(p);
  const MPoly sigma = fold_sigma(p);
  const auto twok = static_cast<unsigned>(2 * p.k);
  const std::string tag = " (a=" + show(p.a) + ", k=" + std::to_string(p.k) + ")";
  std::vector<Verdict> out;

  {
    Verdict v{"T0", true, "degree-" + std::to_string(twok) + " Taylor polynomial of f at 0 is t" + tag};
    const auto tp = poly::univariate_taylor(f.p, Rat(0), twok);
    const auto tq = poly::univariate_taylor(f.q, Rat(0), twok - 1);
    for (unsigned j = 0; j <= twok && v.pass; ++j) {
      if (tp[j] != (j == 1 ? Rat(1) : Rat(0))) {
        v = {"T0", false, "P coefficient t^" + std::to_string(j) + " is " + show(tp[j]) + tag};
      }
    }
    for (unsigned j = 0; j < twok && v.pass; ++j) {
      if (tq[j] != 0) v = {"T0", false, "Q coefficient t^" + std::to_string(j) + " is " + show(tq[j]) + tag};
    }
    out.push_back(v);
  }
  {
    Verdict v{"Ta", true, "sigma vanishes to order " + std::to_string(twok) + " at t=a" + tag};
    const auto ts = poly::univariate_taylor(sigma, p.a, twok - 1);
    for (unsigned j = 0; j < twok && v.pass; ++j) {
      if (ts[j] != 0) v = {"Ta", false, "sigma Taylor coefficient " + std::to_string(j) + " at a is " + show(ts[j]) + tag};
    }
    out.push_back(v);
  }
  const poly::UnivariateEvaluator pe(f.p);
  const poly::UnivariateEvaluator qe(f.q);
  {
    Verdict v{"MONO", true, "f strictly increasing on a " + std::to_string(kGridPoints) + "-point grid of [0,a]" + tag};
    Rat t0 = 0;
    Rat p0 = pe(t0);
    Rat q0 = qe(t0);
    for (int i = 1; i < kGridPoints && v.pass; ++i) {
      const Rat t1 = p.a * ratio(i, kGridPoints - 1);
      const Rat p1 = pe(t1);
      const Rat q1 = qe(t1);
      // f(t1) - f(t0) = (p1 - p0) + q1 sqrt(t1) - q0 sqrt(t0)
      if (sign_with_two_sqrts(p1 - p0, q1, t1, -q0, t0) <= 0) {
        v = {"MONO", false, "f(" + show(t1) + ") <= f(" + show(t0) + ")" + tag};
      }
      t0 = t1;
      p0 = p1;
      q0 = q1;
    }
    out.push_back(v);
  }
  {
    Verdict v{"LE", true, "sigma in [0,1] on [0,a] and f <= sqrt(t) on a grid of [0,1]" + tag};
    const poly::VarList tv{"t"};
    const MPoly base = MPoly::constant(tv, Rat(1)) - (MPoly::variable(tv, "t") * Rat(Rat(1) / p.a)).pow(twok);
    const poly::UnivariateEvaluator be(base);
    const auto dcoeffs = poly::dense_coefficients(poly::partial(base, "t"));
    if (be(Rat(0)) != 1 || be(p.a) != 0) {
      v = {"LE", false, "base of sigma does not run from 1 to 0 on [0,a]" + tag};
    } else if (std::any_of(dcoeffs.begin(), dcoeffs.end(), [](const Rat& c) { return c > 0; })) {
      v = {"LE", false, "derivative of the base of sigma has a positive coefficient" + tag};
    }
    // sigma = base^(2k) is an even power, so sigma >= 0 everywhere and
    // sigma <= 1 where base lies in [0,1]. Grid: P + (Q - 1) sqrt(t) <= 0.
    for (int i = 0; i < kGridPoints && v.pass; ++i) {
      const Rat t = ratio(i, kGridPoints - 1);
      if (sign_with_sqrt(pe(t), qe(t) - 1, t) > 0) v = {"LE", false, "f(" + show(t) + ") > sqrt(t)" + tag};
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> glue_eval(const FoldParams& p, const std::vector<double>& y, double s) {
  validate(p);
  std::vector<double> out = y;
  const double a = to_double(p.a);
  if (s < 0.0) {
    out.push_back(s);
  } else if (s <= a) {
    out.push_back(fold_eval(p, s));
  } else {
    out.push_back(std::sqrt(s));
  }
  return out;
}

std::vector<Verdict> junction_check(const FoldParams& p, const Rat& h, double tol) {
  validate(p);
  if (h <= 0) throw Error("finite-difference step must be positive");
  const SqrtPair f = fold_symbolic(p);
  const poly::UnivariateEvaluator pe(f.p);
  const poly::UnivariateEvaluator qe(f.q);
  const std::function<Big(const Rat&)> identity = [](const Rat& s) { return to_big(s); };
  const std::function<Big(const Rat&)> folded = [&](const Rat& s) {
    return to_big(pe(s)) + to_big(qe(s)) * boost::multiprecision::sqrt(to_big(s));
  };
  const std::function<Big(const Rat&)> root = [](const Rat& s) {
    return boost::multiprecision::sqrt(to_big(s));
  };
  struct Junction {
    std::string name;
    Rat at;
    const std::function<Big(const Rat&)>* left;
    const std::function<Big(const Rat&)>* right;
  };
  const std::vector<Junction> junctions{{"s=0", Rat(0), &identity, &folded},
                                        {"s=a", p.a, &folded, &root}};
  std::vector<Verdict> out;
  const int max_order = 2 * p.k - 1;
  for (const auto& jn : junctions) {
    for (int m = 1; m <= max_order; ++m) {
      // One-sided stencils of m + 4 nodes on each side of the junction.
      const int nodes = m + 4;
      std::vector<Rat> fwd;
      std::vector<Rat> bwd;
      for (int j = 0; j < nodes; ++j) {
        fwd.push_back(h * j);
        bwd.push_back(-h * j);
      }
      const auto wf = fd_weights(fwd, m);
      const auto wb = fd_weights(bwd, m);
      Big dl = 0;
      Big dr = 0;
      for (int j = 0; j < nodes; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        dl += to_big(wb[idx][static_cast<std::size_t>(m)]) * (*jn.left)(jn.at + bwd[idx]);
        dr += to_big(wf[idx][static_cast<std::size_t>(m)]) * (*jn.right)(jn.at + fwd[idx]);
      }
      const double gap = static_cast<double>(boost::multiprecision::abs(dl - dr));
      std::ostringstream w;
      w.precision(6);
      w << "order " << m << " at " << jn.name << ": left " << static_cast<double>(dl) << ", right "
        << static_cast<double>(dr) << ", gap " << gap << " (a=" << show(p.a) << ", k=" << p.k << ")";
      out.push_back({"junction " + jn.name + " order " + std::to_string(m), gap <= tol, w.str()});
    }
  }
  return out;
}

std::vector<double> fold_normal_form(int d, int s, const std::vector<double>& y) {
  if (s < 1 || s > d) throw Error("fold count s must lie in [1, d]");
  if (y.size() != static_cast<std::size_t>(d)) throw Error("point has the wrong number of coordinates");
  std::vector<double> out = y;
  for (int i = 0; i < s; ++i) out[static_cast<std::size_t>(i)] *= y[static_cast<std::size_t>(i)];
  return out;
}

std::vector<std::vector<double>> fold_preimages(int d, int s, const std::vector<double>& z) {
  if (s < 1 || s > d) throw Error("fold count s must lie in [1, d]");
  if (z.size() != static_cast<std::size_t>(d)) throw Error("point has the wrong number of coordinates");
  std::vector<std::vector<double>> out{z};
  for (int i = 0; i < s; ++i) {
    const double v = z[static_cast<std::size_t>(i)];
    if (v < 0) return {};
    std::vector<std::vector<double>> next;
    for (auto pt : out) {
      pt[static_cast<std::size_t>(i)] = std::sqrt(v);
      next.push_back(pt);
      if (v > 0) {
        pt[static_cast<std::size_t>(i)] = -std::sqrt(v);
        next.push_back(pt);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace cornerforge::corners
