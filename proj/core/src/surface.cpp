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

#include "cornerforge/surface.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "cornerforge/error.hpp"

namespace cornerforge::surface {
namespace {

using poly::MPoly;

const poly::VarList kXY{"x", "y"};

Rat cross(const Point& a, const Point& b) { return a.first * b.second - a.second * b.first; }
Point minus(const Point& a, const Point& b) { return {a.first - b.first, a.second - b.second}; }

// Scales a + b x + c y to coprime integers with the same sign.
MPoly primitive_line(Rat a, Rat b, Rat c) {
  BigInt l = 1;
  for (const Rat* r : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->get_den_mpz_t());
  BigInt na = a.get_num() * (l / a.get_den());
  BigInt nb = b.get_num() * (l / b.get_den());
  BigInt nc = c.get_num() * (l / c.get_den());
  BigInt g = 0;
  for (const BigInt* v : {&na, &nb, &nc}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
  if (g == 0) throw Error("degenerate edge");
  return MPoly::from_terms(kXY, {{{0, 0}, Rat(na / g)}, {{1, 0}, Rat(nb / g)}, {{0, 1}, Rat(nc / g)}});
}

Rat eval_at(const MPoly& p, const Point& q) {
  const std::vector<Rat> v{q.first, q.second};
  return poly::eval(p, v);
}

bool is_rational_square(const Rat& r) {
  return r >= 0 && mpz_perfect_square_p(r.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

Rat rational_sqrt(const Rat& r) {
  BigInt n;
  BigInt d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return Rat(n, d);  // square roots of coprime parts stay coprime
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool admissible(int n, int s) { return n >= 3 && s >= (n % 2 == 0 ? 2 : 3) && s <= n; }

}  // namespace

ConvexPolygon polygon_from_vertices(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  if (n < 3) throw Error("a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Point e1 = minus(points[(i + 1) % n], points[i]);
    const Point e2 = minus(points[(i + 2) % n], points[(i + 1) % n]);
    if (cross(e1, e2) <= 0) {
      throw Error("vertices are not strictly convex and counterclockwise at vertex " + std::to_string((i + 1) % n + 1));
    }
  }
  ConvexPolygon p;
  p.vertices = points;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = points[i];
    const Point d = minus(points[(i + 1) % n], a);
    // d x (q - a) = d.x (y - a.y) - d.y (x - a.x)
    p.edges.push_back(primitive_line(d.second * a.first - d.first * a.second, -d.second, d.first));
  }
  const Point c = centroid(p);
  for (const auto& h : p.edges) {
    if (eval_at(h, c) <= 0) throw Error("edge form is not positive at the centroid");
  }
  return p;
}

ConvexPolygon lattice_polygon(int n) {
  if (n < 3) throw Error("a polygon needs at least 3 vertices");
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(Rat(i), Rat(i * i));
  return polygon_from_vertices(pts);
}

Point centroid(const ConvexPolygon& p) {
  Point c{0, 0};
  for (const auto& v : p.vertices) {
    c.first += v.first;
    c.second += v.second;
  }
  const Rat n(static_cast<long>(p.size()));
  return {c.first / n, c.second / n};
}

void validate_partition(const EdgePartition& j, std::size_t n) {
  std::vector<int> seen(n + 1, 0);
  for (const auto& cls : j.classes) {
    if (cls.empty()) throw Error("partition has an empty class");
    for (int e : cls) {
      if (e < 1 || static_cast<std::size_t>(e) > n) throw Error("edge index " + std::to_string(e) + " out of range");
      if (seen[static_cast<std::size_t>(e)]++) throw Error("edge " + std::to_string(e) + " appears twice");
    }
  }
  for (std::size_t e = 1; e <= n; ++e) {
    if (!seen[e]) throw Error("edge " + std::to_string(e) + " is in no class");
  }
}

std::vector<std::size_t> class_of_edges(const EdgePartition& j, std::size_t n) {
  validate_partition(j, n);
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < j.classes.size(); ++k) {
    for (int e : j.classes[k]) out[static_cast<std::size_t>(e - 1)] = k;
  }
  return out;
}

bool compatible_geometric(const ConvexPolygon& p, const EdgePartition& j) {
  validate_partition(j, p.size());
  for (const auto& cls : j.classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        const MPoly& h1 = p.edges[static_cast<std::size_t>(cls[a] - 1)];
        const MPoly& h2 = p.edges[static_cast<std::size_t>(cls[b] - 1)];
        // h = c0 + cx x + cy y; solve the 2x2 system by Cramer's rule.
        const Rat a1 = h1.coefficient({1, 0}), b1 = h1.coefficient({0, 1}), c1 = h1.coefficient({0, 0});
        const Rat a2 = h2.coefficient({1, 0}), b2 = h2.coefficient({0, 1}), c2 = h2.coefficient({0, 0});
        const Rat det = a1 * b2 - a2 * b1;
        if (det == 0) continue;
        const Point q{(-c1 * b2 + c2 * b1) / det, (-a1 * c2 + a2 * c1) / det};
        const bool inside = std::all_of(p.edges.begin(), p.edges.end(),
                                        [&](const MPoly& h) { return eval_at(h, q) >= 0; });
        if (inside) return false;
      }
    }
  }
  return true;
}

bool compatible_cyclic(const EdgePartition& j, std::size_t n) {
  const auto cls = class_of_edges(j, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] == cls[(i + 1) % n]) return false;
  }
  return true;
}

bool check_compatibility(const ConvexPolygon& p, const EdgePartition& j) {
  const bool geometric = compatible_geometric(p, j);
  if (geometric != compatible_cyclic(j, p.size())) {
    throw Error("geometric and cyclic compatibility tests disagree");
  }
  return geometric;
}

std::vector<EdgePartition> all_partitions(int n, int s) {
  std::vector<EdgePartition> out;
  if (n < 1 || s < 1 || s > n) return out;
  // Restricted growth strings with exactly s blocks.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      if (blocks != s) return;
      EdgePartition p;
      p.classes.resize(static_cast<std::size_t>(s));
      for (int i = 0; i < n; ++i) p.classes[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
      out.push_back(std::move(p));
      return;
    }
    if (blocks + (n - pos) < s) return;
    for (int b = 0; b <= std::min(blocks, s - 1); ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::optional<EdgePartition> canonical_partition(int n, int s) {
  if (n < 3 || s < 1 || s > n) return std::nullopt;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> rec = [&](int pos, int used) {
    if (pos == n) return used == s && color.back() != color.front();
    if (used + (n - pos) < s) return false;
    for (int c = 0; c <= std::min(used, s - 1); ++c) {
      if (pos > 0 && color[static_cast<std::size_t>(pos - 1)] == c) continue;
      color[static_cast<std::size_t>(pos)] = c;
      if (rec(pos + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  EdgePartition p;
  p.classes.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < n; ++i) p.classes[static_cast<std::size_t>(color[static_cast<std::size_t>(i)])].push_back(i + 1);
  return p;
}

VarietySystem emit_surface(const ConvexPolygon& p, const EdgePartition& j) {
  if (!check_compatibility(p, j)) throw Error("incompatible partition");
  VarietySystem sys;
  sys.vars = kXY;
  for (std::size_t k = 1; k <= j.size(); ++k) sys.vars.push_back("t" + std::to_string(k));
  for (std::size_t k = 0; k < j.size(); ++k) {
    MPoly prod = MPoly::constant(sys.vars, Rat(1));
    for (int e : j.classes[k]) prod *= p.edges[static_cast<std::size_t>(e - 1)];
    const MPoly t = MPoly::variable(sys.vars, sys.vars[k + 2]);
    sys.equations.push_back((t * t - prod).embed(sys.vars));
  }
  for (const auto& h : p.edges) sys.inequalities.push_back({h.embed(sys.vars), Relation::kGe});
  sys.description = "doubled polygon surface: " + std::to_string(p.size()) + " edges, " +
                    std::to_string(j.size()) + " classes";
  return sys;
}

RegularityReport verify_regularity(const ConvexPolygon& p, const EdgePartition& j) {
  if (!check_compatibility(p, j)) throw Error("incompatible partition");
  const std::size_t n = p.size();
  const std::size_t s = j.size();
  std::vector<MPoly> products;
  for (const auto& cls : j.classes) {
    MPoly prod = MPoly::constant(kXY, Rat(1));
    for (int e : cls) prod *= p.edges[static_cast<std::size_t>(e - 1)];
    products.push_back(prod);
  }
  std::vector<std::pair<std::string, Point>> points;
  for (std::size_t i = 0; i < n; ++i) points.emplace_back("vertex " + std::to_string(i + 1), p.vertices[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % n];
    points.emplace_back("midpoint of edge " + std::to_string(i + 1),
                        Point{(a.first + b.first) / 2, (a.second + b.second) / 2});
  }
  points.emplace_back("centroid", centroid(p));

  const VarietySystem sys = emit_surface(p, j);
  RegularityReport rep;
  rep.ok = true;
  for (const auto& [label, q] : points) {
    ++rep.points;
    std::size_t nonvanishing = 0;
    std::vector<std::vector<Rat>> grads;
    std::vector<Rat> values;
    for (const auto& prod : products) {
      const Rat v = eval_at(prod, q);
      values.push_back(v);
      if (v != 0) {
        ++nonvanishing;  // row pivots on its own 2 t_k entry
      } else {
        grads.push_back({eval_at(poly::partial(prod, "x"), q), eval_at(poly::partial(prod, "y"), q)});
      }
    }
    const std::size_t rank = nonvanishing + poly::matrix_rank(grads);
    if (rank != s) {
      rep.ok = false;
      if (rep.witness.empty()) rep.witness = label + ": rank " + std::to_string(rank) + " < " + std::to_string(s);
      continue;
    }
    if (std::all_of(values.begin(), values.end(), is_rational_square)) {
      poly::Assignment at{{"x", q.first}, {"y", q.second}};
      for (std::size_t k = 0; k < s; ++k) at[sys.vars[k + 2]] = rational_sqrt(values[k]);
      const std::size_t full = poly::matrix_rank(poly::jacobian_at(sys.equations, sys.vars, at));
      ++rep.full_checks;
      if (full != rank) {
        rep.ok = false;
        if (rep.witness.empty()) rep.witness = label + ": full Jacobian rank " + std::to_string(full) + " disagrees";
      }
    }
  }
  return rep;
}

std::optional<long> genus_formula(int n, int s) {
  if (!admissible(n, s)) return std::nullopt;
  Rat g(n - 4);
  if (s >= 3) {
    g *= Rat(BigInt(1) << static_cast<mp_bitcnt_t>(s - 3));
  } else {
    g /= Rat(BigInt(1) << static_cast<mp_bitcnt_t>(3 - s));
  }
  g += 1;
  if (g < 0 || g.get_den() != 1 || !g.get_num().fits_slong_p()) return std::nullopt;
  return g.get_num().get_si();
}

EulerCounts euler_formula(int n, int s) {
  if (!genus_formula(n, s)) throw Error("inadmissible pair (n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")");
  const long q = 1L << (s - 2);
  return {q * n, 2 * q * n, 4 * q, q * (4 - n)};
}

TopologyReport quotient_complex(const ConvexPolygon& p, const EdgePartition& j) {
  if (!check_compatibility(p, j)) throw Error("incompatible partition");
  const std::size_t n = p.size();
  const std::size_t s = j.size();
  const auto cls = class_of_edges(j, n);
  const std::size_t copies = std::size_t{1} << s;
  // Item (c, i) for copy c and edge or vertex i is c * n + i. Vertex i is the
  // start of edge i.
  DisjointSets edges(copies * n);
  DisjointSets vertices(copies * n);
  DisjointSets faces(copies);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t other = c ^ (std::size_t{1} << cls[i]);
      edges.unite(c * n + i, other * n + i);
      vertices.unite(c * n + i, other * n + i);
      vertices.unite(c * n + (i + 1) % n, other * n + (i + 1) % n);
      faces.unite(c, other);
    }
  }
  TopologyReport rep;
  rep.v = static_cast<long>(vertices.count());
  rep.e = static_cast<long>(edges.count());
  rep.f = static_cast<long>(copies);
  rep.chi = rep.v - rep.e + rep.f;
  rep.connected = faces.count() == 1;
  // Gluing is the identity on the polygon, so glued copies must carry
  // opposite orientations: a proper 2-coloring of the copy graph.
  std::vector<int> orient(copies, 0);
  rep.orientable = true;
  for (std::size_t start = 0; start < copies; ++start) {
    if (orient[start] != 0) continue;
    orient[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t other = c ^ (std::size_t{1} << cls[i]);
        if (orient[other] == 0) {
          orient[other] = -orient[c];
          stack.push_back(other);
        } else if (orient[other] == orient[c]) {
          rep.orientable = false;
        }
      }
    }
  }
  if (rep.connected && rep.chi <= 2 && rep.chi % 2 == 0) rep.genus = (2 - rep.chi) / 2;
  return rep;
}

std::string table(int n_max, int s_max) {
  if (n_max < 3) throw Error("table needs n_max >= 3");
  std::ostringstream os;
  constexpr int kWidth = 5;
  os << std::left << std::setw(kWidth) << "n\\s";
  for (int s = 2; s <= s_max; ++s) os << std::right << std::setw(kWidth) << ("s=" + std::to_string(s));
  os << '\n';
  for (int n = 3; n <= n_max; ++n) {
    os << std::left << std::setw(kWidth) << ("n=" + std::to_string(n));
    for (int s = 2; s <= s_max; ++s) {
      const auto g = genus_formula(n, s);
      os << std::right << std::setw(kWidth) << (g ? std::to_string(*g) : std::string("--"));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cornerforge::surface
