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

#include "cornerforge/io.hpp"

#include <fstream>
#include <sstream>

#include "cornerforge/error.hpp"

namespace cornerforge::io {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw Error(std::string("expected a JSON object holding '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) throw Error(std::string("missing field '") + name + "'");
  return *it;
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("field '") + what + "' has the wrong type");
  }
}

poly::VarList vars_from(const Json& j) { return get_as<poly::VarList>(field(j, "vars"), "vars"); }

std::vector<poly::MPoly> polys_from(const Json& j, const char* name, const poly::VarList& vars) {
  std::vector<poly::MPoly> out;
  const Json& arr = field(j, name);
  if (!arr.is_array()) throw Error(std::string("field '") + name + "' must be an array");
  for (const auto& p : arr) out.push_back(poly_from_json(p).embed(vars));
  return out;
}

}  // namespace

Json poly_to_json(const poly::MPoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"coeff", format_rat(c)}, {"exps", exps}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

poly::MPoly poly_from_json(const Json& j) {
  const poly::VarList vars = vars_from(j);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw Error("field 'terms' must be an array");
  std::vector<std::pair<poly::Exponents, Rat>> parsed;
  for (const auto& t : terms) {
    const auto coeff = get_as<std::string>(field(t, "coeff"), "coeff");
    const Json& exps = field(t, "exps");
    if (!exps.is_array()) throw Error("field 'exps' must be an array");
    poly::Exponents e;
    for (const auto& x : exps) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw Error("exponents must be non-negative integers");
      e.push_back(static_cast<unsigned>(x.get<long long>()));
    }
    parsed.emplace_back(std::move(e), parse_rat(coeff));
  }
  return poly::MPoly::from_terms(vars, parsed);
}

Json germ_to_json(const germ::OrthantGerm& g) {
  Json orthants = Json::array();
  for (const auto& eps : g.orthants) orthants.push_back(eps);
  return {{"dim", g.dim}, {"divisor", g.divisor}, {"orthants", orthants}};
}

germ::OrthantGerm germ_from_json(const Json& j) {
  germ::OrthantGerm g;
  g.dim = get_as<int>(field(j, "dim"), "dim");
  g.divisor = get_as<std::vector<int>>(field(j, "divisor"), "divisor");
  for (const auto& eps : get_as<std::vector<std::vector<int>>>(field(j, "orthants"), "orthants")) {
    g.orthants.insert(eps);
  }
  germ::validate(g);
  return g;
}

Json stratum_to_json(const germ::StratumDescriptor& s) {
  Json signs = Json::object();
  for (const auto& [c, v] : s.signs) signs[std::to_string(c)] = v;
  return {{"zeros", s.zeros}, {"signs", signs}};
}

Json tree_to_json(const drill::BlowupNode& node) {
  Json children = Json::object();
  for (const auto& [cell, child] : node.children) children[cell] = tree_to_json(child);
  return {{"germ", germ_to_json(node.germ)},
          {"center", node.center ? Json(*node.center) : Json(nullptr)},
          {"children", children}};
}

drill::BlowupNode tree_from_json(const Json& j) {
  drill::BlowupNode node;
  node.germ = germ_from_json(field(j, "germ"));
  const Json& center = field(j, "center");
  if (!center.is_null()) node.center = get_as<std::vector<int>>(center, "center");
  const Json& children = field(j, "children");
  if (!children.is_object()) throw Error("field 'children' must be an object");
  for (const auto& [cell, child] : children.items()) {
    drill::cell_from_string(cell);
    node.children.emplace(cell, tree_from_json(child));
  }
  return node;
}

Json system_to_json(const VarietySystem& s) {
  Json eqs = Json::array();
  for (const auto& e : s.equations) eqs.push_back(poly_to_json(e));
  Json ineqs = Json::array();
  for (const auto& i : s.inequalities) {
    ineqs.push_back({{"poly", poly_to_json(i.poly)}, {"relation", i.relation == Relation::kGe ? ">=" : ">"}});
  }
  return {{"vars", s.vars}, {"equations", eqs}, {"inequalities", ineqs}, {"description", s.description}};
}

VarietySystem system_from_json(const Json& j) {
  VarietySystem s;
  s.vars = vars_from(j);
  s.equations = polys_from(j, "equations", s.vars);
  if (j.contains("inequalities")) {
    for (const auto& i : field(j, "inequalities")) {
      const auto rel = get_as<std::string>(field(i, "relation"), "relation");
      if (rel != ">=" && rel != ">") throw Error("relation must be '>=' or '>'");
      s.inequalities.push_back({poly_from_json(field(i, "poly")).embed(s.vars),
                                rel == ">=" ? Relation::kGe : Relation::kGt});
    }
  }
  if (j.contains("description")) s.description = get_as<std::string>(j["description"], "description");
  return s;
}

Json center_to_json(const algdrill::CenterData& c) {
  Json amb = Json::array();
  for (const auto& p : c.ambient) amb.push_back(poly_to_json(p));
  Json gens = Json::array();
  for (const auto& p : c.generators) gens.push_back(poly_to_json(p));
  return {{"vars", c.vars}, {"ambient", amb}, {"generators", gens}, {"anchors", c.anchors}};
}

algdrill::CenterData center_from_json(const Json& j) {
  algdrill::CenterData c;
  c.vars = vars_from(j);
  if (j.contains("ambient")) c.ambient = polys_from(j, "ambient", c.vars);
  c.generators = polys_from(j, "generators", c.vars);
  if (j.contains("anchors")) c.anchors = get_as<std::vector<std::vector<double>>>(j["anchors"], "anchors");
  for (const auto& a : c.anchors) {
    if (a.size() != c.vars.size()) throw Error("anchor has the wrong number of coordinates");
  }
  return c;
}

Json corners_to_json(const corners::CornersSpec& c) {
  Json ineqs = Json::array();
  for (const auto& p : c.inequalities) ineqs.push_back(poly_to_json(p));
  return {{"vars", c.vars}, {"inequalities", ineqs}};
}

corners::CornersSpec corners_from_json(const Json& j) {
  corners::CornersSpec c;
  c.vars = vars_from(j);
  c.inequalities = polys_from(j, "inequalities", c.vars);
  return c;
}

Json verdict_to_json(const Verdict& v) { return {{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}}; }

Json verdicts_to_json(const std::vector<Verdict>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(verdict_to_json(x));
  return out;
}

Json topology_to_json(const surface::TopologyReport& t) {
  return {{"V", t.v}, {"E", t.e}, {"F", t.f}, {"chi", t.chi},
          {"genus", t.genus ? Json(*t.genus) : Json("invalid")},
          {"connected", t.connected}, {"orientable", t.orientable}};
}

Json partition_to_json(const surface::EdgePartition& p) { return p.classes; }

Json polygon_to_json(const surface::ConvexPolygon& p) {
  Json verts = Json::array();
  for (const auto& [x, y] : p.vertices) verts.push_back({format_rat(x), format_rat(y)});
  Json edges = Json::array();
  for (const auto& h : p.edges) edges.push_back(poly_to_json(h));
  return {{"vertices", verts}, {"edges", edges}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace cornerforge::io
