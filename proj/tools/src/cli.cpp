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


#include "cornerforge_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cornerforge/double_fold.hpp"
#include "cornerforge/drill_algebraic.hpp"
#include "cornerforge/drill_local.hpp"
#include "cornerforge/error.hpp"
#include "cornerforge/germ.hpp"
#include "cornerforge/io.hpp"
#include "cornerforge/suite.hpp"
#include "cornerforge/surface.hpp"

namespace cornerforge::cli {
namespace {

using io::Json;

struct Globals {
  std::string out;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  int max_depth = 8;
};

// What a command produces. `text` replaces the JSON report when set.
struct Outcome {
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Verdict> verdicts;
  std::optional<std::string> text;
};

// Files written by --out hold a whole report; readers accept either that or
// the bare artifact.
Json load_artifact(const std::string& path) {
  Json j = io::read_file(path);
  if (j.is_object() && j.contains("command") && j.contains("result")) return j.at("result");
  return j;
}

Verdict verdict(std::string name, bool pass, std::string witness) {
  return Verdict{std::move(name), pass, std::move(witness)};
}

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rat(item));
  return out;
}

surface::EdgePartition parse_partition(const std::string& text) {
  surface::EdgePartition p;
  std::stringstream in(text);
  std::string cls;
  while (std::getline(in, cls, ';')) {
    std::vector<int> members;
    std::stringstream items(cls);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        members.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error("malformed partition '" + text + "'");
      }
    }
    p.classes.push_back(members);
  }
  return p;
}

// ---------------------------------------------------------------------------
// germ, desing
// ---------------------------------------------------------------------------

Outcome germ_e(const std::string& path) {
  const auto g = io::germ_from_json(load_artifact(path));
  const int e = germ::e_value(g);
  Outcome o;
  o.inputs = {{"germ", io::germ_to_json(g)}};
  o.result = {{"e", e}, {"disconnecting", germ::disconnecting_coords(g)}, {"corner", germ::is_corner_germ(g)}};
  o.verdicts.push_back(verdict("e_is_never_one", e != 1, "e = " + std::to_string(e)));
  return o;
}

Outcome germ_normalize(const std::string& path) {
  const auto g = io::germ_from_json(load_artifact(path));
  const auto n = germ::normalize(g);
  Outcome o;
  o.inputs = {{"germ", io::germ_to_json(g)}};
  o.result = io::germ_to_json(n);
  o.verdicts.push_back(verdict("normalize_is_idempotent", germ::normalize(n) == n, "normalized twice"));
  return o;
}

Outcome germ_strata(const std::string& path) {
  const auto g = io::germ_from_json(load_artifact(path));
  const int e = germ::e_value(g);
  Outcome o;
  o.inputs = {{"germ", io::germ_to_json(g)}};
  o.result = Json::array();
  std::optional<std::string> bad;
  for (const auto& s : germ::enumerate_strata(g)) {
    const auto face = germ::germ_at_face(g, s);
    const int ef = germ::e_value(face);
    if (ef > e && !bad) bad = io::stratum_to_json(s).dump();
    o.result.push_back({{"stratum", io::stratum_to_json(s)}, {"germ", io::germ_to_json(face)}, {"e", ef}});
  }
  o.verdicts.push_back(verdict("face_semicontinuity", !bad,
                               bad ? "e grows on stratum " + *bad
                                   : std::to_string(o.result.size()) + " strata, e <= " + std::to_string(e)));
  return o;
}

Outcome germ_oracle(const std::string& path, std::optional<int> removed, int grid) {
  const auto g = io::germ_from_json(load_artifact(path));
  const auto n = germ::grid_connectivity_oracle(g, removed, grid);
  Outcome o;
  o.inputs = {{"germ", io::germ_to_json(g)}, {"removed", removed ? Json(*removed) : Json(nullptr)}, {"grid", grid}};
  o.result = {{"components", n}};
  if (removed) {
    const bool d = germ::disconnects(g, *removed);
    o.verdicts.push_back(verdict("disconnects_matches_oracle", d == (n > 1),
                                 "rule says " + std::string(d ? "disconnects" : "connected") + ", grid finds " +
                                     std::to_string(n) + " component(s)"));
  } else {
    o.verdicts.push_back(verdict("germ_is_connected", n == 1, std::to_string(n) + " component(s)"));
  }
  return o;
}

Outcome desing(const std::string& path, int max_depth) {
  const auto g = io::germ_from_json(load_artifact(path));
  Outcome o;
  o.inputs = {{"germ", io::germ_to_json(g)}, {"max_depth", max_depth}};
  try {
    const auto tree = drill::desingularize(g, max_depth);
    const auto leaves = drill::tree_leaves(tree);
    std::size_t corners = 0;
    for (const auto* leaf : leaves) corners += germ::is_corner_germ(leaf->germ);
    o.result = io::tree_to_json(tree);
    o.verdicts.push_back(verdict("terminates_within_max_depth", true, "depth " + std::to_string(drill::tree_depth(tree))));
    o.verdicts.push_back(verdict("leaves_are_corner_germs", corners == leaves.size(),
                                 std::to_string(corners) + " of " + std::to_string(leaves.size()) + " leaves"));
  } catch (const Error& e) {
    o.result = nullptr;
    o.verdicts.push_back(verdict("terminates_within_max_depth", false, e.what()));
  }
  return o;
}

// ---------------------------------------------------------------------------
// drill
// ---------------------------------------------------------------------------

algdrill::Side parse_side(const std::string& s) {
  if (s == "+") return algdrill::Side::kPlus;
  if (s == "-") return algdrill::Side::kMinus;
  if (s == "both") return algdrill::Side::kBoth;
  throw Error("epsilon must be +, - or both");
}

Outcome drill_emit(const std::string& path, const std::string& epsilon) {
  const auto c = io::center_from_json(load_artifact(path));
  const auto side = parse_side(epsilon);
  const auto sys = algdrill::emit_twisted_double(c, side);
  Outcome o;
  o.inputs = {{"center", io::center_to_json(c)}, {"epsilon", epsilon}};
  o.result = io::system_to_json(sys);
  o.result["center"] = io::center_to_json(c);
  o.result["epsilon"] = epsilon;
  return o;
}

Outcome drill_verify(const std::string& path, std::size_t samples, const Globals& g) {
  const Json j = load_artifact(path);
  if (!j.is_object() || !j.contains("center")) throw Error("system has no \"center\"; produce it with drill emit");
  const auto sys = io::system_from_json(j);
  const auto c = io::center_from_json(j.at("center"));
  const std::string epsilon = j.value("epsilon", std::string("both"));
  const auto side = parse_side(epsilon);
  const auto lift_side = side == algdrill::Side::kMinus ? algdrill::Side::kMinus : algdrill::Side::kPlus;
  const auto both = algdrill::emit_twisted_double(c, algdrill::Side::kBoth);
  const auto opposite = algdrill::emit_twisted_double(
      c, lift_side == algdrill::Side::kPlus ? algdrill::Side::kMinus : algdrill::Side::kPlus);
  Rng rng = Rng(g.seed).split(7);

  Outcome o;
  o.inputs = {{"system", io::system_to_json(sys)}, {"epsilon", epsilon}, {"samples", samples}};
  const auto expected = algdrill::emit_twisted_double(c, side);
  bool same = expected.vars == sys.vars && expected.equations == sys.equations &&
              expected.inequalities.size() == sys.inequalities.size();
  for (std::size_t i = 0; same && i < sys.inequalities.size(); ++i) {
    same = expected.inequalities[i].poly == sys.inequalities[i].poly &&
           expected.inequalities[i].relation == sys.inequalities[i].relation;
  }
  o.verdicts.push_back(verdict("system_matches_center", same, "re-emitted from the embedded center"));
  if (c.anchors.empty()) throw Error("center has no anchors to sample around");

  std::size_t lifted = 0, round_trip = 0, on_system = 0, involution = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = algdrill::sample_on_variety(c, c.anchors[i % c.anchors.size()], rng);
    if (x.empty()) continue;
    std::vector<double> z;
    try {
      z = algdrill::lift_point(c, x, lift_side);
    } catch (const Error&) {
      continue;
    }
    ++lifted;
    round_trip += std::equal(x.begin(), x.end(), z.begin());
    const double r = max_residual(sys, z);
    worst = std::max(worst, r);
    on_system += r <= g.tolerance && satisfies_inequalities(sys, z, g.tolerance);
    for (std::size_t k = x.size(); k < z.size(); ++k) z[k] = -z[k];
    involution += max_residual(both, z) <= g.tolerance && satisfies_inequalities(opposite, z, g.tolerance);
  }
  const std::string of = " of " + std::to_string(lifted) + " lifted samples";
  o.verdicts.push_back(verdict("lifts_exist", lifted > 0, std::to_string(lifted) + " of " + std::to_string(samples)));
  o.verdicts.push_back(verdict("projection_round_trip", lifted > 0 && round_trip == lifted, std::to_string(round_trip) + of));
  o.verdicts.push_back(verdict("lifts_satisfy_system", lifted > 0 && on_system == lifted,
                               std::to_string(on_system) + of + ", max residual " + fmt(worst)));
  o.verdicts.push_back(verdict("sigma_involution", lifted > 0 && involution == lifted, std::to_string(involution) + of));

  const auto theta = algdrill::theta_check(c, 100, rng, g.tolerance);
  o.verdicts.push_back(verdict("theta_two_to_one", theta.ok && theta.cardinality_two == theta.samples,
                               std::to_string(theta.cardinality_two) + " of " + std::to_string(theta.samples) +
                                   " fibers have two points"));
  Json fibers = Json::array();
  for (const auto& q : c.anchors) {
    auto fib = algdrill::verify_fiber(c, q, 16, rng, g.tolerance);
    if (!fib.on_center) continue;
    fibers.push_back({{"q", q}, {"distinct_points", fib.distinct_points}, {"dimension", fib.dimension}});
    o.verdicts.push_back(verdict("fiber_over_center", fib.ok,
                                 fib.message.empty() ? std::to_string(fib.distinct_points) + " distinct points, dimension " +
                                                           std::to_string(fib.dimension)
                                                     : fib.message));
  }
  o.result = {{"lifted", lifted}, {"max_residual", worst}, {"fibers", fibers}};
  return o;
}

// ---------------------------------------------------------------------------
// double, fold
// ---------------------------------------------------------------------------

Outcome double_emit(const std::string& path, const std::string& copy) {
  if (copy != "plus" && copy != "both") throw Error("copy must be plus or both");
  const auto spec = io::corners_from_json(load_artifact(path));
  Outcome o;
  o.inputs = {{"spec", io::corners_to_json(spec)}, {"copy", copy}};
  o.result = io::system_to_json(corners::emit_double(spec, copy == "plus"));
  return o;
}

Outcome double_verify(const std::string& path, std::size_t samples, double lo, double hi,
                      const std::vector<std::string>& witnesses, const Globals& g) {
  const auto spec = io::corners_from_json(load_artifact(path));
  const auto sys = corners::emit_double(spec);
  Rng rng = Rng(g.seed).split(9);
  Outcome o;
  o.inputs = {{"spec", io::corners_to_json(spec)}, {"samples", samples}, {"box", {lo, hi}}, {"witnesses", witnesses}};

  std::size_t accepted = 0, attempts = 0, round_trip = 0, on_double = 0, flips = 0;
  std::vector<std::vector<double>> points;
  while (accepted < samples && attempts < 1000 * samples) {
    ++attempts;
    std::vector<double> x;
    for (std::size_t i = 0; i < spec.vars.size(); ++i) x.push_back(rng.uniform(lo, hi));
    bool inside = true;
    for (const auto& h : spec.inequalities) inside = inside && poly::eval(h, x) >= 0;
    if (!inside) continue;
    ++accepted;
    auto z = corners::section_plus(spec, x);
    round_trip += corners::project(spec, z) == x && corners::section_plus(spec, corners::project(spec, z)) == z;
    on_double += max_residual(sys, z) <= g.tolerance;
    points.push_back(z);
    for (std::size_t i = x.size(); i < z.size(); ++i) {
      if (rng.coin()) z[i] = -z[i];
    }
    flips += max_residual(sys, z) <= g.tolerance;
  }
  const std::string of = " of " + std::to_string(accepted) + " samples";
  o.verdicts.push_back(verdict("samples_found", accepted == samples, std::to_string(accepted) + " of " +
                                                                         std::to_string(samples) + " requested"));
  o.verdicts.push_back(verdict("section_round_trip", round_trip == accepted, std::to_string(round_trip) + of));
  o.verdicts.push_back(verdict("section_on_double", on_double == accepted, std::to_string(on_double) + of));
  o.verdicts.push_back(verdict("sign_involutions", flips == accepted, std::to_string(flips) + of));
  // Sampled points have every t_i > 0, where the rank is l.
  const auto numeric = corners::smoothness_check_numeric(spec, points, g.tolerance);
  o.verdicts.push_back(verdict("rank_at_samples", numeric.ok,
                               numeric.witness ? "rank drops at sample " + std::to_string(*numeric.witness) : "rank l"));
  if (!witnesses.empty()) {
    std::vector<std::vector<Rat>> pts;
    for (const auto& w : witnesses) pts.push_back(parse_rat_list(w));
    std::size_t exact = 0;
    for (const auto& p : pts) {
      if (p.size() != sys.vars.size()) throw Error("witness '" + witnesses[exact] + "' has the wrong length");
      exact += vanishes_exactly(sys, p);
    }
    o.verdicts.push_back(verdict("witnesses_on_double", exact == pts.size(),
                                 std::to_string(exact) + " of " + std::to_string(pts.size())));
    const auto smooth = corners::smoothness_check(spec, pts);
    o.verdicts.push_back(verdict("exact_rank_at_witnesses", smooth.ok,
                                 smooth.witness ? "rank drops at witness " + witnesses[*smooth.witness] : "rank l"));
  }
  o.result = {{"samples", accepted}, {"attempts", attempts}};
  return o;
}

corners::FoldParams fold_params(const std::string& a, int k) {
  corners::FoldParams p{parse_rat(a), k};
  corners::validate(p);
  return p;
}

Outcome fold_certify(const std::string& a, int k) {
  const auto p = fold_params(a, k);
  const auto f = corners::fold_symbolic(p);
  Outcome o;
  o.inputs = {{"a", format_rat(p.a)}, {"k", k}};
  o.result = {{"P", io::poly_to_json(f.p)}, {"Q", io::poly_to_json(f.q)}};
  o.verdicts = corners::fold_certify(p);
  return o;
}

Outcome fold_junction(const std::string& a, int k, const std::string& h, double tol) {
  const auto p = fold_params(a, k);
  const Rat step = parse_rat(h);
  if (step <= 0) throw Error("step must be positive");
  Outcome o;
  o.inputs = {{"a", format_rat(p.a)}, {"k", k}, {"h", format_rat(step)}, {"tolerance", tol}};
  o.verdicts = corners::junction_check(p, step, tol);
  o.result = {{"checks", o.verdicts.size()}};
  return o;
}

// ---------------------------------------------------------------------------
// surface
// ---------------------------------------------------------------------------

Outcome surface_build(int n, int s, const std::string& partition) {
  const auto poly = surface::lattice_polygon(n);
  std::optional<surface::EdgePartition> j;
  if (partition.empty()) {
    j = surface::canonical_partition(n, s);
    if (!j) throw Error("no compatible partition of " + std::to_string(n) + " edges into " + std::to_string(s) + " classes");
  } else {
    j = parse_partition(partition);
  }
  Outcome o;
  o.inputs = {{"n", n}, {"s", s}, {"partition", io::partition_to_json(*j)}};
  if (j->size() != static_cast<std::size_t>(s)) throw Error("partition does not have s classes");
  const bool compatible = surface::check_compatibility(poly, *j);
  o.verdicts.push_back(verdict("partition_compatible", compatible, "no class holds adjacent edges"));
  if (!compatible) return o;
  const auto top = surface::quotient_complex(poly, *j);
  const auto reg = surface::verify_regularity(poly, *j);
  const auto euler = surface::euler_formula(n, s);
  const auto genus = surface::genus_formula(n, s);
  o.result = {{"polygon", io::polygon_to_json(poly)},
              {"system", io::system_to_json(surface::emit_surface(poly, *j))},
              {"topology", io::topology_to_json(top)}};
  o.verdicts.push_back(verdict("regular_at_all_strata", reg.ok,
                               reg.ok ? std::to_string(reg.points) + " points" : reg.witness));
  o.verdicts.push_back(verdict("euler_matches_formula", top.chi == euler.chi && top.connected,
                               "chi " + std::to_string(top.chi) + " vs " + std::to_string(euler.chi)));
  o.verdicts.push_back(verdict("genus_matches_formula", top.genus == genus,
                               "genus " + (top.genus ? std::to_string(*top.genus) : std::string("none"))));
  return o;
}

Outcome surface_verify(int n, int s) {
  const auto poly = surface::lattice_polygon(n);
  Outcome o;
  o.inputs = {{"n", n}, {"s", s}};
  const auto genus = surface::genus_formula(n, s);
  o.verdicts.push_back(verdict("pair_admissible", genus.has_value(),
                               genus ? "genus " + std::to_string(*genus) : std::string("no compatible partition")));
  if (!genus) return o;
  const auto euler = surface::euler_formula(n, s);
  std::size_t count = 0, regular = 0, euler_ok = 0;
  std::string first;
  for (const auto& j : surface::all_partitions(n, s)) {
    if (!surface::check_compatibility(poly, j)) continue;
    ++count;
    const auto reg = surface::verify_regularity(poly, j);
    regular += reg.ok;
    if (!reg.ok && first.empty()) first = reg.witness;
    const auto top = surface::quotient_complex(poly, j);
    euler_ok += top.chi == euler.chi && top.connected && top.genus == genus;
  }
  const std::string of = " of " + std::to_string(count) + " partitions";
  o.verdicts.push_back(verdict("regular_at_all_strata", regular == count, first.empty() ? std::to_string(regular) + of : first));
  o.verdicts.push_back(verdict("quotient_matches_formula", euler_ok == count, std::to_string(euler_ok) + of));
  o.result = {{"partitions", count}, {"genus", *genus}, {"chi", euler.chi}};
  return o;
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

void emit(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
  } else {
    io::write_file(g.out, text);
  }
}

Json report(const std::string& command, const Outcome& o, const Globals& g, double ms) {
  return Json{{"command", command}, {"inputs", o.inputs},   {"result", o.result},
              {"verdicts", io::verdicts_to_json(o.verdicts)}, {"seed", g.seed}, {"elapsed_ms", ms}};
}

// Suite reports are JSON lines, appended when --out names a file.
int run_suite(const std::vector<int>& only, const Globals& g, std::ostream& out) {
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out, std::ios::app);
    if (!file) throw Error("cannot open '" + g.out + "' for appending");
  }
  std::ostream& sink = g.out.empty() ? out : file;
  bool pass = true;
  for (const auto& c : suite::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = suite::run_criterion(c, g.seed);
    pass = pass && r.pass();
    Outcome o;
    o.inputs = {{"criterion", c.id}, {"title", c.title}, {"budget_seconds", c.budget_seconds}};
    o.verdicts.push_back(r.verdict);
    o.verdicts.push_back(verdict("within_budget", r.within_budget, fmt(r.seconds) + " s"));
    sink << report("suite", o, g, r.seconds * 1000.0).dump() << '\n' << std::flush;
  }
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nash corners toolkit: germs, drilling blow-ups, doubles and surface models", "cornerforge"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "write the report here instead of standard output");
  app.add_option("--seed", g.seed, "generator seed")->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "numeric tolerance")->capture_default_str();
  app.add_option("--max-depth", g.max_depth, "blow-up depth limit")->capture_default_str()->check(CLI::PositiveNumber);

  std::string germ_path, center_path, system_path, spec_path, epsilon = "both", copy = "both";
  std::string a = "1/2", h = "1/1000", partition;
  int k = 2, n = 4, s = 2, n_max = 7, s_max = 7, grid = 9;
  std::optional<int> removed;
  std::size_t samples = 1000;
  double lo = -2.0, hi = 2.0, fd_tol = 1e-6;
  std::vector<std::string> witnesses;
  std::vector<int> only;
  std::function<Outcome()> command;
  std::string name;

  auto leaf = [&](CLI::App* parent, const std::string& sub, const std::string& help, std::function<Outcome()> fn) {
    CLI::App* cmd = parent->add_subcommand(sub, help);
    cmd->fallthrough();
    cmd->callback([&, cmd, fn] {
      name = cmd->get_parent() == &app ? cmd->get_name() : cmd->get_parent()->get_name() + " " + cmd->get_name();
      command = fn;
    });
    return cmd;
  };
  auto group = [&](const std::string& sub, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(sub, help);
    cmd->require_subcommand(1);
    cmd->fallthrough();
    return cmd;
  };

  CLI::App* germ = group("germ", "orthant germ invariants");
  leaf(germ, "e", "e-invariant", [&] { return germ_e(germ_path); })
      ->add_option("--germ", germ_path, "germ JSON")->required();
  leaf(germ, "normalize", "drop inactive coordinates", [&] { return germ_normalize(germ_path); })
      ->add_option("--germ", germ_path, "germ JSON")->required();
  leaf(germ, "strata", "strata and their face germs", [&] { return germ_strata(germ_path); })
      ->add_option("--germ", germ_path, "germ JSON")->required();
  CLI::App* oracle = leaf(germ, "oracle", "grid connectivity", [&] { return germ_oracle(germ_path, removed, grid); });
  oracle->add_option("--germ", germ_path, "germ JSON")->required();
  oracle->add_option("--removed", removed, "remove the hyperplane x_i = 0");
  oracle->add_option("--grid", grid, "points per axis")->capture_default_str()->check(CLI::Range(2, 41));

  leaf(&app, "desing", "desingularize a germ by drilling blow-ups", [&] { return desing(germ_path, g.max_depth); })
      ->add_option("--germ", germ_path, "germ JSON")->required();

  CLI::App* drill = group("drill", "twisted double of a drilling blow-up");
  CLI::App* emit_cmd = leaf(drill, "emit", "emit equations", [&] { return drill_emit(center_path, epsilon); });
  emit_cmd->add_option("--center", center_path, "center JSON")->required();
  emit_cmd->add_option("--epsilon", epsilon, "+, - or both")->capture_default_str();
  CLI::App* dverify = leaf(drill, "verify", "sample and check an emitted system",
                           [&] { return drill_verify(system_path, samples, g); });
  dverify->add_option("--system", system_path, "system JSON from drill emit")->required();
  dverify->add_option("--samples", samples, "lifted samples")->capture_default_str();

  CLI::App* dbl = group("double", "double of a manifold with corners");
  CLI::App* demit = leaf(dbl, "emit", "emit equations", [&] { return double_emit(spec_path, copy); });
  demit->add_option("--spec", spec_path, "corners JSON")->required();
  demit->add_option("--copy", copy, "plus or both")->capture_default_str();
  CLI::App* dbv = leaf(dbl, "verify", "round trips and smoothness",
                       [&] { return double_verify(spec_path, samples, lo, hi, witnesses, g); });
  dbv->add_option("--spec", spec_path, "corners JSON")->required();
  dbv->add_option("--samples", samples, "points of Q")->capture_default_str();
  dbv->add_option("--lo", lo, "sampling box lower bound")->capture_default_str();
  dbv->add_option("--hi", hi, "sampling box upper bound")->capture_default_str();
  dbv->add_option("--witness", witnesses, "rational point of the double, comma separated");

  CLI::App* fold = group("fold", "folding function");
  CLI::App* cert = leaf(fold, "certify", "exact checks", [&] { return fold_certify(a, k); });
  cert->add_option("--a", a, "0 < a <= 1, rational")->capture_default_str();
  cert->add_option("--k", k, "k >= 1")->capture_default_str();
  cert->add_option("--report", g.out, "same as --out");
  CLI::App* junc = leaf(fold, "junction", "finite differences at the junctions", [&] { return fold_junction(a, k, h, fd_tol); });
  junc->add_option("--a", a, "0 < a <= 1, rational")->capture_default_str();
  junc->add_option("--k", k, "k >= 1")->capture_default_str();
  junc->add_option("--step", h, "rational finite-difference step")->capture_default_str();
  junc->add_option("--fd-tolerance", fd_tol, "allowed derivative gap")->capture_default_str();

  CLI::App* surf = group("surface", "surface models");
  CLI::App* build = leaf(surf, "build", "emit and check one model", [&] { return surface_build(n, s, partition); });
  build->add_option("--n", n, "edges")->required()->check(CLI::Range(3, 64));
  build->add_option("--s", s, "classes")->required()->check(CLI::Range(1, 16));
  build->add_option("--partition", partition, "classes like 1,3;2,4 (default: first proper coloring)");
  CLI::App* table = leaf(surf, "table", "genus table", [&] {
    Outcome o;
    o.text = surface::table(n_max, s_max);
    return o;
  });
  table->add_option("--n-max", n_max, "largest n")->capture_default_str()->check(CLI::Range(3, 64));
  table->add_option("--s-max", s_max, "largest s")->capture_default_str()->check(CLI::Range(2, 62));
  CLI::App* sv = leaf(surf, "verify", "check every compatible partition", [&] { return surface_verify(n, s); });
  sv->add_option("--n", n, "edges")->required()->check(CLI::Range(3, 12));
  sv->add_option("--s", s, "classes")->required()->check(CLI::Range(1, 12));

  CLI::App* suite_cmd = app.add_subcommand("suite", "acceptance suite as JSON lines");
  suite_cmd->fallthrough();
  suite_cmd->add_option("--criterion", only, "run only these criteria");

  std::vector<const char*> argv{"cornerforge"};
  for (const auto& a_ : args) argv.push_back(a_.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (suite_cmd->parsed()) return run_suite(only, g, out);
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = command();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.text) {
      emit(*o.text, g, out);
      return kExitPass;
    }
    emit(report(name, o, g, ms).dump(2) + "\n", g, out);
    return all_pass(o.verdicts) ? kExitPass : kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cornerforge::cli
