#include "plum/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "check/acceptance.hpp"
#include "plum/bounds.hpp"
#include "plum/diagram.hpp"
#include "plum/invariants.hpp"
#include "plum/io.hpp"
#include "plum/l1_solver.hpp"
#include "plum/move_space.hpp"
#include "plum/plum_graph.hpp"

namespace plum::cli {

namespace {

using io::json;

struct Report {
  std::string status = "pass";
  json payload = json::object();
  std::vector<std::string> violations;

  void violate(std::string what) {
    status = "fail";
    violations.push_back(std::move(what));
  }
};

json cycle_json(const Cycle& c) {
  json steps = json::array();
  for (const auto& s : c.steps()) steps.push_back(json::array({s.edge, s.forward}));
  return steps;
}

json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::vector<int> parse_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "' in target");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty target");
  return out;
}

json l1_json(const L1Result& r) {
  return {{"cost", r.cost}, {"lowerBound", r.lower_bound}, {"phi", r.phi}, {"achieved", r.achieved},
          {"states", r.states}};
}

Report gen(int n, const std::string& kind) {
  Report r;
  if (kind == "standard") r.payload = io::to_json(standard_plum_diagram(n));
  else if (kind == "trivial") r.payload = io::to_json(trivial_plum_diagram(n));
  else if (kind == "graph") r.payload = io::to_json(build_plum_graph(n).graph);
  else r.payload = io::to_json(projection_of(standard_plum_diagram(n)));
  return r;
}

Report validate(const std::string& file) {
  Report r;
  const json j = io::read_file(file);
  std::vector<std::string> problems;
  if (io::has_layering(j)) {
    const Diagram d = io::diagram_from_json(j);
    problems = validate_diagram(d);
    r.payload = {{"kind", "diagram"}, {"crossings", d.crossing_count()}};
  } else {
    const Projection p = io::projection_from_json(j);
    problems = validate_projection(p);
    r.payload = {{"kind", "projection"}, {"crossings", p.crossing_count()}};
  }
  r.payload["violations"] = problems;
  for (auto& p : problems) r.violate(p);
  return r;
}

Report invariants(const std::string& file, bool certificate) {
  Report r;
  const Diagram d = io::diagram_from_json(io::read_file(file));
  if (auto problems = validate_diagram(d); !problems.empty()) {
    for (auto& p : problems) r.violate("invalid diagram: " + p);
    return r;
  }
  r.payload["crossings"] = d.crossing_count();
  if (auto n = detect_plum_order(d.graph)) r.payload["linkingVector"] = linking_vector(d, build_plum_graph(*n)).entries;
  if (!certificate) return r;
  const Certificate cert = nontriviality_certificate(d, d.graph);
  json witnesses = json::array();
  for (const auto& w : cert.witnesses) {
    json cycles = json::array();
    for (const auto& c : w.cycles) cycles.push_back(cycle_json(c));
    witnesses.push_back({{"cycles", cycles}, {"invariant", w.invariant}, {"value", mpz_json(w.value)}});
  }
  r.payload["verdict"] = cert.verdict == Verdict::nontrivial ? "nontrivial" : "inconclusive";
  r.payload["hopfCount"] = cert.hopf_count;
  r.payload["witnesses"] = witnesses;
  return r;
}

Report moveset(int n) {
  Report r;
  const PlumGraph p = build_plum_graph(n);
  const MoveSet ms = move_set(n);
  json labeled = json::array();
  for (const auto& lv : ms.labeled) labeled.push_back({{"label", lv.label}, {"vector", lv.value}});
  json pairs = json::array();
  for (const auto& pair : disjoint_edge_pairs(p)) {
    pairs.push_back({{"edges", {pair.first, pair.second}},
                     {"labels", {p.edge_label(pair.first), p.edge_label(pair.second)}},
                     {"class", to_string(pair.kind)},
                     {"vector", crossing_change_delta(p, pair.first, pair.second, 1).value}});
  }
  r.payload = {{"n", n}, {"labeled", labeled}, {"raw", ms.raw}, {"matchesClosedForm", ms.matches_closed_form},
               {"pairs", pairs}};
  if (!ms.matches_closed_form) r.violate("enumerated move set differs from the closed form");
  return r;
}

Report l1_solve(std::optional<int> dim, const std::string& gens_file, std::optional<int> n, const std::string& target,
                std::optional<int> pinned, const L1Budget& budget) {
  Report r;
  L1Problem problem;
  if (!gens_file.empty()) problem.generators = io::vectors_from_json(io::read_file(gens_file));
  else if (n) problem.generators = move_set(*n).raw;
  else throw CLI::ValidationError("--gens", "give --gens or --n");
  problem.target = parse_vector(target);
  problem.dim = dim.value_or(static_cast<int>(problem.target.size()));
  problem.pinned = pinned.value_or(-1);
  const L1Result result = min_l1(problem, budget);
  r.payload = l1_json(result);
  if (result.status == L1Status::unresolved) {
    r.status = "unresolved";
    r.payload["reason"] = result.reason;
  }
  return r;
}

Report theorem1(int n, int lower_cap, const L1Budget& budget) {
  Report r;
  const UnknottingReport u = verify_unknotting_number(n, lower_cap, budget);
  r.payload = {{"n", n}, {"upperTerms", u.upper_terms}, {"upperSum", u.upper_sum},
               {"upperTermsRealized", u.upper_terms_realized}};
  r.payload["upper"] = u.upper_ok ? json(u.upper_terms.size()) : json(nullptr);
  r.payload["lower"] = u.lower ? json(*u.lower) : json(nullptr);
  if (!u.upper_ok) r.violate("explicit sequence does not realize (2n+1,0,...,0) in 2n equatorial moves");
  if (u.lower) {
    if (*u.lower != 2 * n) r.violate("certified minimum " + std::to_string(*u.lower) + " differs from 2n");
  } else {
    r.payload["lowerNote"] = u.lower_note;
    if (r.status == "pass") r.status = "unresolved";
  }
  return r;
}

Report subclaims(int n, const L1Budget& budget) {
  Report r;
  const auto gens = move_set(n).raw;
  json rows = json::array();
  for (int k = 1; k <= n; ++k) {
    const PrefixResult pr = prefix_min_l1(gens, n, k, budget);
    json row = {{"k", k}, {"expected", n + k}};
    if (pr.search.status != L1Status::solved) {
      row["reason"] = pr.search.reason;
      if (r.status == "pass") r.status = "unresolved";
      rows.push_back(row);
      continue;
    }
    row["cost"] = pr.search.cost;
    if (pr.search.cost != n + k) r.violate("k=" + std::to_string(k) + ": minimum " + std::to_string(pr.search.cost));
    if (pr.next_values) {
      row["nextCoordinate"] = k + 2;
      row["values"] = *pr.next_values;
      if (k <= n - 2)
        for (int v : *pr.next_values)
          if (v < (k == 1 ? 0 : -1) || v > 1)
            r.violate("k=" + std::to_string(k) + ": coordinate " + std::to_string(k + 2) + " takes " + std::to_string(v));
    }
    rows.push_back(row);
  }
  r.payload = {{"n", n}, {"subclaims", rows}};
  return r;
}

Report analyze(const std::string& file) {
  Report r;
  const json j = io::read_file(file);
  const Projection p = io::has_layering(j) ? projection_of(io::diagram_from_json(j)) : io::projection_from_json(j);
  if (auto problems = validate_projection(p); !problems.empty()) {
    for (auto& problem : problems) r.violate("invalid projection: " + problem);
    return r;
  }
  int nontrivial = 0;
  json hopf = json::array();
  for (const auto& d : resolutions(p)) {
    const Certificate cert = nontriviality_certificate(d, d.graph);
    nontrivial += cert.verdict == Verdict::nontrivial;
    hopf.push_back(cert.hopf_count);
  }
  const int total = 1 << p.crossing_count();
  r.payload = {{"crossings", p.crossing_count()}, {"resolutions", total}, {"nontrivial", nontrivial},
               {"hopfCounts", hopf}, {"knottedCertified", nontrivial == total}};
  if (nontrivial != total)
    r.violate(std::to_string(total - nontrivial) + " resolutions carry no nontriviality witness");
  return r;
}

struct BoundsInput {
  std::string graph;
  std::string tree;
  bool optimize = false;
  std::optional<int> root;
};

BoundConstants constants_for(const BoundsInput& in) {
  const PlanarGraph g = io::graph_from_json(io::read_file(in.graph));
  if (in.optimize) return optimize_constants(g);
  SpanningTree t = in.tree.empty() ? spanning_tree(g, TreeStrategy::bfs, in.root.value_or(0))
                                   : io::tree_from_json(io::read_file(in.tree));
  if (in.root) t.root = *in.root;
  return tree_bound_constants(g, t);
}

Report bounds(const BoundsInput& in) {
  Report r;
  const BoundConstants c = constants_for(in);
  r.payload = {{"tree", io::to_json(c.tree)}, {"bMap", c.branch}, {"k", c.k}, {"l", c.l},
               {"b", c.b}, {"a", c.a}, {"A", c.A()}, {"B", c.B()}};
  return r;
}

Report bounds_eval(const BoundsInput& in, int crossings) {
  Report r;
  r.payload = {{"c", crossings}, {"trivializable", trivializable_bound(crossings)}};
  if (in.graph.empty()) return r;
  const BoundConstants c = constants_for(in);
  r.payload["A"] = c.A();
  r.payload["B"] = c.B();
  r.payload["value"] = c.evaluate(crossings);
  return r;
}

Report selftest() {
  Report r;
  json rows = json::array();
  for (const auto& c : acceptance::run_all()) {
    rows.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
    if (!c.pass) r.violate("criterion " + std::to_string(c.id) + ": " + c.detail);
  }
  r.payload = {{"criteria", rows}};
  return r;
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

void emit(std::ostream& out, const std::string& command, const Report& r, double ms, bool pretty) {
  if (pretty) {
    out << "command:  " << command << "\nstatus:   " << r.status << "\nduration: " << ms << " ms\n";
    for (const auto& v : r.violations) out << "violation: " << v << '\n';
    out << "payload:\n" << r.payload.dump(2) << '\n';
    return;
  }
  json j = {{"command", command}, {"status", r.status}, {"payload", r.payload}, {"durationMs", ms}};
  if (!r.violations.empty()) j["violations"] = r.violations;
  out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plum graph toolkit: diagrams, linking vectors, move sets and unknotting bounds", "plumgraph"};
  app.fallthrough();
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable report");

  std::function<Report()> action;
  L1Budget budget;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-cost", budget.max_cost, "Largest cost searched")->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-states", budget.max_states, "Largest number of visited lattice points");
  };

  int n = 1;
  std::string kind = "standard";
  auto* plum_cmd = app.add_subcommand("plum", "Plum graph generators");
  plum_cmd->require_subcommand(1);
  auto* gen_cmd = plum_cmd->add_subcommand("gen", "Emit a plum graph, diagram or projection");
  gen_cmd->add_option("--n", n, "Plum parameter n (graph has 4n+4 vertices)")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--kind", kind, "standard | trivial | graph | projection")
      ->check(CLI::IsMember({"standard", "trivial", "graph", "projection"}));
  gen_cmd->callback([&] { action = [&] { return gen(n, kind); }; });

  std::string file;
  auto* diagram_cmd = app.add_subcommand("diagram", "Diagram utilities");
  diagram_cmd->require_subcommand(1);
  auto* validate_cmd = diagram_cmd->add_subcommand("validate", "Check every structural invariant of a diagram");
  auto* validate_opt = validate_cmd->add_option("--diagram,--file", file, "Diagram or projection JSON")->required();
  validate_opt->check(CLI::ExistingFile);
  validate_cmd->callback([&] { action = [&] { return validate(file); }; });

  bool no_certificate = false;
  auto* inv_cmd = app.add_subcommand("invariants", "Linking vector and nontriviality witnesses of a diagram");
  inv_cmd->add_option("--diagram,--file", file, "Diagram JSON")->required()->check(CLI::ExistingFile);
  inv_cmd->add_flag("--no-certificate", no_certificate, "Skip the scan over all cycles and cycle pairs");
  inv_cmd->callback([&] { action = [&] { return invariants(file, !no_certificate); }; });

  auto* move_cmd = app.add_subcommand("moveset", "Crossing-change move vectors of the plum graph");
  move_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  move_cmd->callback([&] { action = [&] { return moveset(n); }; });

  std::optional<int> dim;
  std::optional<int> gen_n;
  std::optional<int> pinned;
  std::string gens_file;
  std::string target;
  auto* l1_cmd = app.add_subcommand("l1", "Minimum-L1 lattice search");
  l1_cmd->require_subcommand(1);
  auto* solve_cmd = l1_cmd->add_subcommand("solve", "Minimise sum |phi| with sum phi_g g = target");
  solve_cmd->add_option("--dim", dim, "Dimension (defaults to the target length)")->check(CLI::Range(1, 6));
  solve_cmd->add_option("--gens", gens_file, "JSON array of generator vectors")->check(CLI::ExistingFile);
  solve_cmd->add_option("--n", gen_n, "Use the plum move set for this n as generators")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--target", target, "Comma-separated target, e.g. 5,0")->required();
  solve_cmd->add_option("--pinned", pinned, "Only the first k coordinates must match")->check(CLI::NonNegativeNumber);
  add_budget(solve_cmd);
  solve_cmd->callback([&] { action = [&] { return l1_solve(dim, gens_file, gen_n, target, pinned, budget); }; });

  int lower_cap = 4;
  auto* verify_cmd = app.add_subcommand("verify", "Certify the unknotting-number statements");
  verify_cmd->require_subcommand(1);
  auto* thm_cmd = verify_cmd->add_subcommand("theorem1", "Lower bound by search and the explicit 2n-step sequence");
  thm_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 12));
  thm_cmd->add_option("--lower-cap", lower_cap, "Largest n for the exhaustive lower bound");
  add_budget(thm_cmd);
  thm_cmd->callback([&] { action = [&] { return theorem1(n, lower_cap, budget); }; });
  auto* sub_cmd = verify_cmd->add_subcommand("subclaims", "Prefix-constrained minima for k = 1..n");
  sub_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  add_budget(sub_cmd);
  sub_cmd->callback([&] { action = [&] { return subclaims(n, budget); }; });

  auto* proj_cmd = app.add_subcommand("projection", "Projection analysis");
  proj_cmd->require_subcommand(1);
  auto* analyze_cmd = proj_cmd->add_subcommand("analyze", "Certify every resolution of a projection");
  analyze_cmd->add_option("--file,--diagram", file, "Projection JSON")->required()->check(CLI::ExistingFile);
  analyze_cmd->callback([&] { action = [&] { return analyze(file); }; });

  BoundsInput bounds_in;
  int crossings = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Constants of the linear unknotting bound");
  bounds_cmd->add_option("--graph", bounds_in.graph, "Graph JSON")->check(CLI::ExistingFile);
  auto* tree_opt = bounds_cmd->add_option("--tree", bounds_in.tree, "Spanning tree JSON")->check(CLI::ExistingFile);
  bounds_cmd->add_flag("--optimize", bounds_in.optimize, "Search all spanning trees and roots")->excludes(tree_opt);
  bounds_cmd->add_option("--root", bounds_in.root, "Root vertex")->check(CLI::NonNegativeNumber);
  auto* eval_cmd = bounds_cmd->add_subcommand("eval", "Evaluate A c + B and floor(c/2)");
  eval_cmd->add_option("--c", crossings, "Crossing number")->required()->check(CLI::NonNegativeNumber);
  eval_cmd->callback([&] { action = [&] { return bounds_eval(bounds_in, crossings); }; });
  bounds_cmd->callback([&] {
    if (action) return;
    if (bounds_in.graph.empty()) throw CLI::RequiredError("--graph");
    action = [&] { return bounds(bounds_in); };
  });

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->callback([&] { action = [&] { return selftest(); }; });

  std::vector<std::string> argv_store{"plumgraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return ExitCode::usage;
  }

  const std::string command = join(args);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = action();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::exception& e) {
    report = Report{};
    report.violate(e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(out, command, report, ms, pretty);
  if (report.status == "pass") return ExitCode::pass;
  return report.status == "unresolved" ? ExitCode::unresolved : ExitCode::fail;
}

}  // namespace plum::cli
