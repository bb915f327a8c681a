// coprime: build, check and solve minimum coprime labelings.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "coprime/errors.hpp"
#include "coprime/json_io.hpp"
#include "coprime/prism_pattern.hpp"

using namespace coprime;
using nlohmann::json;

namespace {

struct FamilyArgs {
  std::string family;
  int n = 0, m = 0, k = 0;
};

void add_family_opts(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "prism | gp2 | y3 | y5 | stacked | gpstar")->required();
  cmd->add_option("--n", a.n, "cycle length (prism, gp2) or number of layers (y3, y5, stacked)");
  cmd->add_option("--m", a.m, "cycle length of a stacked prism (stacked only)");
  cmd->add_option("--k", a.k, "gpstar parameter");
}

Family to_family(const FamilyArgs& a) {
  if (a.family == "prism") return Prism{a.n};
  if (a.family == "gp2") return GP2{a.n};
  if (a.family == "y3") return StackedPrism{3, a.n};
  if (a.family == "y5") return StackedPrism{5, a.n};
  if (a.family == "stacked") return StackedPrism{a.m, a.n};
  if (a.family == "gpstar") return GPStar{a.k};
  throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
}

int cmd_construct(const FamilyArgs& fa, const std::string& theorem, bool as_json, bool as_dot) {
  Family f = to_family(fa);
  std::optional<Construction> c;
  if (!theorem.empty()) {
    auto r = parse_rule(theorem);
    if (!r) throw CLI::ValidationError("--theorem", "unknown construction id '" + theorem + "'");
    if (!std::holds_alternative<Prism>(f))
      throw CLI::ValidationError("--theorem", "only prism constructions can be chosen by id");
    c = label_prism_by(*r, std::get<Prism>(f).n);
  } else {
    c = construct(f);
  }
  auto rep = verify(c->graph, c->labeling);
  if (as_dot) {
    std::cout << to_dot(c->graph, &c->labeling.labels);
  } else if (as_json) {
    std::cout << labeling_json(c->graph, c->labeling, c->certificate, rep.ok()).dump() << "\n";
  } else {
    std::cout << c->graph.name() << "  " << rule_id(c->certificate.rule) << " (" << c->certificate.case_tag
              << ")  max label " << c->labeling.max_label() << "  " << rep.describe(c->graph) << "\n";
    for (int i = 0; i < c->graph.order(); ++i)
      std::cout << c->graph.vertices()[i].name() << "=" << c->labeling.labels[i]
                << (i + 1 == c->graph.order() ? "\n" : " ");
  }
  return rep.ok() ? 0 : 1;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--in", "cannot open " + path);
  json j = json::parse(in);
  auto loaded = labeling_from_json(j);
  auto rep = verify(loaded.graph, loaded.labeling);
  json out = {{"graph", loaded.graph.name()},
              {"ok", rep.ok()},
              {"prime_labeling", rep.prime_labeling},
              {"max_label", loaded.labeling.max_label()}};
  json conflicts = json::array();
  for (auto& c : rep.conflicts)
    conflicts.push_back({{"edge", {loaded.graph.vertices()[c.a].name(), loaded.graph.vertices()[c.b].name()}},
                         {"labels", {c.la, c.lb}},
                         {"gcd", c.gcd}});
  json dups = json::array();
  for (auto& d : rep.duplicates) {
    json ids = json::array();
    for (int v : d.vertices) ids.push_back(loaded.graph.vertices()[v].name());
    dups.push_back({{"label", d.label}, {"vertices", ids}});
  }
  out["conflicts"] = conflicts;
  out["duplicates"] = dups;
  std::cout << out.dump() << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_solve(const FamilyArgs& fa, const SolverConfig& cfg) {
  Family f = to_family(fa);
  Graph g = build(f);
  std::optional<Construction> known;
  try {
    known = construct(f);
  } catch (const Error&) {
  }
  SolverReport rep;
  try {
    rep = solve(g, cfg, known ? &known->labeling : nullptr);
  } catch (const InfeasibleAtCap& e) {
    std::cerr << "coprime: " << e.what() << "\n";
    return 1;
  }
  json out = report_json(g, rep);
  if (known) out["construction_max_label"] = known->labeling.max_label();
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_scan(const std::string& fam, int from, int to, ScanOptions opts) {
  auto sf = parse_scan_family(fam);
  if (!sf) throw CLI::ValidationError("--family", "unknown family '" + fam + "'");
  auto sum = scan(*sf, from, to, opts, [](const ScanResult& r) { std::cout << scan_json(r).dump() << "\n"; });
  json tally = json::object();
  for (auto& [rule, cnt] : sum.by_rule) tally[rule] = cnt;
  std::cerr << json{{"instances", sum.instances}, {"failures", sum.failures}, {"by_construction", tally}}.dump()
            << "\n";
  return sum.failures ? 1 : 0;
}

int cmd_conjectures(const std::vector<std::string>& which, int cap, const SolverConfig& cfg) {
  std::vector<Conjecture> cs;
  for (auto& w : which) {
    auto c = parse_conjecture(w);
    if (!c) throw CLI::ValidationError("--which", "unknown conjecture '" + w + "'");
    cs.push_back(*c);
  }
  bool bad = false;
  check_conjectures(cs, cap, cfg, [&](const ConjectureCase& c) {
    bad |= c.status == "mismatch";
    std::cout << conjecture_json(c).dump() << std::endl;
  });
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coprime: minimum coprime labelings of prisms, GP(n,2), stacked prisms and GP*(2k,k)"};
  app.require_subcommand(1);

  FamilyArgs fa;
  std::string theorem;
  bool as_json = false, as_dot = false;
  auto* c_construct = app.add_subcommand("construct", "build a labeling from the closed-form constructions");
  add_family_opts(c_construct, fa);
  c_construct->add_option("--theorem", theorem, "prism construction id, e.g. n+2-prime");
  auto* j_flag = c_construct->add_flag("--json", as_json, "emit JSON");
  c_construct->add_flag("--dot", as_dot, "emit Graphviz DOT with labels")->excludes(j_flag);

  std::string in_path;
  auto* c_verify = app.add_subcommand("verify", "check a labeling stored as JSON");
  c_verify->add_option("--in", in_path, "labeling JSON file")->required();

  SolverConfig cfg;
  int threads = 0;
  double time_limit = 0;
  auto* c_solve = app.add_subcommand("solve", "exact minimum coprime number by search");
  FamilyArgs sa;
  add_family_opts(c_solve, sa);
  c_solve->add_option("--budget", cfg.node_budget, "node budget");
  c_solve->add_option("--cap", cfg.max_label_cap, "largest label tried (<= 255)");
  c_solve->add_option("--time-limit", time_limit, "seconds, 0 = none");
  c_solve->add_option("--threads", threads, "split the root across this many threads (0 = deterministic)");

  std::string scan_family = "prism";
  int from = 3, to = 1641;
  ScanOptions sopts;
  auto* c_scan = app.add_subcommand("scan", "construct and verify a parameter range, one JSON line each");
  c_scan->add_option("--family", scan_family, "prism | gp2 | y3 | y5 | gpstar");
  c_scan->add_option("--from", from)->required();
  c_scan->add_option("--to", to)->required();
  c_scan->add_flag("!--no-fallback", sopts.allow_fallback, "prisms: do not use the prime-pair construction");
  c_scan->add_flag("--solver-confirm", sopts.solver_confirm, "also solve exactly when the graph is small");
  c_scan->add_option("--solver-cap", sopts.solver_vertex_cap, "vertex cap for --solver-confirm");
  c_scan->add_option("--explicit-limit", sopts.explicit_verify_limit, "prisms: edge-by-edge check up to this n");
  c_scan->add_option("--budget", sopts.solver.node_budget, "solver node budget per instance");

  std::vector<std::string> which = {"odd-prism", "gp-n3", "gp-3kk", "odd-stack"};
  int cap = 18;
  auto* c_conj = app.add_subcommand("conjectures", "compare exact values with the open conjectures");
  c_conj->add_option("--which", which, "odd-prism gp-n3 gp-3kk odd-stack")->delimiter(',');
  c_conj->add_option("--cap", cap, "largest vertex count to solve");
  c_conj->add_option("--budget", cfg.node_budget, "node budget per instance");
  c_conj->add_option("--time-limit", time_limit, "seconds per instance, 0 = none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (time_limit > 0) cfg.time_limit_seconds = time_limit;
  cfg.parallel_width = threads;

  try {
    if (*c_construct) return cmd_construct(fa, theorem, as_json, as_dot);
    if (*c_verify) return cmd_verify(in_path);
    if (*c_solve) return cmd_solve(sa, cfg);
    if (*c_scan) return cmd_scan(scan_family, from, to, sopts);
    if (*c_conj) return cmd_conjectures(which, cap, cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "coprime: " << e.what() << "\n";
    return 2;
  } catch (const ParameterOutOfRange& e) {
    std::cerr << "coprime: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolated& e) {
    std::cerr << "coprime: " << e.what() << "\n";
    return 1;
  } catch (const MissingVertex& e) {
    std::cerr << "coprime: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "coprime: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
