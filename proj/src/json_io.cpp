#include "coprime/json_io.hpp"

#include "coprime/errors.hpp"

namespace coprime {

using nlohmann::json;

json family_json(const Family& f) {
  json params;
  if (auto* p = std::get_if<Prism>(&f)) params = {{"n", p->n}};
  else if (auto* p = std::get_if<GP2>(&f)) params = {{"n", p->n}};
  else if (auto* p = std::get_if<GPStar>(&f)) params = {{"k", p->k}};
  else {
    auto& s = std::get<StackedPrism>(f);
    params = {{"m", s.m}, {"n", s.n}};
  }
  return {{"family", family_kind(f)}, {"params", params}};
}

Family family_from_json(const json& j) {
  const auto kind = j.at("family").get<std::string>();
  const auto& p = j.at("params");
  if (kind == "prism") return Prism{p.at("n").get<int>()};
  if (kind == "gp2") return GP2{p.at("n").get<int>()};
  if (kind == "gpstar") return GPStar{p.at("k").get<int>()};
  if (kind == "stacked_prism") return StackedPrism{p.at("m").get<int>(), p.at("n").get<int>()};
  throw Error("unknown family '" + kind + "'");
}

json certificate_json(const Certificate& c) {
  json j = {{"theorem", rule_id(c.rule)}, {"case", c.case_tag}};
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  return j;
}

Certificate certificate_from_json(const json& j) {
  auto id = j.at("theorem").get<std::string>();
  auto r = parse_rule(id);
  if (!r) throw Error("unknown construction id '" + id + "'");
  Certificate c{*r, j.value("case", std::string{}), std::nullopt};
  if (j.contains("witness") && !j["witness"].is_null()) c.witness = j["witness"].get<std::uint64_t>();
  return c;
}

json labeling_json(const Graph& g, const Labeling& l, const std::optional<Certificate>& cert, bool verified) {
  json j = g.family() ? family_json(*g.family()) : json{{"family", g.name()}, {"params", json::object()}};
  j["certificate"] = cert ? certificate_json(*cert) : json(nullptr);
  j["max_label"] = l.max_label();
  json vs = json::array();
  for (int i = 0; i < g.order(); ++i) vs.push_back({{"id", g.vertices()[i].name()}, {"label", l.labels[i]}});
  j["vertices"] = std::move(vs);
  j["verified"] = verified;
  return j;
}

LoadedLabeling labeling_from_json(const json& j) {
  Graph g = build(family_from_json(j));
  Labeling l;
  l.labels.assign(g.order(), 0);
  for (const auto& v : j.at("vertices")) {
    auto id = VertexId::parse(v.at("id").get<std::string>());
    auto idx = g.index_of(id);
    if (!idx) throw Error("vertex " + id.name() + " is not in " + g.name());
    l.labels[*idx] = v.at("label").get<Label>();
  }
  for (int i = 0; i < g.order(); ++i)
    if (l.labels[i] == 0) throw MissingVertex("vertex " + g.vertices()[i].name() + " has no label");
  std::optional<Certificate> cert;
  if (j.contains("certificate") && !j["certificate"].is_null()) cert = certificate_from_json(j["certificate"]);
  return {std::move(g), std::move(l), cert, j.value("verified", false)};
}

json scan_json(const ScanResult& r) {
  json j = family_json(r.family);
  j["certificate"] = r.certificate ? certificate_json(*r.certificate) : json(nullptr);
  j["max_label"] = r.max_label;
  j["formula_value"] = r.formula_value;
  j["verified"] = r.verified;
  j["solver_confirmed"] = r.solver_confirmed ? json(*r.solver_confirmed) : json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

ScanResult scan_from_json(const json& j) {
  ScanResult r{family_from_json(j), std::nullopt, 0, 0, false, std::nullopt, {}};
  if (!j.at("certificate").is_null()) r.certificate = certificate_from_json(j["certificate"]);
  r.max_label = j.at("max_label").get<Label>();
  r.formula_value = j.at("formula_value").get<Label>();
  r.verified = j.at("verified").get<bool>();
  if (!j.at("solver_confirmed").is_null()) r.solver_confirmed = j["solver_confirmed"].get<bool>();
  r.error = j.value("error", std::string{});
  return r;
}

json report_json(const Graph& g, const SolverReport& r) {
  json j = labeling_json(g, r.optimal_labeling, std::nullopt, true);
  j["solver"] = {{"pr", r.pr_value},
                 {"nodes", r.nodes_explored},
                 {"proven_optimal", r.proven_optimal},
                 {"lower_bound", r.lower_bound_used},
                 {"alpha", r.alpha}};
  return j;
}

json conjecture_json(const ConjectureCase& c) {
  json j = {{"conjecture", conjecture_id(c.which)},
            {"instance", c.instance},
            {"vertices", c.vertices},
            {"conjectured", c.conjectured},
            {"proven_optimal", c.proven_optimal},
            {"nodes", c.nodes},
            {"status", c.status}};
  j["best_known"] = c.best_known ? json(*c.best_known) : json(nullptr);
  return j;
}

}  // namespace coprime
