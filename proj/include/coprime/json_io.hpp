#pragma once

#include <json.hpp>

#include "coprime/constructions.hpp"
#include "coprime/harness.hpp"
#include "coprime/solver.hpp"

namespace coprime {

nlohmann::json family_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

nlohmann::json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json labeling_json(const Graph& g, const Labeling& l, const std::optional<Certificate>& cert, bool verified);

struct LoadedLabeling {
  Graph graph;
  Labeling labeling;
  std::optional<Certificate> certificate;
  bool claimed_verified = false;
};

// Throws MissingVertex when a vertex of the family has no entry.
LoadedLabeling labeling_from_json(const nlohmann::json& j);

nlohmann::json scan_json(const ScanResult& r);
ScanResult scan_from_json(const nlohmann::json& j);

nlohmann::json report_json(const Graph& g, const SolverReport& r);
nlohmann::json conjecture_json(const ConjectureCase& c);

}  // namespace coprime
