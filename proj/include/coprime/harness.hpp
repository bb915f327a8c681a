#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coprime/constructions.hpp"
#include "coprime/solver.hpp"

namespace coprime {

enum class ScanFamily { Prism, GP2, Y3, Y5, GPStar };

std::optional<ScanFamily> parse_scan_family(std::string_view s);
Family family_of(ScanFamily f, int param);

struct ScanOptions {
  bool allow_fallback = true;
  // prisms up to this n are also expanded and checked edge by edge
  int explicit_verify_limit = 4000;
  bool solver_confirm = false;
  int solver_vertex_cap = 20;
  SolverConfig solver;
  int workers = 0;  // 0: COPRIME_WORKERS or hardware concurrency
  int chunk = 4096;
};

struct ScanResult {
  Family family;
  std::optional<Certificate> certificate;
  Label max_label = 0;
  Label formula_value = 0;
  bool verified = false;
  std::optional<bool> solver_confirmed;
  std::string error;

  bool ok() const { return verified && max_label == formula_value && solver_confirmed.value_or(true); }
};

struct ScanSummary {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> by_rule;
};

using ScanSink = std::function<void(const ScanResult&)>;

int worker_count();

// Results reach the sink in increasing parameter order whatever the worker count.
// Prism scans visit odd n only.
ScanSummary scan(ScanFamily fam, int lo, int hi, const ScanOptions& opts, const ScanSink& sink = {});
ScanSummary scan_prisms(int n_lo, int n_hi, const ScanOptions& opts, const ScanSink& sink = {});

ScanResult scan_one(ScanFamily fam, int param, const ScanOptions& opts);

enum class Conjecture { OddPrism, GpN3, Gp3kk, OddStack };

std::string_view conjecture_id(Conjecture c);
std::optional<Conjecture> parse_conjecture(std::string_view s);

struct ConjectureCase {
  Conjecture which;
  std::string instance;
  int vertices = 0;
  Label conjectured = 0;
  std::optional<Label> best_known;
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
  std::string status;  // match, mismatch, upper-bound-only, budget-exceeded
};

// every admissible instance with at most size_cap vertices
std::vector<ConjectureCase> check_conjectures(const std::vector<Conjecture>& which, int size_cap,
                                              const SolverConfig& cfg, const std::function<void(const ConjectureCase&)>& sink = {});

ConjectureCase check_instance(Conjecture c, const Graph& g, Label conjectured, const SolverConfig& cfg,
                              const Labeling* known = nullptr);

}  // namespace coprime
