#pragma once

#include <cstdint>
#include <optional>

#include "coprime/graph.hpp"
#include "coprime/labeling.hpp"

namespace coprime {

enum class VertexOrder { DegreeDesc, Input };

struct SolverConfig {
  int max_label_cap = 255;  // hard limit of the bitset search
  std::uint64_t node_budget = 200'000'000;
  VertexOrder vertex_order = VertexOrder::DegreeDesc;
  int parallel_width = 0;   // 0: single-threaded and deterministic
  std::optional<double> time_limit_seconds;
};

struct SolverReport {
  Label pr_value = 0;
  Labeling optimal_labeling;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
  Label lower_bound_used = 0;
  int alpha = 0;
};

// max(|V|, 2(|V| - alpha) - 1), alpha from the formula when one exists
Label lower_bound(const Graph& g);

// Iterative deepening on the max label. If the budget runs out, returns the
// incumbent (when given) with proven_optimal=false, else throws BudgetExceeded.
// Throws InfeasibleAtCap when no labeling exists up to max_label_cap.
SolverReport solve(const Graph& g, const SolverConfig& cfg = {}, const Labeling* incumbent = nullptr);

// Plain search over {1..|V|} with no independence-number pruning.
bool confirm_no_prime_labeling(const Graph& g, std::uint64_t node_budget = 500'000'000);

}  // namespace coprime
