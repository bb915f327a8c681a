#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coprime/constructions.hpp"

namespace coprime {

// labels start, start+step, ... on indices first..last (1-based); step in {-1,0,1}
struct Run {
  int first;
  int last;
  std::int64_t start;
  int step;

  std::int64_t at(int i) const { return start + static_cast<std::int64_t>(step) * (i - first); }
};

// Prism labeling in compressed form: outer ring v, inner ring u.
struct PrismPattern {
  int n = 0;
  std::vector<Run> outer;
  std::vector<Run> inner;
  Certificate cert;
};

const std::vector<Rule>& prism_rule_order();

// hypothesis plus residue/size side conditions; `why` gets the failed condition
bool prism_rule_admissible(Rule r, int n, std::string* why = nullptr);

// Layout for rule r without checking the hypothesis (nullopt if the rule has
// no layout for this residue). Used to show that the guards matter.
std::optional<PrismPattern> prism_layout(Rule r, int n);

PrismPattern prism_pattern_by(Rule r, int n);
PrismPattern prism_pattern(int n, bool allow_fallback = true);

Labeling materialize(const PrismPattern& p);

struct PatternCheck {
  bool ok = true;
  std::string reason;
};

// Verifies a pattern without expanding it: each edge family is split into
// stretches where both ends are affine, and coprimality is decided from the
// prime factors of the constant difference or sum.
PatternCheck check_pattern(const PrismPattern& p);

}  // namespace coprime
