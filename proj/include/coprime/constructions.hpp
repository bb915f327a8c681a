#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/labeling.hpp"

namespace coprime {

// Which construction produced a labeling. Prism rules are named after the
// quantity whose primality they need.
enum class Rule {
  NPrime,
  NPlus2Prime,
  TwoNPlus1Prime,
  TwoNMinus1Prime,
  NPlus4Prime,
  NMinus2Prime,
  NMinus4Prime,
  TwoNPlus3Prime,
  TwoNMinus3Prime,
  TwoNMinus5Prime,
  NPlus6Prime,
  PrimePair,
  Gp2Blocks,
  Gp2Tail,
  TriangleStack,
  PentagonStack,
  GpStarSwaps,
};

std::string_view rule_id(Rule r);
std::optional<Rule> parse_rule(std::string_view id);

struct Certificate {
  Rule rule = Rule::NPrime;
  std::string case_tag;
  std::optional<std::uint64_t> witness;
};

struct Construction {
  Graph graph;
  Labeling labeling;
  Certificate certificate;
};

// Odd n >= 3. Tries the prism rules in fixed order; the prime-pair rule is the
// last resort and can be switched off. Throws ConstructionUnavailable on a gap.
Construction label_prism(int n, bool allow_fallback = true);
// One named prism rule; HypothesisViolated if it does not apply to n.
Construction label_prism_by(Rule r, int n);

Construction label_gp2(int n);
Construction label_y3(int n);
Construction label_y5(int n);
Construction label_gpstar(int k);

// Dispatch on family; stacked prisms only for m = 3 and m = 5.
Construction construct(const Family& f);

// Closed-form max label the constructions reach (the minimum coprime number).
Label expected_max_label(const Family& f);

// GP(n,2) block case letters for k = 1..m-1, exposed for tests.
std::string gp2_block_case(int k);

// Raw rows of the 70-layer pentagon table (rows 1..70), and its checksum.
const std::vector<std::array<int, 5>>& pentagon_table();
std::uint64_t pentagon_table_checksum();
std::uint64_t pentagon_table_expected_checksum();

// GP*(2k,k) labels with no repair swaps, for negative tests.
Labeling gpstar_unrepaired(int k);

}  // namespace coprime
