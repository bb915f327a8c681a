#include "coprime/constructions.hpp"

#include <array>

#include "coprime/errors.hpp"

namespace coprime {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 17> kRuleIds = {{
    {Rule::NPrime, "n-prime"},
    {Rule::NPlus2Prime, "n+2-prime"},
    {Rule::TwoNPlus1Prime, "2n+1-prime"},
    {Rule::TwoNMinus1Prime, "2n-1-prime"},
    {Rule::NPlus4Prime, "n+4-prime"},
    {Rule::NMinus2Prime, "n-2-prime"},
    {Rule::NMinus4Prime, "n-4-prime"},
    {Rule::TwoNPlus3Prime, "2n+3-prime"},
    {Rule::TwoNMinus3Prime, "2n-3-prime"},
    {Rule::TwoNMinus5Prime, "2n-5-prime"},
    {Rule::NPlus6Prime, "n+6-prime"},
    {Rule::PrimePair, "prime-pair"},
    {Rule::Gp2Blocks, "gp2-blocks"},
    {Rule::Gp2Tail, "gp2-tail"},
    {Rule::TriangleStack, "triangle-stack"},
    {Rule::PentagonStack, "pentagon-stack"},
    {Rule::GpStarSwaps, "gpstar"},
}};

}  // namespace

std::string_view rule_id(Rule r) {
  for (auto& [rule, id] : kRuleIds)
    if (rule == r) return id;
  return "?";
}

std::optional<Rule> parse_rule(std::string_view id) {
  for (auto& [rule, name] : kRuleIds)
    if (name == id) return rule;
  return std::nullopt;
}

Construction construct(const Family& f) {
  if (auto* p = std::get_if<Prism>(&f)) return label_prism(p->n);
  if (auto* p = std::get_if<GP2>(&f)) return label_gp2(p->n);
  if (auto* p = std::get_if<GPStar>(&f)) return label_gpstar(p->k);
  auto& s = std::get<StackedPrism>(f);
  if (s.m == 3) return label_y3(s.n);
  if (s.m == 5) return label_y5(s.n);
  throw ConstructionUnavailable("stacked prisms are only constructed for m = 3 and m = 5");
}

Label expected_max_label(const Family& f) {
  if (auto* p = std::get_if<Prism>(&f)) {
    if (p->n % 2 == 0) throw ConstructionUnavailable("no closed form for even prisms");
    return 2ULL * p->n + 1;
  }
  if (auto* p = std::get_if<GP2>(&f)) {
    static constexpr int tail[] = {-1, 3, 5, 7, 9};
    return static_cast<Label>(12LL * (p->n / 5) + tail[p->n % 5]);
  }
  if (auto* p = std::get_if<GPStar>(&f)) return 4ULL * p->k + (p->k % 2 == 0);
  auto& s = std::get<StackedPrism>(f);
  if (s.m == 3) return 4ULL * s.n - 1;
  if (s.m == 5) return 6ULL * s.n - 1;
  throw ConstructionUnavailable("no closed form for Y(" + std::to_string(s.m) + ",n)");
}

}  // namespace coprime
