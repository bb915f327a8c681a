#include <doctest.h>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/solver.hpp"
#include "oracles.hpp"

using namespace coprime;

namespace {
Graph edgeless(int n) {
  std::vector<VertexId> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(VertexId::v(i));
  return Graph("empty", vs, {});
}

std::vector<Graph> tiny() {
  return {build(Prism{3}), build(Prism{4}), build(Prism{5}), build(StackedPrism{3, 2}),
          build(GPStar{2}), build(GP2{5}), build(StackedPrism{3, 3})};
}
}  // namespace

TEST_CASE("lower bound") {
  CHECK(lower_bound(build(GP2{5})) == 11);
  CHECK(lower_bound(build(Prism{4})) == 8);
  CHECK(lower_bound(build(Prism{7})) == 15);
  CHECK(lower_bound(build(StackedPrism{3, 2})) == 7);
  CHECK(lower_bound(edgeless(5)) == 5);
}

TEST_CASE("solver agrees with brute force on tiny graphs") {
  for (const auto& g : tiny()) {
    INFO(g.name());
    auto r = solve(g);
    CHECK(r.proven_optimal);
    CHECK(r.pr_value == static_cast<Label>(oracle::pr_bruteforce(g)));
    CHECK(r.optimal_labeling.max_label() == r.pr_value);
    CHECK(oracle::is_coprime_labeling(g, r.optimal_labeling.labels));
    CHECK(r.alpha == oracle::alpha_bruteforce(g));
    if (r.pr_value == static_cast<Label>(g.order())) CHECK(r.alpha >= g.order() / 2);
  }
  CHECK(solve(edgeless(4)).pr_value == 4);
}

TEST_CASE("known values") {
  CHECK(solve(build(Prism{3})).pr_value == 7);
  CHECK(solve(build(Prism{5})).pr_value == 11);
  CHECK(solve(build(GPStar{2})).pr_value == 9);
  CHECK(solve(build(GP2{5})).pr_value == 11);
  CHECK(solve(build_gp(6, 2)).pr_value == 15);
}

TEST_CASE("deterministic, and the options do not change the value") {
  auto g = build(StackedPrism{3, 3});
  auto a = solve(g), b = solve(g);
  CHECK(a.optimal_labeling.labels == b.optimal_labeling.labels);
  CHECK(a.nodes_explored == b.nodes_explored);
  SolverConfig in;
  in.vertex_order = VertexOrder::Input;
  CHECK(solve(g, in).pr_value == a.pr_value);
  SolverConfig par;
  par.parallel_width = 3;
  auto p = solve(g, par);
  CHECK(p.pr_value == a.pr_value);
  CHECK(p.proven_optimal);
  CHECK(oracle::is_coprime_labeling(g, p.optimal_labeling.labels));
}

TEST_CASE("budget and incumbent") {
  auto g = build(Prism{9});
  SolverConfig tight;
  tight.node_budget = 10;
  CHECK_THROWS_AS(solve(g, tight), BudgetExceeded);
  auto inc = label_prism(9).labeling;
  auto r = solve(g, tight, &inc);
  CHECK(r.optimal_labeling.labels == inc.labels);
  CHECK(r.pr_value == 19);
  // incumbent at the lower bound needs no search
  auto inc7 = label_prism(7).labeling;
  auto r2 = solve(build(Prism{7}), tight, &inc7);
  CHECK(r2.proven_optimal);
  CHECK(r2.pr_value == 15);
}

TEST_CASE("cap handling") {
  SolverConfig low;
  low.max_label_cap = 10;
  CHECK_THROWS_AS(solve(build(Prism{5}), low), InfeasibleAtCap);
  low.max_label_cap = 5;
  CHECK_THROWS_AS(solve(build(Prism{5}), low), ParameterOutOfRange);
  low.max_label_cap = 256;
  CHECK_THROWS_AS(solve(build(Prism{5}), low), ParameterOutOfRange);
}

TEST_CASE("prime labelings ruled out by plain search") {
  CHECK(confirm_no_prime_labeling(build(Prism{5})));
  CHECK(confirm_no_prime_labeling(build(GPStar{2})));
  CHECK_FALSE(confirm_no_prime_labeling(build(Prism{4})));
  CHECK_FALSE(confirm_no_prime_labeling(build(GPStar{3})));
}
