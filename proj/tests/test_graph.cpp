#include <doctest.h>

#include <algorithm>
#include <set>

#include "coprime/errors.hpp"
#include "coprime/graph.hpp"
#include "oracles.hpp"

using namespace coprime;

TEST_CASE("vertex ids round-trip through names") {
  for (auto id : {VertexId::v(1), VertexId::u(17), VertexId::x(3, 5), VertexId::x(120, 1)})
    CHECK(VertexId::parse(id.name()) == id);
  CHECK(VertexId::v(4).name() == "v4");
  CHECK(VertexId::x(2, 3).name() == "x2_3");
  CHECK_THROWS_AS(VertexId::parse("w3"), Error);
  CHECK_THROWS_AS(VertexId::parse("v0"), Error);
  CHECK_THROWS_AS(VertexId::parse("x3"), Error);
  CHECK_THROWS_AS(VertexId::parse("v3a"), Error);
}

TEST_CASE("family sizes") {
  auto p = build(Prism{11});
  CHECK(p.order() == 22);
  CHECK(p.size() == 33);
  auto t = build(StackedPrism{3, 1});
  CHECK(t.order() == 3);
  CHECK(t.size() == 3);
  auto s = build(GPStar{4});
  CHECK(s.order() == 16);
  CHECK(s.size() == 20);
  for (int n = 3; n <= 40; ++n) {
    auto g = build(Prism{n});
    CHECK(g.size() == 3 * n);
    CHECK(g.is_simple());
    if (n >= 5) {
      auto h = build(GP2{n});
      CHECK(h.order() == 2 * n);
      CHECK(h.size() == 3 * n);
      CHECK(h.is_simple());
    }
  }
  for (int k = 2; k <= 30; ++k) {
    auto g = build(GPStar{k});
    CHECK(g.order() == 4 * k);
    CHECK(g.size() == 5 * k);
    CHECK(g.is_simple());
  }
  for (int m = 3; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      auto g = build(StackedPrism{m, n});
      CHECK(g.order() == m * n);
      CHECK(g.size() == m * n + m * (n - 1));
      CHECK(g.is_simple());
    }
}

TEST_CASE("degrees") {
  for (int n : {5, 6, 9, 12}) {
    auto g = build(GP2{n});
    for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) == 3);
  }
  for (int k : {2, 3, 6}) {
    auto g = build(GPStar{k});
    for (int i = 1; i <= 2 * k; ++i) {
      CHECK(g.degree(*g.index_of(VertexId::v(i))) == 3);
      CHECK(g.degree(*g.index_of(VertexId::u(i))) == 2);
    }
  }
}

TEST_CASE("edge forms of GP(n,2) and GP*") {
  auto g = build(GP2{7});
  auto idx = [&](VertexId id) { return *g.index_of(id); };
  CHECK(g.adjacent(idx(VertexId::u(1)), idx(VertexId::u(3))));
  CHECK(g.adjacent(idx(VertexId::u(7)), idx(VertexId::u(2))));
  CHECK(g.adjacent(idx(VertexId::v(7)), idx(VertexId::v(1))));
  CHECK_FALSE(g.adjacent(idx(VertexId::u(1)), idx(VertexId::u(2))));
  auto s = build(GPStar{3});
  auto sx = [&](VertexId id) { return *s.index_of(id); };
  CHECK(s.adjacent(sx(VertexId::u(1)), sx(VertexId::u(4))));
  CHECK(s.adjacent(sx(VertexId::u(6)), sx(VertexId::u(3))));
}

TEST_CASE("stacked prism layers do not wrap") {
  auto g = build(StackedPrism{4, 3});
  auto ix = [&](int i, int j) { return *g.index_of(VertexId::x(i, j)); };
  CHECK(g.adjacent(ix(1, 4), ix(1, 1)));
  CHECK(g.adjacent(ix(1, 2), ix(2, 2)));
  CHECK_FALSE(g.adjacent(ix(3, 1), ix(1, 1)));
  CHECK_FALSE(g.index_of(VertexId::x(4, 1)).has_value());
  CHECK_FALSE(g.index_of(VertexId::v(1)).has_value());
}

TEST_CASE("rotation preserves the edge sets of GP(n,1) and GP(n,2)") {
  for (int n = 5; n <= 15; ++n)
    for (bool two : {false, true}) {
      Graph g = two ? build(GP2{n}) : build(Prism{n});
      std::set<std::pair<int, int>> es;
      for (auto [a, b] : g.edges()) es.insert(std::minmax(a, b));
      for (auto [a, b] : g.edges()) {
        auto rot = [n](int x) { return x < n ? (x + 1) % n : n + (x - n + 1) % n; };
        std::pair<int, int> e = std::minmax(rot(a), rot(b));
        CHECK(es.count(e) == 1);
      }
    }
}

TEST_CASE("build rejects bad parameters") {
  CHECK_THROWS_AS(build(Prism{2}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(GP2{4}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(StackedPrism{2, 3}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(StackedPrism{3, 0}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(GPStar{1}), ParameterOutOfRange);
  CHECK_THROWS_AS(build_gp(7, 4), ParameterOutOfRange);
}

TEST_CASE("Graph constructor rejects non-simple input") {
  std::vector<VertexId> vs = {VertexId::v(1), VertexId::v(2)};
  CHECK_THROWS_AS(Graph("g", vs, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph("g", vs, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph("g", {VertexId::v(1), VertexId::v(1)}, {}), Error);
  CHECK_NOTHROW(Graph("g", vs, {{0, 1}}));
}

TEST_CASE("independence formula values") {
  CHECK(independence_formula(GP2{5})->alpha == 4);
  CHECK(independence_formula(StackedPrism{3, 7})->alpha == 7);
  CHECK(independence_formula(Prism{9})->alpha == 8);
  CHECK_FALSE(independence_formula(Prism{4}).has_value());
  CHECK_FALSE(independence_formula(StackedPrism{4, 2}).has_value());
  CHECK_FALSE(independence_formula(GPStar{3}).has_value());
  auto b = *independence_formula(GP2{5});
  CHECK(b.source == AlphaSource::Formula);
  CHECK(b.odd_label_lower_bound == 11);
}

TEST_CASE("independence exact values") {
  CHECK(independence_exact(build(GP2{5})).alpha == 4);
  CHECK(independence_exact(build(StackedPrism{5, 2})).alpha == 4);
  CHECK(independence_exact(build(StackedPrism{3, 1})).alpha == 1);
  CHECK(independence_exact(build(GP2{5})).source == AlphaSource::Exact);
  CHECK_THROWS_AS(independence_exact(build_gp(31, 5), 5), BudgetExceeded);
  CHECK_THROWS_AS(independence_exact(build(Prism{33})), ParameterOutOfRange);
}

TEST_CASE("exact independence number against subset enumeration") {
  std::vector<Graph> gs;
  for (int n = 3; n <= 12; ++n) gs.push_back(build(Prism{n}));
  for (int n = 5; n <= 12; ++n) gs.push_back(build(GP2{n}));
  for (int k = 2; k <= 6; ++k) gs.push_back(build(GPStar{k}));
  for (int m = 3; m <= 7; ++m)
    for (int n = 1; m * n <= 20; ++n) gs.push_back(build(StackedPrism{m, n}));
  gs.push_back(build_gp(7, 3));
  gs.push_back(build_gp(9, 3));
  gs.push_back(build_gp(6, 2));
  for (auto& g : gs) {
    INFO(g.name());
    auto set = maximum_independent_set(g);
    CHECK(static_cast<int>(set.size()) == oracle::alpha_bruteforce(g));
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) CHECK_FALSE(g.adjacent(set[i], set[j]));
  }
}

TEST_CASE("dot export") {
  auto g = build(StackedPrism{3, 1});
  auto dot = to_dot(g);
  CHECK(dot.find("x1_1 -- x1_2;") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 3 + 3 + 1);
  std::vector<std::uint64_t> labels = {1, 2, 3};
  CHECK(to_dot(g, &labels).find("x1_3 [label=\"3\"]") != std::string::npos);
}
