#include <doctest.h>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/labeling.hpp"

using namespace coprime;

TEST_CASE("verify accepts the n-prime labeling of GP(11,1)") {
  auto c = label_prism(11);
  auto r = verify(c.graph, c.labeling);
  CHECK(r.ok());
  CHECK_FALSE(r.prime_labeling);
  CHECK(r.describe(c.graph) == "coprime labeling");
}

TEST_CASE("verify reports duplicates") {
  auto g = build(Prism{3});
  Labeling l{{1, 2, 3, 2, 5, 7}};
  auto r = verify(g, l);
  CHECK_FALSE(r.ok());
  REQUIRE(r.duplicates.size() == 1);
  CHECK(r.duplicates[0].label == 2);
  CHECK(r.duplicates[0].vertices == std::vector<int>{1, 3});
  CHECK_FALSE(r.prime_labeling);
}

TEST_CASE("verify reports every conflicting edge with its gcd") {
  auto g = build(Prism{3});
  Labeling l{{2, 4, 3, 7, 5, 9}};
  auto r = verify(g, l);
  REQUIRE(r.conflicts.size() == 2);
  CHECK(r.conflicts[0].gcd == 2);  // v1 v2
  CHECK(r.conflicts[1].gcd == 3);  // v3 u3
  CHECK(r.describe(g).find("edge v3-u3: gcd(3,9)=3") != std::string::npos);
}

TEST_CASE("verify flags prime labelings") {
  auto g = build(StackedPrism{3, 1});
  auto r = verify(g, Labeling{{1, 2, 3}});
  CHECK(r.ok());
  CHECK(r.prime_labeling);
  CHECK(Labeling{{1, 2, 3}}.even_count() == 1);
}

TEST_CASE("verify rejects partial labelings") {
  auto g = build(Prism{3});
  CHECK_THROWS_AS(verify(g, Labeling{{1, 2, 3}}), MissingVertex);
  CHECK_THROWS_AS(verify(g, Labeling{{1, 2, 3, 0, 5, 7}}), MissingVertex);
}

TEST_CASE("verify handles sparse large labels") {
  auto g = build(StackedPrism{3, 1});
  auto r = verify(g, Labeling{{1000003, 1000033, 1000003}});
  REQUIRE(r.duplicates.size() == 1);
  CHECK(r.conflicts.size() == 1);
}
