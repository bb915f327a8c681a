#include <doctest.h>

#include <map>

#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "oracles.hpp"

using namespace coprime;

namespace {
std::vector<Label> half(const Construction& c, bool inner) {
  auto n = c.graph.order() / 2;
  auto b = c.labeling.labels.begin() + (inner ? n : 0);
  return {b, b + n};
}
}  // namespace

TEST_CASE("GP(5,2) base block") {
  auto c = label_gp2(5);
  CHECK(half(c, false) == std::vector<Label>{2, 3, 5, 8, 9});
  CHECK(half(c, true) == std::vector<Label>{1, 4, 6, 7, 11});
  CHECK(c.labeling.max_label() == 11);
  CHECK(c.certificate.rule == Rule::Gp2Blocks);
}

TEST_CASE("GP(9,2) and GP(10,2)") {
  auto a = label_gp2(9);
  CHECK(a.labeling.max_label() == 21);
  CHECK(a.certificate.rule == Rule::Gp2Tail);
  CHECK(half(a, false) == std::vector<Label>{2, 3, 5, 8, 9, 13, 17, 14, 19});
  CHECK(half(a, true) == std::vector<Label>{1, 4, 6, 7, 11, 16, 20, 15, 21});
  auto b = label_gp2(10);
  CHECK(gp2_block_case(1) == "1");
  CHECK(b.labeling.max_label() == 23);
  CHECK(half(b, false) == std::vector<Label>{2, 3, 5, 8, 9, 14, 15, 17, 20, 21});
  CHECK(half(b, true) == std::vector<Label>{1, 4, 6, 7, 11, 13, 16, 22, 19, 23});
  CHECK(oracle::is_coprime_labeling(b.graph, b.labeling.labels));
}

TEST_CASE("block case predicate is total and exclusive") {
  std::map<std::string, int> first;
  for (int k = 1; k <= 20000; ++k) {
    const long long a = 12LL * k - 1, b = 12LL * k - 3, c = 12LL * k + 5;
    int fives = (a % 5 == 0) + (b % 5 == 0) + (c % 5 == 0);
    REQUIRE(fives <= 1);
    auto cs = gp2_block_case(k);
    if (!first.count(cs)) first[cs] = k;
  }
  CHECK(first.size() == 8);
  CHECK(first["4c"] == 289);
  CHECK(first["4d"] == 3754);
}

TEST_CASE("closed form of the max label") {
  CHECK(expected_max_label(GP2{5}) == 11);
  CHECK(expected_max_label(GP2{6}) == 15);
  CHECK(expected_max_label(GP2{7}) == 17);
  CHECK(expected_max_label(GP2{8}) == 19);
  CHECK(expected_max_label(GP2{9}) == 21);
}

TEST_CASE("GP(n,2) verifies up to 1500 and at the first 4c and 4d blocks") {
  for (int n = 5; n <= 1500; ++n) {
    INFO("n=", n);
    auto c = label_gp2(n);
    REQUIRE(c.labeling.max_label() == expected_max_label(GP2{n}));
    REQUIRE(oracle::is_coprime_labeling(c.graph, c.labeling.labels));
    REQUIRE(c.labeling.even_count() <= independence_formula(GP2{n})->alpha);
  }
  for (int n : {1450, 1454, 18775, 18779}) {
    auto c = label_gp2(n);
    CHECK(verify(c.graph, c.labeling).ok());
  }
  CHECK(label_gp2(18775).certificate.case_tag.find("4d:1") != std::string::npos);
}

TEST_CASE("GP(n,2) bad size") { CHECK_THROWS_AS(label_gp2(4), ParameterOutOfRange); }
