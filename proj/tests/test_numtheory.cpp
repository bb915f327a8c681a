#include <doctest.h>

#include <numeric>
#include <random>

#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"
#include "oracles.hpp"

using namespace coprime;

TEST_CASE("gcd small values") {
  CHECK(gcd(12, 8) == 4);
  CHECK(gcd(12, 23) == 1);  // n+1, 2n+1 at n=11
  CHECK(gcd(7, 7) == 7);
  CHECK(gcd(1, 1) == 1);
  CHECK(gcd(0, 9) == 9);
  CHECK(gcd(1ULL << 40, 1ULL << 20) == 1ULL << 20);
}

TEST_CASE("gcd matches std::gcd on random 64-bit pairs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200000; ++i) {
    std::uint64_t a = rng() >> (rng() % 64), b = rng() >> (rng() % 64);
    if (!a || !b) continue;
    REQUIRE(gcd(a, b) == std::gcd(a, b));
  }
}

TEST_CASE("gcd laws on random inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100000; ++i) {
    std::uint64_t a = rng() % 1000000 + 1, b = rng() % 1000000 + 1, k = rng() % 1000 + 1;
    auto g = gcd(a, b);
    REQUIRE(a % g == 0);
    REQUIRE(b % g == 0);
    REQUIRE(gcd(a, b) == gcd(b, a));
    REQUIRE(gcd(a + b, b) == g);
    if (a > b) REQUIRE(gcd(a - b, b) == g);
    if (gcd(k, b) == 1) REQUIRE(gcd(k * a, b) == g);
  }
}

TEST_CASE("is_prime small cases") {
  CHECK(is_prime(23));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(45));
}

TEST_CASE("is_prime agrees with trial division up to 2e5") {
  for (std::uint64_t n = 0; n <= 200000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
}

TEST_CASE("is_prime on large known values") {
  CHECK(is_prime(1000000007ULL));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL)); // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(1000000007ULL * 998244353ULL));
  CHECK_FALSE(is_prime(4294967291ULL * 4294967279ULL));
}

TEST_CASE("is_prime on random odd values vs trial division") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    std::uint64_t n = (rng() % 4000000000000ULL) | 1;
    REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
  }
}

TEST_CASE("find_s values") {
  CHECK(find_s(9) == 3u);
  CHECK_FALSE(find_s(3).has_value());
  CHECK_FALSE(find_s(5).has_value());
  CHECK_FALSE(find_s(15).has_value());
  CHECK(find_s(7) == 3u);
  CHECK(find_s(11) == 5u);
  CHECK(find_s(21) == 9u);
  CHECK(find_s(25) == 15u);
  CHECK_THROWS_AS(find_s(10), ParameterOutOfRange);
  CHECK_THROWS_AS(find_s(1), ParameterOutOfRange);
}

TEST_CASE("find_s matches a plain scan") {
  for (std::uint64_t n = 3; n <= 3001; n += 2) REQUIRE(find_s(n) == oracle::find_s_scan(n));
}

TEST_CASE("prime_factors") {
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
  CHECK(prime_factors(2 * 999983ULL) == std::vector<std::uint64_t>{2, 999983});
}
