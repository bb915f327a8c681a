#pragma once
// Slow, obviously-correct reference implementations used to cross-check the library.

#include <cstdint>
#include <optional>
#include <vector>

#include "coprime/graph.hpp"

namespace oracle {

bool is_prime_trial(std::uint64_t n);

// smallest s in [3, n-1] by plain scan with trial division
std::optional<std::uint64_t> find_s_scan(std::uint64_t n);

// subset enumeration, |V| <= 26
int alpha_bruteforce(const coprime::Graph& g);

// plain backtracking: vertices in index order, every unused label in 1..m,
// only the gcd test against earlier neighbours. Returns a labeling or nothing.
std::optional<std::vector<std::uint64_t>> labeling_within(const coprime::Graph& g, int m);

// smallest m admitting a coprime labeling, by the search above
int pr_bruteforce(const coprime::Graph& g);

// every edge coprime, labels distinct and positive
bool is_coprime_labeling(const coprime::Graph& g, const std::vector<std::uint64_t>& labels);

}  // namespace oracle
