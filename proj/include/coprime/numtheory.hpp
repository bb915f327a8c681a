#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace coprime {

using Label = std::uint64_t;

// Euclid; gcd(0, b) = b.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Deterministic for every n < 2^64.
bool is_prime(std::uint64_t n);

// Smallest s in [3, n-1] with n+s+1 and 2n+s+2 both prime.
// Throws ParameterOutOfRange unless n is odd and n >= 3.
std::optional<std::uint64_t> find_s(std::uint64_t n);

// Distinct prime divisors in increasing order (trial division, fine for labels).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace coprime
