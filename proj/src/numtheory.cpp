#include "coprime/numtheory.hpp"

#include <bit>
#include <string>

#include "coprime/errors.hpp"

namespace coprime {

// Plain Euclid. Edge labels tend to sit close together, where one division
// beats many binary subtract-and-shift rounds.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (((a | b) >> 32) == 0) {
    // 32-bit division is noticeably cheaper, and labels almost always fit
    std::uint32_t x = static_cast<std::uint32_t>(a), y = static_cast<std::uint32_t>(b);
    while (y != 0) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int r = std::countr_zero(d);
  d >>= r;
  // the first 12 primes are a sufficient witness set below 3.3e24
  for (auto a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::uint64_t> find_s(std::uint64_t n) {
  if (n < 3 || n % 2 == 0)
    throw ParameterOutOfRange("find_s: n must be odd and >= 3, got " + std::to_string(n));
  for (std::uint64_t s = 3; s + 1 <= n; ++s) {
    // n odd: n+s+1 even for even s, so only odd s can work
    if (s % 2 == 0) continue;
    if (is_prime(n + s + 1) && is_prime(2 * n + s + 2)) return s;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace coprime
