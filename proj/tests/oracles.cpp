#include "oracles.hpp"

#include <numeric>
#include <set>

namespace oracle {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::uint64_t> find_s_scan(std::uint64_t n) {
  for (std::uint64_t s = 3; s <= n - 1; ++s)
    if (is_prime_trial(n + s + 1) && is_prime_trial(2 * n + s + 2)) return s;
  return std::nullopt;
}

int alpha_bruteforce(const coprime::Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [a, b] : g.edges()) {
    nb[a] |= 1u << b;
    nb[b] |= 1u << a;
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((s >> v & 1) && (nb[v] & s)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

namespace {

bool extend(const coprime::Graph& g, int m, int v, std::vector<std::uint64_t>& lab, std::vector<bool>& used) {
  if (v == g.order()) return true;
  for (int l = 1; l <= m; ++l) {
    if (used[l]) continue;
    bool ok = true;
    for (int w : g.neighbors(v))
      if (w < v && std::gcd<std::uint64_t, std::uint64_t>(lab[w], l) != 1) ok = false;
    if (!ok) continue;
    lab[v] = l;
    used[l] = true;
    if (extend(g, m, v + 1, lab, used)) return true;
    used[l] = false;
  }
  lab[v] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> labeling_within(const coprime::Graph& g, int m) {
  std::vector<std::uint64_t> lab(g.order(), 0);
  std::vector<bool> used(m + 1, false);
  if (extend(g, m, 0, lab, used)) return lab;
  return std::nullopt;
}

int pr_bruteforce(const coprime::Graph& g) {
  for (int m = g.order();; ++m)
    if (labeling_within(g, m)) return m;
}

bool is_coprime_labeling(const coprime::Graph& g, const std::vector<std::uint64_t>& labels) {
  if (static_cast<int>(labels.size()) != g.order()) return false;
  std::set<std::uint64_t> seen;
  for (auto l : labels)
    if (l == 0 || !seen.insert(l).second) return false;
  for (auto [a, b] : g.edges())
    if (std::gcd(labels[a], labels[b]) != 1) return false;
  return true;
}

}  // namespace oracle
