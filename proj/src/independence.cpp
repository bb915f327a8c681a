#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "coprime/errors.hpp"
#include "coprime/graph.hpp"

namespace coprime {

namespace {

using Mask = std::uint64_t;

struct Mis {
  std::vector<Mask> nbr;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best = 0;
  Mask best_set = 0;

  // greedy clique cover of p; an independent set meets each clique at most once
  int clique_cover(Mask p) const {
    int count = 0;
    while (p) {
      Mask cand = p;
      while (cand) {
        int v = std::countr_zero(cand);
        cand &= nbr[v];
        p &= ~(Mask{1} << v);
      }
      ++count;
    }
    return count;
  }

  void search(Mask p, Mask cur, int size) {
    if (++nodes > budget) throw BudgetExceeded("independence_exact: node budget exhausted");
    // vertices with at most one neighbour left can always be taken
    bool again = true;
    while (again) {
      again = false;
      for (Mask q = p; q;) {
        int v = std::countr_zero(q);
        q &= q - 1;
        if (!(p >> v & 1)) continue;
        if (std::popcount(nbr[v] & p) <= 1) {
          cur |= Mask{1} << v;
          ++size;
          p &= ~(nbr[v] | Mask{1} << v);
          again = true;
        }
      }
    }
    if (!p) {
      if (size > best) {
        best = size;
        best_set = cur;
      }
      return;
    }
    if (size + clique_cover(p) <= best) return;
    int pick = -1, deg = -1;
    for (Mask q = p; q; q &= q - 1) {
      int v = std::countr_zero(q);
      int d = std::popcount(nbr[v] & p);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    Mask bit = Mask{1} << pick;
    search(p & ~(nbr[pick] | bit), cur | bit, size + 1);
    search(p & ~bit, cur, size);
  }
};

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g, std::uint64_t node_budget) {
  const int n = g.order();
  if (n > 64)
    throw ParameterOutOfRange("maximum_independent_set supports at most 64 vertices, got " +
                              std::to_string(n));
  Mis s;
  s.budget = node_budget;
  s.nbr.assign(n, 0);
  for (auto [a, b] : g.edges()) {
    s.nbr[a] |= Mask{1} << b;
    s.nbr[b] |= Mask{1} << a;
  }
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  s.search(all, 0, 0);
  std::vector<int> out;
  for (Mask q = s.best_set; q; q &= q - 1) out.push_back(std::countr_zero(q));
  return out;
}

BoundInfo independence_exact(const Graph& g, std::uint64_t node_budget) {
  auto set = maximum_independent_set(g, node_budget);
  return make_bound(g.order(), static_cast<int>(set.size()), AlphaSource::Exact);
}

}  // namespace coprime
