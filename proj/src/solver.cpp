#include "coprime/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "coprime/errors.hpp"

namespace coprime {

namespace {

constexpr int kMaxLabel = 255;
constexpr int kMaxVertices = 64;
using Bits = std::bitset<kMaxLabel + 1>;

const std::array<Bits, kMaxLabel + 1>& coprime_table() {
  static const auto table = [] {
    std::array<Bits, kMaxLabel + 1> t{};
    for (int a = 1; a <= kMaxLabel; ++a)
      for (int b = 1; b <= kMaxLabel; ++b)
        if (gcd(a, b) == 1) t[a].set(b);
    return t;
  }();
  return table;
}

const Bits& odd_mask() {
  static const Bits b = [] {
    Bits x;
    for (int i = 1; i <= kMaxLabel; i += 2) x.set(i);
    return x;
  }();
  return b;
}

struct Stop {};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> found{false};
  std::uint64_t budget;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct Search {
  const Graph& g;
  int n;
  int m;
  int alpha;  // -1 disables the even-label bound
  std::vector<int> rank;  // tie-break priority from the configured order
  Shared& shared;
  std::uint64_t local = 0;
  std::vector<Label> assign;
  std::optional<std::vector<Label>> result;

  struct State {
    std::array<Bits, kMaxVertices> dom;
    Bits used;
    int evens = 0;
    int left;
  };

  void tick() {
    if (shared.found.load(std::memory_order_relaxed)) throw Stop{};
    ++local;
    if ((local & 1023) == 0) flush();
  }

  void flush() {
    auto total = shared.nodes.fetch_add(local) + local;
    local = 0;
    if (total > shared.budget) throw BudgetExceeded("solver node budget exhausted");
    if (shared.deadline && std::chrono::steady_clock::now() > *shared.deadline)
      throw BudgetExceeded("solver time limit reached");
  }

  bool viable(const State& s) const {
    if (s.left == 0) return true;
    Bits avail;
    for (int v = 0; v < n; ++v) {
      if (assign[v]) continue;
      if (s.dom[v].none()) return false;
      avail |= s.dom[v];
    }
    int odd = static_cast<int>((avail & odd_mask()).count());
    int even = static_cast<int>(avail.count()) - odd;
    if (alpha >= 0) even = std::min(even, alpha - s.evens);
    return s.left <= odd + std::max(even, 0);
  }

  int pick(const State& s) const {
    int best = -1;
    std::size_t best_sz = 0;
    for (int v = 0; v < n; ++v) {
      if (assign[v]) continue;
      auto sz = s.dom[v].count();
      if (best < 0 || sz < best_sz || (sz == best_sz && rank[v] < rank[best])) {
        best = v;
        best_sz = sz;
      }
    }
    return best;
  }

  // label order: ascending, 1 deferred to the end
  std::vector<int> candidates(const Bits& d) const {
    std::vector<int> out;
    for (int l = 2; l <= m; ++l)
      if (d[l]) out.push_back(l);
    if (d[1]) out.push_back(1);
    return out;
  }

  State apply(const State& s, int v, int l) {
    State t = s;
    assign[v] = static_cast<Label>(l);
    t.used.set(l);
    t.evens += (l % 2 == 0);
    --t.left;
    for (int w = 0; w < n; ++w)
      if (!assign[w]) t.dom[w].reset(l);
    const auto& cp = coprime_table()[l];
    for (int w : g.neighbors(v))
      if (!assign[w]) t.dom[w] &= cp;
    return t;
  }

  bool dfs(const State& s) {
    if (s.left == 0) {
      result = assign;
      return true;
    }
    int v = pick(s);
    for (int l : candidates(s.dom[v])) {
      tick();
      State t = apply(s, v, l);
      if (viable(t) && dfs(t)) return true;
      assign[v] = 0;
    }
    return false;
  }
};

std::vector<int> order_rank(const Graph& g, VertexOrder ord) {
  const int n = g.order();
  std::vector<int> seq;
  if (ord == VertexOrder::Input) {
    seq.resize(n);
    std::iota(seq.begin(), seq.end(), 0);
  } else {
    // highest degree first, then whoever touches the most placed vertices
    std::vector<int> touched(n, 0);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || touched[v] > touched[best] ||
            (touched[v] == touched[best] && g.degree(v) > g.degree(best)))
          best = v;
      }
      placed[best] = true;
      seq.push_back(best);
      for (int w : g.neighbors(best)) ++touched[w];
    }
  }
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[seq[i]] = i;
  return rank;
}

// Rotations act transitively on each ring of GP(n,1) and GP(n,2), and label 1
// can always replace some label without raising the max, so label 1 may be
// pinned to v_1 or u_1.
bool rotation_symmetric(const Graph& g) {
  const auto& f = g.family();
  return f && (std::holds_alternative<Prism>(*f) || std::holds_alternative<GP2>(*f));
}

std::optional<std::vector<Label>> feasible(const Graph& g, int m, int alpha, const std::vector<int>& rank,
                                           int width, Shared& shared) {
  const int n = g.order();
  Search::State root;
  Bits all;
  for (int l = 1; l <= m; ++l) all.set(l);
  for (int v = 0; v < n; ++v) root.dom[v] = all;
  if (rotation_symmetric(g))
    for (int v = 0; v < n; ++v)
      if (v != 0 && v != n / 2) root.dom[v].reset(1);
  root.left = n;

  auto make = [&] {
    return Search{g, n, m, alpha, rank, shared, 0, std::vector<Label>(n, 0), std::nullopt};
  };

  if (n == 0) return std::vector<Label>{};
  if (width <= 0) {
    Search s = make();
    bool ok = s.viable(root) && s.dfs(root);
    s.flush();
    if (ok) return s.result;
    return std::nullopt;
  }

  // split on the labels of the first branching vertex
  Search probe = make();
  if (!probe.viable(root)) return std::nullopt;
  const int v0 = probe.pick(root);
  const auto cands = probe.candidates(root.dom[v0]);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<std::vector<Label>> answer;
  std::exception_ptr err;
  auto worker = [&] {
    Search s = make();
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < cands.size();) {
        s.tick();
        auto t = s.apply(root, v0, cands[i]);
        if (s.viable(t) && s.dfs(t)) {
          std::lock_guard lk(mu);
          if (!answer) answer = s.result;
          shared.found = true;
          break;
        }
        s.assign[v0] = 0;
      }
      s.flush();
    } catch (const Stop&) {
    } catch (...) {
      std::lock_guard lk(mu);
      if (!err) err = std::current_exception();
      shared.found = true;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < width; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  shared.found = false;
  if (answer) return answer;
  if (err) std::rethrow_exception(err);
  return std::nullopt;
}

void check_size(const Graph& g) {
  if (g.order() > kMaxVertices)
    throw ParameterOutOfRange("solver supports at most 64 vertices, got " + std::to_string(g.order()));
}

}  // namespace

Label lower_bound(const Graph& g) {
  std::optional<BoundInfo> b;
  if (g.family()) b = independence_formula(*g.family());
  if (!b) b = independence_exact(g);
  return std::max<Label>(g.order(), b->odd_label_lower_bound);
}

SolverReport solve(const Graph& g, const SolverConfig& cfg, const Labeling* incumbent) {
  check_size(g);
  const int n = g.order();
  if (cfg.max_label_cap > kMaxLabel)
    throw ParameterOutOfRange("max_label_cap is limited to " + std::to_string(kMaxLabel));
  if (cfg.max_label_cap < n) throw ParameterOutOfRange("max_label_cap must be at least |V|");

  SolverReport rep;
  rep.alpha = independence_exact(g).alpha;
  rep.lower_bound_used = std::max<Label>(n, make_bound(n, rep.alpha, AlphaSource::Exact).odd_label_lower_bound);

  Shared shared;
  shared.budget = cfg.node_budget;
  if (cfg.time_limit_seconds)
    shared.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*cfg.time_limit_seconds));
  const auto rank = order_rank(g, cfg.vertex_order);

  for (Label m = rep.lower_bound_used; m <= static_cast<Label>(cfg.max_label_cap); ++m) {
    // everything below m is infeasible, so an incumbent at m is already optimal
    if (incumbent && incumbent->max_label() <= m) {
      rep.pr_value = incumbent->max_label();
      rep.optimal_labeling = *incumbent;
      rep.proven_optimal = true;
      rep.nodes_explored = shared.nodes;
      return rep;
    }
    try {
      if (auto lab = feasible(g, static_cast<int>(m), rep.alpha, rank, cfg.parallel_width, shared)) {
        rep.pr_value = m;
        rep.optimal_labeling.labels = std::move(*lab);
        rep.proven_optimal = true;
        rep.nodes_explored = shared.nodes;
        return rep;
      }
    } catch (const BudgetExceeded&) {
      if (!incumbent) throw;
      rep.pr_value = incumbent->max_label();
      rep.optimal_labeling = *incumbent;
      rep.proven_optimal = false;
      rep.nodes_explored = shared.nodes;
      return rep;
    }
  }
  throw InfeasibleAtCap("no coprime labeling of " + g.name() + " with labels up to " +
                        std::to_string(cfg.max_label_cap));
}

bool confirm_no_prime_labeling(const Graph& g, std::uint64_t node_budget) {
  check_size(g);
  Shared shared;
  shared.budget = node_budget;
  auto rank = order_rank(g, VertexOrder::DegreeDesc);
  return !feasible(g, g.order(), -1, rank, 0, shared);
}

}  // namespace coprime
