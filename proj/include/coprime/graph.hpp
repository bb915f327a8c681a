#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace coprime {

enum class Ring : std::uint8_t { Outer, Inner, Layer };

// Outer/Inner: v_index / u_index. Layer: x<index>_<pos>, layer index, position pos on the cycle.
struct VertexId {
  Ring ring = Ring::Outer;
  int index = 1;
  int pos = 0;

  std::string name() const;
  static VertexId parse(std::string_view s);

  static VertexId v(int i) { return {Ring::Outer, i, 0}; }
  static VertexId u(int i) { return {Ring::Inner, i, 0}; }
  static VertexId x(int layer, int j) { return {Ring::Layer, layer, j}; }

  auto operator<=>(const VertexId&) const = default;
};

struct Prism {
  int n;
};
struct GP2 {
  int n;
};
// m-cycle layers, n of them joined as a path
struct StackedPrism {
  int m;
  int n;
};
struct GPStar {
  int k;
};

using Family = std::variant<Prism, GP2, StackedPrism, GPStar>;

std::string family_kind(const Family& f);  // "prism", "gp2", "stacked_prism", "gpstar"
std::string family_label(const Family& f); // e.g. "GP(11,1)", "Y(3,6)"

class Graph {
 public:
  using Edge = std::pair<int, int>;

  // Rejects loops, repeated edges and repeated vertex ids.
  Graph(std::string name, std::vector<VertexId> vertices, std::vector<Edge> edges,
        std::optional<Family> family = std::nullopt);

  // No checks; for generators that are simple by construction.
  static Graph trusted(std::string name, std::vector<VertexId> vertices, std::vector<Edge> edges,
                       std::optional<Family> family);

  // true if no loops, no repeated edges, no repeated vertex ids
  bool is_simple() const;

  const std::string& name() const { return name_; }
  const std::optional<Family>& family() const { return family_; }
  int order() const { return static_cast<int>(vertices_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }
  bool adjacent(int a, int b) const;
  std::optional<int> index_of(const VertexId& id) const;

 private:
  std::string name_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> offset_;  // CSR adjacency
  std::vector<int> adj_;

  Graph() = default;
  void index_edges();
  std::optional<Family> family_;
};

// Vertex order: v_1..v_n then u_1..u_n; stacked prisms layer-major.
Graph build(const Family& f);

// General GP(n,k), only used for spot checks outside the four families.
Graph build_gp(int n, int k);

enum class AlphaSource { Formula, Exact };

struct BoundInfo {
  int alpha = 0;
  AlphaSource source = AlphaSource::Exact;
  int odd_label_lower_bound = 1;
};

BoundInfo make_bound(int order, int alpha, AlphaSource src);

std::optional<BoundInfo> independence_formula(const Family& f);

// Exact maximum independent set (|V| <= 64); throws BudgetExceeded.
BoundInfo independence_exact(const Graph& g, std::uint64_t node_budget = 50'000'000);
std::vector<int> maximum_independent_set(const Graph& g, std::uint64_t node_budget = 50'000'000);

std::string to_dot(const Graph& g, const std::vector<std::uint64_t>* labels = nullptr);

}  // namespace coprime
