#include "coprime/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "coprime/errors.hpp"

namespace coprime {

std::string VertexId::name() const {
  switch (ring) {
    case Ring::Outer: return "v" + std::to_string(index);
    case Ring::Inner: return "u" + std::to_string(index);
    case Ring::Layer: return "x" + std::to_string(index) + "_" + std::to_string(pos);
  }
  return {};
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty() || out < 1)
    throw Error("bad vertex id '" + std::string(whole) + "'");
  return out;
}

}  // namespace

VertexId VertexId::parse(std::string_view s) {
  if (s.size() < 2) throw Error("bad vertex id '" + std::string(s) + "'");
  switch (s[0]) {
    case 'v': return v(parse_int(s.substr(1), s));
    case 'u': return u(parse_int(s.substr(1), s));
    case 'x': {
      auto us = s.find('_');
      if (us == std::string_view::npos) throw Error("bad vertex id '" + std::string(s) + "'");
      return x(parse_int(s.substr(1, us - 1), s), parse_int(s.substr(us + 1), s));
    }
    default: throw Error("bad vertex id '" + std::string(s) + "'");
  }
}

std::string family_kind(const Family& f) {
  struct {
    std::string operator()(const Prism&) const { return "prism"; }
    std::string operator()(const GP2&) const { return "gp2"; }
    std::string operator()(const StackedPrism&) const { return "stacked_prism"; }
    std::string operator()(const GPStar&) const { return "gpstar"; }
  } vis;
  return std::visit(vis, f);
}

std::string family_label(const Family& f) {
  struct {
    std::string operator()(const Prism& p) const { return "GP(" + std::to_string(p.n) + ",1)"; }
    std::string operator()(const GP2& p) const { return "GP(" + std::to_string(p.n) + ",2)"; }
    std::string operator()(const StackedPrism& p) const {
      return "Y(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
    }
    std::string operator()(const GPStar& p) const {
      return "GP*(" + std::to_string(2 * p.k) + "," + std::to_string(p.k) + ")";
    }
  } vis;
  return std::visit(vis, f);
}

Graph::Graph(std::string name, std::vector<VertexId> vertices, std::vector<Edge> edges,
             std::optional<Family> family)
    : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)), family_(std::move(family)) {
  const int n = order();
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(name_ + ": edge endpoint out of range");
    if (a == b) throw Error(name_ + ": loop at " + vertices_[a].name());
    if (a > b) std::swap(a, b);
  }
  auto vs = vertices_;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw Error(name_ + ": duplicate vertex id");
  auto es = edges_;
  std::sort(es.begin(), es.end());
  if (auto it = std::adjacent_find(es.begin(), es.end()); it != es.end())
    throw Error(name_ + ": duplicate edge " + vertices_[it->first].name() + "-" + vertices_[it->second].name());
  index_edges();
}

Graph Graph::trusted(std::string name, std::vector<VertexId> vertices, std::vector<Edge> edges,
                     std::optional<Family> family) {
  Graph g;
  g.name_ = std::move(name);
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.family_ = std::move(family);
  for (auto& [a, b] : g.edges_)
    if (a > b) std::swap(a, b);
  g.index_edges();
  return g;
}

void Graph::index_edges() {
  const int n = order();
  offset_.assign(n + 1, 0);
  for (auto [a, b] : edges_) {
    ++offset_[a + 1];
    ++offset_[b + 1];
  }
  for (int i = 0; i < n; ++i) offset_[i + 1] += offset_[i];
  adj_.assign(offset_[n], 0);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (auto [a, b] : edges_) {
    adj_[fill[a]++] = b;
    adj_[fill[b]++] = a;
  }
  for (int v = 0; v < n; ++v) std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
}

bool Graph::is_simple() const {
  try {
    Graph copy(name_, vertices_, edges_, family_);
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool Graph::adjacent(int a, int b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Graph::index_of(const VertexId& id) const {
  // the families have arithmetic layouts; fall back to a scan otherwise
  if (family_) {
    if (auto* s = std::get_if<StackedPrism>(&*family_)) {
      if (id.ring != Ring::Layer || id.index < 1 || id.index > s->n || id.pos < 1 || id.pos > s->m)
        return std::nullopt;
      return (id.index - 1) * s->m + (id.pos - 1);
    }
    int half = order() / 2;
    if (id.ring == Ring::Layer || id.index < 1 || id.index > half || id.pos != 0) return std::nullopt;
    return (id.ring == Ring::Outer ? 0 : half) + id.index - 1;
  }
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterOutOfRange(what);
}

// v_1..v_n, u_1..u_n with outer cycle, spokes, and inner edges u_i u_{i+k}
std::pair<std::vector<VertexId>, std::vector<Graph::Edge>> petersen_parts(int n, int k) {
  std::vector<VertexId> vs;
  vs.reserve(2 * n);
  for (int i = 1; i <= n; ++i) vs.push_back(VertexId::v(i));
  for (int i = 1; i <= n; ++i) vs.push_back(VertexId::u(i));
  std::vector<Graph::Edge> es;
  es.reserve(3 * n);
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) es.push_back({i, n + i});
  // when 2k = n, u_i u_{i+k} and u_{i+k} u_i coincide: keep one copy
  const int inner = 2 * k == n ? k : n;
  for (int i = 0; i < inner; ++i) es.push_back({n + i, n + (i + k) % n});
  return {std::move(vs), std::move(es)};
}

}  // namespace

Graph build(const Family& f) {
  if (auto* p = std::get_if<Prism>(&f)) {
    require(p->n >= 3, "Prism needs n >= 3, got n=" + std::to_string(p->n));
    auto [vs, es] = petersen_parts(p->n, 1);
    return Graph::trusted(family_label(f), std::move(vs), std::move(es), f);
  }
  if (auto* p = std::get_if<GP2>(&f)) {
    require(p->n >= 5, "GP(n,2) needs n >= 5, got n=" + std::to_string(p->n));
    auto [vs, es] = petersen_parts(p->n, 2);
    return Graph::trusted(family_label(f), std::move(vs), std::move(es), f);
  }
  if (auto* p = std::get_if<GPStar>(&f)) {
    require(p->k >= 2, "GP*(2k,k) needs k >= 2, got k=" + std::to_string(p->k));
    auto [vs, es] = petersen_parts(2 * p->k, p->k);
    return Graph::trusted(family_label(f), std::move(vs), std::move(es), f);
  }
  auto& s = std::get<StackedPrism>(f);
  require(s.m >= 3, "stacked prism needs m >= 3, got m=" + std::to_string(s.m));
  require(s.n >= 1, "stacked prism needs n >= 1, got n=" + std::to_string(s.n));
  std::vector<VertexId> vs;
  std::vector<Graph::Edge> es;
  vs.reserve(static_cast<std::size_t>(s.m) * s.n);
  es.reserve(2 * static_cast<std::size_t>(s.m) * s.n);
  for (int i = 1; i <= s.n; ++i)
    for (int j = 1; j <= s.m; ++j) vs.push_back(VertexId::x(i, j));
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.m; ++j) {
      es.push_back({i * s.m + j, i * s.m + (j + 1) % s.m});
      if (i + 1 < s.n) es.push_back({i * s.m + j, (i + 1) * s.m + j});
    }
  }
  return Graph::trusted(family_label(f), std::move(vs), std::move(es), f);
}

Graph build_gp(int n, int k) {
  require(n >= 3, "GP(n,k) needs n >= 3");
  require(k >= 1 && 2 * k <= n, "GP(n,k) needs 1 <= k <= n/2");
  auto [vs, es] = petersen_parts(n, k);
  return Graph("GP(" + std::to_string(n) + "," + std::to_string(k) + ")", std::move(vs), std::move(es));
}

BoundInfo make_bound(int order, int alpha, AlphaSource src) {
  BoundInfo b;
  b.alpha = alpha;
  b.source = src;
  b.odd_label_lower_bound = order - alpha >= 1 ? 2 * (order - alpha) - 1 : 1;
  return b;
}

std::optional<BoundInfo> independence_formula(const Family& f) {
  if (auto* p = std::get_if<Prism>(&f)) {
    if (p->n % 2 == 0) return std::nullopt;
    return make_bound(2 * p->n, p->n - 1, AlphaSource::Formula);
  }
  if (auto* p = std::get_if<GP2>(&f)) return make_bound(2 * p->n, 4 * p->n / 5, AlphaSource::Formula);
  if (auto* p = std::get_if<StackedPrism>(&f)) {
    if (p->m % 2 == 0) return std::nullopt;
    return make_bound(p->m * p->n, (p->m - 1) / 2 * p->n, AlphaSource::Formula);
  }
  return std::nullopt;
}

std::string to_dot(const Graph& g, const std::vector<std::uint64_t>* labels) {
  std::ostringstream os;
  os << "graph \"" << g.name() << "\" {\n";
  for (int i = 0; i < g.order(); ++i) {
    os << "  " << g.vertices()[i].name();
    if (labels && i < static_cast<int>(labels->size()))
      os << " [label=\"" << (*labels)[i] << "\"]";
    os << ";\n";
  }
  for (auto [a, b] : g.edges())
    os << "  " << g.vertices()[a].name() << " -- " << g.vertices()[b].name() << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coprime
