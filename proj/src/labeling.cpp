#include "coprime/labeling.hpp"

#include <algorithm>
#include <sstream>

#include "coprime/errors.hpp"

namespace coprime {

Label Labeling::max_label() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

int Labeling::even_count() const {
  return static_cast<int>(std::count_if(labels.begin(), labels.end(), [](Label x) { return x % 2 == 0; }));
}

VerificationReport verify(const Graph& g, const Labeling& l) {
  if (static_cast<int>(l.labels.size()) != g.order())
    throw MissingVertex("labeling has " + std::to_string(l.labels.size()) + " entries for " +
                        std::to_string(g.order()) + " vertices");
  for (int i = 0; i < g.order(); ++i)
    if (l.labels[i] == 0) throw MissingVertex("vertex " + g.vertices()[i].name() + " is unlabeled");

  VerificationReport r;
  for (auto [a, b] : g.edges()) {
    auto d = gcd(l.labels[a], l.labels[b]);
    if (d != 1) r.conflicts.push_back({a, b, l.labels[a], l.labels[b], d});
  }
  const Label mx = l.max_label();
  bool repeated = false;
  if (mx <= 16 * static_cast<Label>(g.order()) + 64) {
    std::vector<char> seen(mx + 1, 0);
    for (Label x : l.labels) {
      if (seen[x]) repeated = true;
      seen[x] = 1;
    }
  } else {
    repeated = true;  // sparse labels: let the sort below decide
  }
  if (repeated) {
    std::vector<std::pair<Label, int>> sorted;
    sorted.reserve(l.labels.size());
    for (int i = 0; i < g.order(); ++i) sorted.push_back({l.labels[i], i});
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j].first == sorted[i].first) ++j;
      if (j - i > 1) {
        VerificationReport::Duplicate d{sorted[i].first, {}};
        for (auto t = i; t < j; ++t) d.vertices.push_back(sorted[t].second);
        r.duplicates.push_back(std::move(d));
      }
      i = j;
    }
  }
  r.prime_labeling = r.duplicates.empty() && mx == static_cast<Label>(g.order());
  return r;
}

std::string VerificationReport::describe(const Graph& g) const {
  std::ostringstream os;
  if (ok()) {
    os << "coprime labeling" << (prime_labeling ? " (prime)" : "");
    return os.str();
  }
  for (auto& c : conflicts)
    os << "edge " << g.vertices()[c.a].name() << "-" << g.vertices()[c.b].name() << ": gcd(" << c.la
       << "," << c.lb << ")=" << c.gcd << "\n";
  for (auto& d : duplicates) {
    os << "label " << d.label << " used by";
    for (int v : d.vertices) os << " " << g.vertices()[v].name();
    os << "\n";
  }
  return os.str();
}

}  // namespace coprime
