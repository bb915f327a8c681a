#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coprime/graph.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

// labels[i] belongs to g.vertices()[i]; 0 marks an unassigned vertex
struct Labeling {
  std::vector<Label> labels;

  Label max_label() const;
  int even_count() const;
};

struct VerificationReport {
  struct Conflict {
    int a, b;
    Label la, lb;
    std::uint64_t gcd;
  };
  struct Duplicate {
    Label label;
    std::vector<int> vertices;
  };

  std::vector<Conflict> conflicts;
  std::vector<Duplicate> duplicates;
  bool prime_labeling = false;

  bool ok() const { return conflicts.empty() && duplicates.empty(); }
  std::string describe(const Graph& g) const;
};

// Throws MissingVertex if some vertex has no label.
VerificationReport verify(const Graph& g, const Labeling& l);

}  // namespace coprime
