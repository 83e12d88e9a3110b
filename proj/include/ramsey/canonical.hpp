#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Relabeling-invariant isomorphism key. The bytes are the graph6 encoding
// of the canonically relabeled graph, so a form also stores its graph.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  Graph graph() const;

  auto operator<=>(const CanonicalForm&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalLabeling {
  // label[v] is the canonical index of vertex v.
  std::vector<int> label;
  Graph canonical_graph;
  // Automorphisms met during the search (not necessarily a full
  // generating set).
  std::vector<std::vector<int>> automorphisms;
  std::size_t leaves = 0;
};

// Ordered-partition refinement plus backtracking over individualisations;
// the canonical graph is the least relabeled adjacency over all leaves.
// Subtrees proven equivalent by discovered automorphisms are skipped.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// Coarsest equitable refinement of the unit partition, as a vector of
// vertex cells in canonical cell order. Exposed for tests.
std::vector<Row> equitable_partition(const Graph& g);

}  // namespace ramsey

template <>
struct std::hash<ramsey::CanonicalForm> {
  std::size_t operator()(const ramsey::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes());
  }
};
