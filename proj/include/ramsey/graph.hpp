#pragma once

#include <array>
#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/bits.hpp"

namespace ramsey {

// Undirected simple graph on vertices 0..order()-1 stored as adjacency bit
// rows. Rows are symmetric, irreflexive and clear beyond order().
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  Row vertex_mask() const { return bits::prefix(n_); }

  Row neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return bits::test(rows_[u], v); }
  int degree(int v) const { return bits::count(rows_[v]); }
  int max_degree() const;
  int min_degree() const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Subgraph induced by `subset`; surviving vertices keep their relative
  // order.
  Graph induced(Row subset) const;
  // Copy with one extra vertex (index order()) adjacent to `neighborhood`.
  Graph with_vertex(Row neighborhood) const;
  // Relabel so that vertex v becomes perm[v].
  Graph permuted(std::span<const int> perm) const;
  Graph complement() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

// Small named graphs used throughout the tests and tools.
namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph petersen();
Graph clebsch();
// Disjoint union, vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);
}  // namespace graphs

}  // namespace ramsey
