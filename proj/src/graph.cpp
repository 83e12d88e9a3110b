#include "ramsey/graph.hpp"

#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

Graph::Graph(int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw OrderTooLarge("graph order " + std::to_string(order) +
                        " exceeds the build cap of " + std::to_string(kMaxOrder));
  }
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order || u == v) {
      throw InputError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.add_edge(u, v);
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    bits::for_each(rows_[u] & ~bits::prefix(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  rows_[u] |= bits::one(v);
  rows_[v] |= bits::one(u);
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~bits::one(v);
  rows_[v] &= ~bits::one(u);
}

Graph Graph::induced(Row subset) const {
  subset &= vertex_mask();
  std::array<int, kMaxOrder> index{};
  int m = 0;
  bits::for_each(subset, [&](int v) { index[v] = m++; });
  Graph h(m);
  bits::for_each(subset, [&](int v) {
    Row row = 0;
    bits::for_each(rows_[v] & subset, [&](int u) { row |= bits::one(index[u]); });
    h.rows_[index[v]] = row;
  });
  return h;
}

Graph Graph::with_vertex(Row neighborhood) const {
  Graph h(n_ + 1);
  h.rows_ = rows_;
  neighborhood &= vertex_mask();
  h.rows_[n_] = neighborhood;
  bits::for_each(neighborhood, [&](int u) { h.rows_[u] |= bits::one(n_); });
  return h;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph h(n_);
  for (int v = 0; v < n_; ++v) {
    Row row = 0;
    bits::for_each(rows_[v], [&](int u) { row |= bits::one(perm[u]); });
    h.rows_[perm[v]] = row;
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int v = 0; v < n_; ++v) h.rows_[v] = ~rows_[v] & vertex_mask() & ~bits::one(v);
  return h;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (rows_[v] != other.rows_[v]) return false;
  }
  return true;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Folded 5-cube: vertices are 4-bit words, adjacent when they differ in one
// bit or in all four.
Graph clebsch() {
  Graph g(16);
  for (int u = 0; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) {
      int diff = std::popcount(static_cast<unsigned>(u ^ v));
      if (diff == 1 || diff == 4) g.add_edge(u, v);
    }
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace graphs
}  // namespace ramsey
