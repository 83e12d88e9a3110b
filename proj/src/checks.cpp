#include "ramsey/checks.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

bool is_triangle_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    Row nb = g.neighbors(v) & ~bits::prefix(v + 1);
    bool hit = false;
    bits::for_each(nb, [&](int u) { hit = hit || (g.neighbors(u) & nb) != 0; });
    if (hit) return false;
  }
  return true;
}

namespace {

// |C| minus a greedy maximal matching inside C bounds alpha(g[C]).
int matching_bound(const Graph& g, Row c) {
  int size = bits::count(c);
  Row free = c;
  while (free != 0) {
    int v = bits::lowest(free);
    free &= ~bits::one(v);
    Row nb = g.neighbors(v) & free;
    if (nb != 0) {
      free &= ~bits::one(bits::lowest(nb));
      --size;
    }
  }
  return size;
}

bool independent_rec(const Graph& g, Row c, int k) {
  while (true) {
    if (k <= 0) return true;
    if (bits::count(c) < k) return false;

    // Vertices of degree <= 1 inside C belong to some maximum independent
    // set, so take them without branching.
    int branch = -1;
    int branch_degree = -1;
    bool reduced = false;
    for (Row rest = c; rest != 0; rest &= rest - 1) {
      int v = bits::lowest(rest);
      Row nb = g.neighbors(v) & c;
      int d = bits::count(nb);
      if (d <= 1) {
        c &= ~(bits::one(v) | nb);
        --k;
        reduced = true;
        break;
      }
      if (d > branch_degree) {
        branch_degree = d;
        branch = v;
      }
    }
    if (reduced) continue;
    if (matching_bound(g, c) < k) return false;

    if (independent_rec(g, c & ~(bits::one(branch) | g.neighbors(branch)), k - 1)) return true;
    c &= ~bits::one(branch);
  }
}

}  // namespace

bool has_independent_set(const Graph& g, Row candidates, int k) {
  return independent_rec(g, candidates & g.vertex_mask(), k);
}

int independence_number(const Graph& g) {
  int k = 0;
  while (k < g.order() && has_independent_set(g, g.vertex_mask(), k + 1)) ++k;
  return k;
}

bool has_sparse_subset(const Graph& g, Row candidates, const VertexCosts& costs, int k,
                       int budget) {
  if (k <= 0) return true;
  Row c = 0;
  Row free_vertices = 0;
  bits::for_each(candidates & g.vertex_mask(), [&](int v) {
    if (costs[v] > budget) return;
    c |= bits::one(v);
    if (costs[v] == 0) free_vertices |= bits::one(v);
  });
  if (bits::count(c) < k) return false;
  if (has_independent_set(g, free_vertices, k)) return true;
  if (budget == 0) return false;

  // Any cheaper-than-budget subset with positive cost contains a charged
  // vertex or an edge; branch on which.
  Row charged = c & ~free_vertices;
  while (charged != 0) {
    int x = bits::lowest(charged);
    charged &= charged - 1;
    VertexCosts next = costs;
    bits::for_each(g.neighbors(x) & c, [&](int y) { ++next[y]; });
    if (has_sparse_subset(g, c & ~bits::one(x), next, k - 1, budget - costs[x])) return true;
    c &= ~bits::one(x);
  }
  if (k < 2) return false;
  for (Row rest = c; rest != 0; rest &= rest - 1) {
    int x = bits::lowest(rest);
    Row later = g.neighbors(x) & c & ~bits::prefix(x + 1);
    while (later != 0) {
      int y = bits::lowest(later);
      later &= later - 1;
      int cost = 1 + costs[x] + costs[y];
      if (cost > budget) continue;
      VertexCosts next = costs;
      Row pair = bits::one(x) | bits::one(y);
      bits::for_each(g.neighbors(x) & c & ~pair, [&](int z) { ++next[z]; });
      bits::for_each(g.neighbors(y) & c & ~pair, [&](int z) { ++next[z]; });
      if (has_sparse_subset(g, c & ~pair, next, k - 2, budget - cost)) return true;
    }
  }
  return false;
}

namespace {

// Backtracking embedding of a k-subset of G into the explicit complement
// graph F: every G-edge inside the subset must map onto an F-edge.
class ComplementMatcher {
 public:
  ComplementMatcher(const Graph& g, const Graph& f) : g_(g), f_(f) {
    const int k = f.order();
    order_.resize(k);
    for (int i = 0; i < k; ++i) order_[i] = i;
    // Sparse F-vertices first: their images must avoid the most G-edges.
    // Twins end up adjacent in the order so their images can be forced
    // increasing.
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (f.degree(a) != f.degree(b)) return f.degree(a) < f.degree(b);
      return f.neighbors(a) < f.neighbors(b);
    });
    twin_of_prev_.assign(k, false);
    for (int i = 1; i < k; ++i) {
      int a = order_[i - 1];
      int b = order_[i];
      Row na = f.neighbors(a) & ~bits::one(b);
      Row nb = f.neighbors(b) & ~bits::one(a);
      twin_of_prev_[i] = (na == nb);
    }
    image_.assign(k, -1);
  }

  bool run() { return place(0, 0); }

 private:
  bool place(int pos, Row used) {
    const int k = f_.order();
    if (pos == k) return true;
    const int fv = order_[pos];
    Row allowed = g_.vertex_mask() & ~used;
    for (int q = 0; q < pos; ++q) {
      int fw = order_[q];
      if (!f_.adjacent(fv, fw)) allowed &= ~g_.neighbors(image_[fw]);
    }
    if (pos > 0 && twin_of_prev_[pos]) allowed &= ~bits::prefix(image_[order_[pos - 1]] + 1);
    if (bits::count(allowed) < 1) return false;
    while (allowed != 0) {
      int x = bits::lowest(allowed);
      allowed &= allowed - 1;
      image_[fv] = x;
      if (place(pos + 1, used | bits::one(x))) return true;
    }
    image_[fv] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& f_;
  std::vector<int> order_;
  std::vector<bool> twin_of_prev_;
  std::vector<int> image_;
};

bool contains_unchecked(const Graph& g, const Pattern& p) {
  if (p.is_max_edges()) {
    VertexCosts zero{};
    return has_sparse_subset(g, g.vertex_mask(), zero, p.size(), p.max_edges());
  }
  return ComplementMatcher(g, p.complement_graph()).run();
}

}  // namespace

bool contains_pattern_in_complement(const Graph& g, const Pattern& p) {
  if (p.size() > g.order()) {
    throw PatternTooLarge("pattern on " + std::to_string(p.size()) +
                          " vertices exceeds graph order " + std::to_string(g.order()));
  }
  return contains_unchecked(g, p);
}

bool is_ramsey_graph(const Graph& g, const Pattern& p) {
  if (!is_triangle_free(g)) return false;
  if (p.size() > g.order()) return true;
  return !contains_unchecked(g, p);
}

bool extension_is_ramsey(const Graph& g, Row neighborhood, const Pattern& p) {
  neighborhood &= g.vertex_mask();
  for (Row rest = neighborhood; rest != 0; rest &= rest - 1) {
    if ((g.neighbors(bits::lowest(rest)) & neighborhood) != 0) return false;
  }
  if (p.size() > g.order() + 1) return true;
  if (!p.is_max_edges()) return !contains_unchecked(g.with_vertex(neighborhood), p);
  VertexCosts costs{};
  bits::for_each(neighborhood, [&](int v) { costs[v] = 1; });
  return !has_sparse_subset(g, g.vertex_mask(), costs, p.size() - 1, p.max_edges());
}

bool edge_removal_is_ramsey(const Graph& g, int u, int v, const Pattern& p) {
  if (p.size() > g.order()) return true;
  if (!p.is_max_edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    return !contains_unchecked(h, p);
  }
  // New sparse subsets must contain both endpoints of the removed edge.
  Row pair = bits::one(u) | bits::one(v);
  VertexCosts costs{};
  bits::for_each(g.neighbors(u) & ~pair, [&](int w) { ++costs[w]; });
  bits::for_each(g.neighbors(v) & ~pair, [&](int w) { ++costs[w]; });
  return !has_sparse_subset(g, g.vertex_mask() & ~pair, costs, p.size() - 2, p.max_edges());
}

Row residual_mask(const Graph& g, int v) {
  return g.vertex_mask() & ~(g.neighbors(v) | bits::one(v));
}

Graph residual(const Graph& g, int v) { return g.induced(residual_mask(g, v)); }

int z_value(const Graph& g, int v) {
  int z = 0;
  bits::for_each(g.neighbors(v), [&](int u) { z += g.degree(u); });
  return z;
}

DegreeHistogram degree_histogram(const Graph& g) {
  std::vector<int> counts(static_cast<std::size_t>(std::max(g.max_degree() + 1, 1)), 0);
  for (int v = 0; v < g.order(); ++v) ++counts[g.degree(v)];
  return DegreeHistogram(std::move(counts));
}

int max_edge_bound(int pattern_size, int n) { return (pattern_size - 1) * n / 2; }

int max_edge_bound(const Pattern& p, int n) { return max_edge_bound(p.size(), n); }

}  // namespace ramsey
