#include "ramsey/enumeration.hpp"

#include <algorithm>
#include <mutex>

#include "ramsey/checks.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

std::map<int, std::size_t> Census::counts_by_edges() const {
  std::map<int, std::size_t> counts;
  for (const auto& f : graphs) ++counts[f.graph().edge_count()];
  return counts;
}

std::optional<int> Census::min_edges() const {
  std::optional<int> best;
  for (const auto& f : graphs) {
    int e = f.graph().edge_count();
    if (!best || e < *best) best = e;
  }
  return best;
}

std::vector<CanonicalForm> Census::with_edges(int e) const {
  std::vector<CanonicalForm> out;
  for (const auto& f : graphs) {
    if (f.graph().edge_count() == e) out.push_back(f);
  }
  return out;
}

bool Census::contains(const CanonicalForm& form) const {
  return std::binary_search(graphs.begin(), graphs.end(), form);
}

bool is_maximal_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) throw NotTriangleFree("graph contains a triangle");
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    Row non = g.vertex_mask() & ~g.neighbors(u) & ~bits::prefix(u + 1);
    bool ok = true;
    bits::for_each(non, [&](int v) {
      if (ok && (g.neighbors(u) & g.neighbors(v)) == 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

// Non-adjacent pairs of g without a common neighbour, as a list of masks.
std::vector<Row> undominated_pairs(const Graph& g) {
  std::vector<Row> pairs;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    Row non = g.vertex_mask() & ~g.neighbors(u) & ~bits::prefix(u + 1);
    bits::for_each(non, [&](int v) {
      if ((g.neighbors(u) & g.neighbors(v)) == 0) pairs.push_back(bits::one(u) | bits::one(v));
    });
  }
  return pairs;
}

struct ExtensionContext {
  const Graph& g;
  const Pattern& p;
  bool maximal_only;
  int cap;              // largest admissible |S|
  Row allowed;          // vertices that may join S
  std::vector<Row> pairs;
  SearchGuard& guard;
  FormSet& out;
  bool stopped = false;

  // Minimum-degree rule for the new vertex v with N(v) = s.
  bool min_degree_ok(Row s) const {
    const int size = bits::count(s);
    for (int w = 0; w < g.order(); ++w) {
      int d = g.degree(w) + (bits::test(s, w) ? 1 : 0);
      if (d < size) return false;
    }
    return true;
  }

  void accept(Row s) {
    if (maximal_only) {
      // S must be a maximal independent set holding every undominated pair.
      Row covered = s;
      bits::for_each(s, [&](int w) { covered |= g.neighbors(w); });
      if (covered != g.vertex_mask()) return;
      for (Row pair : pairs) {
        if ((s & pair) != pair) return;
      }
    }
    if (!min_degree_ok(s)) return;
    if (!extension_is_ramsey(g, s, p)) return;
    out.insert(canonical_form(g.with_vertex(s)));
  }

  // Independent sets S with vertices taken in increasing order.
  void grow(Row s, int size, Row candidates) {
    if (stopped) return;
    if (!guard.charge()) {
      stopped = true;
      return;
    }
    accept(s);
    if (size == cap) return;
    bits::for_each(candidates, [&](int w) {
      if (stopped) return;
      Row rest = candidates & ~bits::prefix(w + 1) & ~g.neighbors(w);
      grow(s | bits::one(w), size + 1, rest);
    });
  }
};

}  // namespace

Census extend_census(const Census& parent, bool maximal_only, const RunOptions& opts,
                     SearchGuard& guard) {
  Census child{parent.pattern, parent.order + 1, {}, parent.complete, 0};
  if (child.order > kMaxOrder) throw OrderTooLarge("order exceeds the supported maximum");
  const Pattern& p = parent.pattern;
  const std::uint64_t before = guard.nodes();
  FormSet out;
  std::atomic<bool> stopped{false};

  parallel_for(parent.graphs.size(), opts.workers, [&](std::size_t i) {
    if (stopped) return;
    const Graph g = parent.graphs[i].graph();
    const int n = g.order();
    // Δ <= k-1 in any Ramsey graph, so degree-(k-1) vertices cannot join S.
    Row allowed = 0;
    for (int w = 0; w < n; ++w) {
      if (g.degree(w) < p.size() - 1) allowed |= bits::one(w);
    }
    int cap = std::min(n == 0 ? 0 : g.min_degree() + 1, p.size() - 1);
    ExtensionContext ctx{g, p, maximal_only, cap, allowed, {}, guard, out};
    if (maximal_only) ctx.pairs = undominated_pairs(g);
    ctx.grow(0, 0, allowed);
    if (ctx.stopped) stopped = true;
  });

  child.graphs = out.sorted();
  child.nodes = guard.nodes() - before;
  if (stopped) child.complete = false;
  return child;
}

std::vector<Census> ramsey_levels(const Pattern& p, int max_order, const RunOptions& opts,
                                  SearchGuard& guard) {
  std::vector<Census> levels;
  levels.push_back(Census{p, 0, {canonical_form(Graph(0))}, true, 0});
  for (int m = 1; m <= max_order; ++m) {
    const Census& prev = levels.back();
    if (prev.graphs.empty() && prev.complete) {
      levels.push_back(Census{p, m, {}, true, 0});
      continue;
    }
    levels.push_back(extend_census(prev, false, opts, guard));
  }
  return levels;
}

Census generate_mtf_ramsey(const Pattern& p, int n, const RunOptions& opts, SearchGuard& guard) {
  if (n < 1) throw InputError("order must be at least 1");
  if (n > kMaxOrder) throw OrderTooLarge("order exceeds the supported maximum");
  std::vector<Census> levels = ramsey_levels(p, n - 1, opts, guard);
  return extend_census(levels.back(), true, opts, guard);
}

Census generate_mtf_ramsey(const Pattern& p, int n, const RunOptions& opts) {
  SearchGuard guard(opts.budget);
  return generate_mtf_ramsey(p, n, opts, guard);
}

Census edge_removal_closure(const std::vector<Graph>& seeds, const Pattern& p,
                            const RunOptions& opts, SearchGuard& guard, EdgeWindow window) {
  const int n = seeds.empty() ? 0 : seeds.front().order();
  Census result{p, n, {}, true, 0};
  if (seeds.empty()) return result;
  const std::uint64_t before = guard.nodes();

  std::map<int, FormSet> levels;
  int top = 0;
  for (const Graph& s : seeds) {
    if (s.order() != n) throw InputError("closure seeds must share one order");
    if (!is_ramsey_graph(s, p)) throw InputError("closure seed is not a Ramsey graph");
    levels[s.edge_count()].insert(canonical_form(s));
    top = std::max(top, s.edge_count());
  }

  std::vector<CanonicalForm> kept;
  std::atomic<bool> stopped{false};
  for (int e = top; e >= 0; --e) {
    auto it = levels.find(e);
    if (it == levels.end()) continue;
    std::vector<CanonicalForm> current = it->second.sorted();
    levels.erase(it);
    if (window.contains(e)) kept.insert(kept.end(), current.begin(), current.end());
    if (e - 1 < window.min) break;
    FormSet& below = levels[e - 1];
    parallel_for(current.size(), opts.workers, [&](std::size_t i) {
      if (stopped) return;
      Graph g = current[i].graph();
      for (auto [u, v] : g.edges()) {
        if (!guard.charge()) {
          stopped = true;
          return;
        }
        if (!edge_removal_is_ramsey(g, u, v, p)) continue;
        Graph h = g;
        h.remove_edge(u, v);
        below.insert(canonical_form(h));
      }
    });
    if (stopped) break;
  }

  std::sort(kept.begin(), kept.end());
  result.graphs = std::move(kept);
  result.complete = !stopped;
  result.nodes = guard.nodes() - before;
  return result;
}

Census edge_removal_closure(const std::vector<Graph>& seeds, const Pattern& p,
                            const RunOptions& opts) {
  SearchGuard guard(opts.budget);
  return edge_removal_closure(seeds, p, opts, guard);
}

Census enumerate_census(const Pattern& p, int n, const RunOptions& opts, SearchGuard& guard,
                        EdgeWindow window) {
  Census mtf = generate_mtf_ramsey(p, n, opts, guard);
  std::vector<Graph> seeds;
  seeds.reserve(mtf.graphs.size());
  for (const auto& f : mtf.graphs) seeds.push_back(f.graph());
  Census all = edge_removal_closure(seeds, p, opts, guard, window);
  all.order = n;
  all.complete = all.complete && mtf.complete;
  all.nodes += mtf.nodes;
  return all;
}

MinEdgesResult enumerate_min_edges(const Pattern& p, int n, const RunOptions& opts) {
  SearchGuard guard(opts.budget);
  Census mtf = generate_mtf_ramsey(p, n, opts, guard);
  MinEdgesResult result{Bound::at_least(0, Provenance::Enumerated), {}, false, 0};
  if (!mtf.complete) {
    result.nodes = guard.nodes();
    return result;
  }
  if (mtf.graphs.empty()) {
    result.bound = Bound::infinite(Provenance::Enumerated, "no mtf Ramsey graph");
    result.complete = true;
    result.nodes = guard.nodes();
    return result;
  }
  std::vector<Graph> seeds;
  for (const auto& f : mtf.graphs) seeds.push_back(f.graph());
  Census all = edge_removal_closure(seeds, p, opts, guard);
  result.nodes = guard.nodes();
  if (!all.complete) return result;
  const int e = *all.min_edges();
  result.bound = Bound::exact(e, Provenance::Enumerated);
  result.witnesses = all.with_edges(e);
  result.complete = true;
  return result;
}

}  // namespace ramsey
