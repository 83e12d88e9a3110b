#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ramsey/bound.hpp"
#include "ramsey/budget.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

struct EdgeWindow {
  int min = 0;
  int max = INT_MAX;
  bool contains(int e) const { return min <= e && e <= max; }
};

// Isomorphism classes of Ramsey graphs of one order, sorted by canonical
// form. `complete` is false when a budget stopped the search early.
struct Census {
  Pattern pattern;
  int order = 0;
  std::vector<CanonicalForm> graphs;
  bool complete = true;
  std::uint64_t nodes = 0;

  std::size_t size() const { return graphs.size(); }
  std::map<int, std::size_t> counts_by_edges() const;
  std::optional<int> min_edges() const;
  std::vector<CanonicalForm> with_edges(int e) const;
  bool contains(const CanonicalForm& form) const;
};

// Requires a triangle-free graph (NotTriangleFree otherwise).
bool is_maximal_triangle_free(const Graph& g);

// Vertex extension: from all Ramsey graphs of order m, every Ramsey graph of
// order m+1 whose new vertex has minimum degree. Deleting a minimum-degree
// vertex of any Ramsey graph leaves a Ramsey graph, so when `parent` is
// complete so is the result. With `maximal_only`, only mtf children are kept.
Census extend_census(const Census& parent, bool maximal_only, const RunOptions& opts,
                     SearchGuard& guard);

// Complete censuses of orders 0..max_order (stops early past R(3,H), where
// all further levels are empty).
std::vector<Census> ramsey_levels(const Pattern& p, int max_order, const RunOptions& opts,
                                  SearchGuard& guard);

Census generate_mtf_ramsey(const Pattern& p, int n, const RunOptions& opts, SearchGuard& guard);
Census generate_mtf_ramsey(const Pattern& p, int n, const RunOptions& opts = {});

// All Ramsey graphs reachable by deleting edges from the seeds, seeds
// included, restricted to edge counts in `window` (graphs above the window
// are still traversed). Seeds must share one order.
Census edge_removal_closure(const std::vector<Graph>& seeds, const Pattern& p,
                            const RunOptions& opts, SearchGuard& guard, EdgeWindow window = {});
Census edge_removal_closure(const std::vector<Graph>& seeds, const Pattern& p,
                            const RunOptions& opts = {});

// Full census of (3,H;n)-graphs: mtf seeds closed under edge removal.
Census enumerate_census(const Pattern& p, int n, const RunOptions& opts, SearchGuard& guard,
                        EdgeWindow window = {});

struct MinEdgesResult {
  Bound bound;
  std::vector<CanonicalForm> witnesses;
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Exact(e) with every witness at e, or Infinite when no mtf graph exists.
// An incomplete search reports AtLeast(0) rather than a guessed value.
MinEdgesResult enumerate_min_edges(const Pattern& p, int n, const RunOptions& opts = {});

}  // namespace ramsey
