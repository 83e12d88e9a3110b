#pragma once

#include <array>
#include <cstdint>

#include "ramsey/graph.hpp"
#include "ramsey/histogram.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

bool is_triangle_free(const Graph& g);

// alpha(g[candidates]) >= k, by branch and bound with a matching bound.
bool has_independent_set(const Graph& g, Row candidates, int k);
int independence_number(const Graph& g);

// Per-vertex surcharge used by the sparse-subset query.
using VertexCosts = std::array<std::uint8_t, kMaxOrder>;

// Is there a k-subset T of `candidates` with e(T) + sum of costs over T at
// most `budget`? With zero costs this asks for k vertices spanning at most
// `budget` edges.
bool has_sparse_subset(const Graph& g, Row candidates, const VertexCosts& costs, int k,
                       int budget);

// Throws PatternTooLarge when p.size() > g.order().
bool contains_pattern_in_complement(const Graph& g, const Pattern& p);

// Triangle-free and pattern-free in the complement. A graph with fewer
// vertices than the pattern cannot contain it.
bool is_ramsey_graph(const Graph& g, const Pattern& p);

// Given a Ramsey graph g, would adding a vertex adjacent to `neighborhood`
// keep it Ramsey? Only subsets through the new vertex are examined.
bool extension_is_ramsey(const Graph& g, Row neighborhood, const Pattern& p);

// Given a Ramsey graph g and an edge {u,v}, is g - uv still Ramsey?
bool edge_removal_is_ramsey(const Graph& g, int u, int v, const Pattern& p);

// Induced subgraph on V minus the closed neighbourhood of v.
Graph residual(const Graph& g, int v);
Row residual_mask(const Graph& g, int v);

// Sum of the degrees of the neighbours of v.
int z_value(const Graph& g, int v);

DegreeHistogram degree_histogram(const Graph& g);

// floor((k-1) n / 2): the degree cap of a Ramsey graph for a k-vertex pattern.
int max_edge_bound(const Pattern& p, int n);
int max_edge_bound(int pattern_size, int n);

}  // namespace ramsey
