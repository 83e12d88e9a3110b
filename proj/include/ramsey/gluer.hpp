#pragma once

#include <map>
#include <vector>

#include "ramsey/budget.hpp"
#include "ramsey/enumeration.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// Which vertex degree the glued vertex v is required to have in the output.
// Any graph has a vertex of minimum (and of maximum) degree, so a union over
// all hosts and expansion degrees stays complete under either restriction.
enum class GlueAnchor { Any, MinDegree, MaxDegree };

struct GlueOptions {
  // Skip sets S whose leftover H - S already yields the target pattern
  // together with the edge {u, v}.
  bool eligibility_rule = true;
  // Abort when two glued neighbours leave a residue that completes the
  // target pattern.
  bool pair_rule = true;
  // Check every partial graph H + v + u_1..u_j incrementally; it is an
  // induced subgraph of any completion.
  bool partial_check = true;
  // Prune on edge-count bounds against the job's window.
  bool edge_bounds = true;
  GlueAnchor anchor = GlueAnchor::Any;
};

inline GlueOptions census_glue_options() {
  GlueOptions o;
  o.anchor = GlueAnchor::MinDegree;
  return o;
}

// Build every (3,target;m+d+1)-graph G with a vertex v of degree d whose
// residual G_v is the host. Output vertex labels: host 0..m-1, v = m,
// neighbours of v after it.
struct GlueJob {
  Graph host;
  int degree = 0;
  Pattern target;
  EdgeWindow window;
  GlueOptions options;
};

// Independent sets of H (the empty set included, size at most k-1 for a
// k-vertex target) that survive the eligibility rule, sorted by (size,
// vertex bits). Target must be a MaxEdges pattern.
std::vector<Row> eligible_independent_sets(const Graph& host, const Pattern& target);
// J_{k+1} target for a host with no J_k in its complement.
std::vector<Row> eligible_independent_sets(const Graph& host, int k);

// True when H restricted to the vertices outside every glued set contains
// k-2 vertices spanning at most t edges (target MaxEdges(k, t)); two
// non-adjacent glued neighbours then complete the pattern.
bool prune_residual(const Graph& host, const std::vector<Row>& glued, const Pattern& target);
bool prune_residual(const Graph& host, const std::vector<Row>& glued, int k);

Census glue_extend(const GlueJob& job, const RunOptions& opts, SearchGuard& guard);
Census glue_extend(const GlueJob& job, const RunOptions& opts = {});

// All (3,target;n)-graphs in `window`, glued from complete host censuses
// for target.shrink() keyed by order. Throws MissingCensus when a needed
// host order is absent. Uses the minimum-degree anchor unless overridden.
Census glue_census(const Pattern& target, int n, const std::map<int, Census>& hosts,
                   EdgeWindow window, const RunOptions& opts, SearchGuard& guard,
                   GlueOptions options = census_glue_options());

}  // namespace ramsey
