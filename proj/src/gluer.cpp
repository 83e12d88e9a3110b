#include "ramsey/gluer.hpp"

#include <algorithm>
#include <atomic>

#include "ramsey/checks.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

void require_max_edges(const Pattern& p) {
  if (!p.is_max_edges()) throw UnsupportedPattern("gluing needs a MaxEdges target pattern");
  if (p.size() < 2) throw UnsupportedPattern("gluing needs a target of at least 2 vertices");
}

bool sparse_subset(const Graph& g, Row within, int k, int budget) {
  if (budget < 0) return false;
  if (k <= 0) return true;
  VertexCosts zero{};
  return has_sparse_subset(g, within, zero, k, budget);
}

void independent_sets(const Graph& g, Row s, int size, int cap, Row candidates,
                      std::vector<Row>& out) {
  out.push_back(s);
  if (size == cap) return;
  bits::for_each(candidates, [&](int w) {
    Row rest = candidates & ~bits::prefix(w + 1) & ~g.neighbors(w);
    independent_sets(g, s | bits::one(w), size + 1, cap, rest, out);
  });
}

bool by_size_then_bits(Row a, Row b) {
  int ca = bits::count(a), cb = bits::count(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

std::vector<Row> candidate_sets(const Graph& host, const Pattern& target, bool eligibility) {
  const int k = target.size();
  std::vector<Row> all;
  independent_sets(host, 0, 0, std::max(0, k - 2), host.vertex_mask(), all);
  std::vector<Row> out;
  for (Row s : all) {
    // u (adjacent to v and S) plus v plus k-2 vertices of H - S.
    if (eligibility &&
        sparse_subset(host, host.vertex_mask() & ~s, k - 2, target.max_edges() - 1)) {
      continue;
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), by_size_then_bits);
  return out;
}

struct GlueSearch {
  const GlueJob& job;
  const std::vector<Row>& candidates;
  SearchGuard& guard;
  FormSet& out;
  int m;
  int k;
  Graph partial;                  // H + v + glued neighbours so far
  std::vector<Row> glued;
  std::array<int, kMaxOrder> host_degree{};
  int edges = 0;
  bool stopped = false;

  GlueSearch(const GlueJob& j, const std::vector<Row>& c, SearchGuard& g, FormSet& o)
      : job(j), candidates(c), guard(g), out(o), m(j.host.order()), k(j.target.size()) {
    partial = j.host.with_vertex(0);
    for (int w = 0; w < m; ++w) host_degree[w] = j.host.degree(w);
    edges = j.host.edge_count();
  }

  bool window_allows(int assigned, std::size_t next_index) const {
    if (!job.options.edge_bounds) return true;
    const int remaining = job.degree - assigned;
    if (remaining == 0) return job.window.contains(edges);
    const int smallest = bits::count(candidates[next_index]);
    const int low = edges + remaining * (1 + smallest);
    const int high = edges + remaining * (1 + std::max(0, k - 2));
    return low <= job.window.max && high >= job.window.min;
  }

  bool anchor_allows_set(Row s) const {
    const int du = bits::count(s) + 1;
    switch (job.options.anchor) {
      case GlueAnchor::MinDegree:
        return du >= job.degree;
      case GlueAnchor::MaxDegree:
        return du <= job.degree;
      case GlueAnchor::Any:
        return true;
    }
    return true;
  }

  bool degrees_allow(Row s, int remaining_after) const {
    bool ok = true;
    bits::for_each(s, [&](int w) {
      int d = host_degree[w] + 1;
      if (d > k - 1) ok = false;
      if (job.options.anchor == GlueAnchor::MaxDegree && d > job.degree) ok = false;
    });
    if (!ok) return false;
    if (job.options.anchor == GlueAnchor::MinDegree) {
      // Every host vertex must still be able to reach degree d.
      for (int w = 0; w < m; ++w) {
        int d = host_degree[w] + (bits::test(s, w) ? 1 : 0);
        if (d + remaining_after < job.degree) return false;
      }
    }
    return true;
  }

  void finish() {
    if (!job.window.contains(edges)) return;
    if (job.options.anchor == GlueAnchor::MinDegree && partial.min_degree() < job.degree) return;
    if (job.options.anchor == GlueAnchor::MaxDegree && partial.max_degree() > job.degree) return;
    if (!job.options.partial_check && !is_ramsey_graph(partial, job.target)) return;
    out.insert(canonical_form(partial));
  }

  void assign(int j, std::size_t from) {
    if (stopped) return;
    if (!guard.charge()) {
      stopped = true;
      return;
    }
    if (j == job.degree) {
      finish();
      return;
    }
    for (std::size_t i = from; i < candidates.size() && !stopped; ++i) {
      if (!window_allows(j, i)) {
        // Larger sets only raise the lower bound.
        if (job.options.edge_bounds &&
            edges + (job.degree - j) * (1 + bits::count(candidates[i])) > job.window.max)
          break;
        continue;
      }
      place(j, i);
    }
  }

  void place(int j, std::size_t i) {
    const Row s = candidates[i];
    if (!anchor_allows_set(s)) return;
    if (!degrees_allow(s, job.degree - j - 1)) return;
    if (job.options.pair_rule) {
      for (Row other : glued) {
        if (prune_residual(job.host, {other, s}, job.target)) return;
      }
    }
    const Row nbhd = s | bits::one(m);
    if (job.options.partial_check && !extension_is_ramsey(partial, nbhd, job.target)) return;

    const Graph saved = partial;
    partial = partial.with_vertex(nbhd);
    glued.push_back(s);
    bits::for_each(s, [&](int w) { ++host_degree[w]; });
    edges += bits::count(s) + 1;

    assign(j + 1, i);

    edges -= bits::count(s) + 1;
    bits::for_each(s, [&](int w) { --host_degree[w]; });
    glued.pop_back();
    partial = saved;
  }
};

void check_job(const GlueJob& job) {
  require_max_edges(job.target);
  if (job.degree < 0 || job.degree > job.target.size() - 1)
    throw InputError("expansion degree must lie in [0, k-1] for a k-vertex target");
  if (job.host.order() + job.degree + 1 > kMaxOrder)
    throw OrderTooLarge("glued order exceeds the supported maximum");
  if (!is_ramsey_graph(job.host, job.target.shrink()))
    throw InputError("host is not a Ramsey graph for the shrunken target");
}

}  // namespace

std::vector<Row> eligible_independent_sets(const Graph& host, const Pattern& target) {
  require_max_edges(target);
  return candidate_sets(host, target, true);
}

std::vector<Row> eligible_independent_sets(const Graph& host, int k) {
  return eligible_independent_sets(host, Pattern::near_complete(k + 1));
}

bool prune_residual(const Graph& host, const std::vector<Row>& glued, const Pattern& target) {
  require_max_edges(target);
  Row used = 0;
  for (Row s : glued) used |= s;
  return sparse_subset(host, host.vertex_mask() & ~used, target.size() - 2, target.max_edges());
}

bool prune_residual(const Graph& host, const std::vector<Row>& glued, int k) {
  return prune_residual(host, glued, Pattern::near_complete(k + 1));
}

Census glue_extend(const GlueJob& job, const RunOptions& opts, SearchGuard& guard) {
  check_job(job);
  Census result{job.target, job.host.order() + job.degree + 1, {}, true, 0};
  const std::uint64_t before = guard.nodes();
  const auto candidates = candidate_sets(job.host, job.target, job.options.eligibility_rule);
  FormSet out;
  std::atomic<bool> stopped{false};

  if (job.degree == 0) {
    GlueSearch search(job, candidates, guard, out);
    search.assign(0, 0);
    stopped = search.stopped;
  } else {
    // One work item per first assignment.
    parallel_for(candidates.size(), opts.workers, [&](std::size_t i) {
      if (stopped) return;
      GlueSearch search(job, candidates, guard, out);
      if (!search.window_allows(0, i)) return;
      if (!guard.charge()) {
        stopped = true;
        return;
      }
      search.place(0, i);
      if (search.stopped) stopped = true;
    });
  }

  result.graphs = out.sorted();
  result.complete = !stopped;
  result.nodes = guard.nodes() - before;
  return result;
}

Census glue_extend(const GlueJob& job, const RunOptions& opts) {
  SearchGuard guard(opts.budget);
  return glue_extend(job, opts, guard);
}

Census glue_census(const Pattern& target, int n, const std::map<int, Census>& hosts,
                   EdgeWindow window, const RunOptions& opts, SearchGuard& guard,
                   GlueOptions options) {
  require_max_edges(target);
  Census result{target, n, {}, true, 0};
  const std::uint64_t before = guard.nodes();
  FormSet out;
  for (int d = 0; d <= target.size() - 1; ++d) {
    const int m = n - d - 1;
    if (m < 0) break;
    auto it = hosts.find(m);
    if (it == hosts.end())
      throw MissingCensus("no host census of order " + std::to_string(m) + " for " +
                          target.shrink().name());
    const Census& level = it->second;
    if (!level.complete) result.complete = false;
    for (const auto& form : level.graphs) {
      GlueJob job{form.graph(), d, target, window, options};
      Census part = glue_extend(job, opts, guard);
      if (!part.complete) result.complete = false;
      for (auto& g : part.graphs) out.insert(g);
      if (guard.exhausted()) break;
    }
  }
  result.graphs = out.sorted();
  result.nodes = guard.nodes() - before;
  return result;
}

}  // namespace ramsey
