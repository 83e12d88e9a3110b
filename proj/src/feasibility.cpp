#include "ramsey/feasibility.hpp"

#include <algorithm>

#include "ramsey/checks.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

std::optional<Bound> e_closed_form(int k_pattern, int n) {
  if (k_pattern < 3) throw InputError("closed form needs pattern size at least 3");
  const int k = k_pattern - 2;
  auto exact = [](int v) { return Bound::exact(v, Provenance::Theorem1); };
  if (n <= k + 1) return exact(0);
  if (n <= 2 * k) return exact(n - k);
  if (k >= 3 && 2 * n <= 5 * k) return exact(3 * n - 5 * k);
  if (k >= 6 && n <= 3 * k) return exact(5 * n - 10 * k);
  if (k >= 6 && 4 * n <= 13 * k - 4) return exact(6 * n - 13 * k);
  if (k >= 8 && k % 4 == 0 && 4 * n == 13 * k) return exact(6 * n - 13 * k);
  if (k >= 6) return Bound::at_least(std::max(0, 6 * n - 13 * k), Provenance::Theorem1);
  return std::nullopt;
}

std::optional<int> residual_lower_bound(const ETable& table, int k, int n,
                                        const FeasibilityOptions& opts) {
  std::optional<Bound> b = table.get(k, n);
  if (!b) {
    if (opts.policy == MissingEntryPolicy::ClosedForm && k >= 3) b = e_closed_form(k, n);
    if (!b) throw MissingTableEntry(k, n);
    if (opts.fallback_log)
      opts.fallback_log->push_back("closed form used for K=" + std::to_string(k) +
                                   ", n=" + std::to_string(n) + ": " + b->describe());
  }
  return b->lower();
}

long long deficiency_vertex(int e, int z, const ETable& table, int k_pattern, int n, int d,
                            const FeasibilityOptions& opts) {
  const int m = n - d - 1;
  if (m < 0) return kInfeasible;
  auto lower = residual_lower_bound(table, k_pattern - 1, m, opts);
  if (!lower) return kInfeasible;
  return static_cast<long long>(e) - z - *lower;
}

namespace {

// Per-class cost i^2 + e(3,J_{K-1}, n-i-1), or nullopt when class i is
// unusable (degree too large or residual impossible).
std::vector<std::optional<long long>> class_costs(int k_pattern, int n, const ETable& table,
                                                  const FeasibilityOptions& opts) {
  std::vector<std::optional<long long>> cost(k_pattern);
  for (int i = 0; i < k_pattern; ++i) {
    const int m = n - i - 1;
    if (m < 0) continue;
    auto lower = residual_lower_bound(table, k_pattern - 1, m, opts);
    if (lower) cost[i] = static_cast<long long>(i) * i + *lower;
  }
  return cost;
}

// Least cost of r vertices from classes [0, top) with degree sum s, over the
// reals: the lower convex envelope of the points (i, cost_i), scaled by r.
// Returns false when no fractional choice exists.
bool relaxed_min_cost(const std::vector<std::optional<long long>>& cost, int top, long long r,
                      long long s, double& best) {
  if (r == 0) {
    best = 0;
    return s == 0;
  }
  bool found = false;
  best = 0;
  for (int a = 0; a < top; ++a) {
    if (!cost[a]) continue;
    for (int b = a; b < top; ++b) {
      if (!cost[b]) continue;
      // r vertices with degrees in {a, b} summing to s.
      if (s < r * a || s > r * b) continue;
      double value;
      if (a == b) {
        value = static_cast<double>(r) * *cost[a];
      } else {
        double x = static_cast<double>(s - r * a) / (b - a);  // vertices at b
        value = (r - x) * *cost[a] + x * *cost[b];
      }
      if (!found || value < best) best = value;
      found = true;
    }
  }
  return found;
}

struct SequenceSearch {
  int k;
  long long budget;  // n e
  const std::vector<std::optional<long long>>& cost;
  std::vector<int> counts;
  std::vector<DegreeHistogram> out;

  // Assign n_i for i = top-1 down to 0 with r vertices and degree sum s left.
  void assign(int top, long long r, long long s, long long spent) {
    if (top == 0) {
      if (r == 0 && s == 0) out.emplace_back(counts);
      return;
    }
    double relaxed;
    if (!relaxed_min_cost(cost, top, r, s, relaxed)) return;
    if (spent + relaxed > budget + 1e-9) return;
    const int i = top - 1;
    long long max_here = cost[i] ? r : 0;
    if (i > 0) max_here = std::min(max_here, s / i);
    for (long long c = max_here; c >= 0; --c) {
      counts[i] = static_cast<int>(c);
      long long add = c == 0 ? 0 : c * *cost[i];
      assign(i, r - c, s - c * i, spent + add);
    }
    counts[i] = 0;
  }
};

}  // namespace

long long deficiency_graph(const DegreeHistogram& h, const ETable& table, int k_pattern,
                           const FeasibilityOptions& opts) {
  const int n = h.order();
  if (h.degree_sum() % 2 != 0) throw InputError("histogram has an odd degree sum");
  if (h.max_degree() > k_pattern - 1) return kInfeasible;
  const long long e = h.degree_sum() / 2;
  long long gamma = static_cast<long long>(n) * e;
  for (int i = 0; i <= h.max_degree(); ++i) {
    if (h.count(i) == 0) continue;
    const int m = n - i - 1;
    if (m < 0) return kInfeasible;
    auto lower = residual_lower_bound(table, k_pattern - 1, m, opts);
    if (!lower) return kInfeasible;
    gamma -= static_cast<long long>(h.count(i)) * (static_cast<long long>(i) * i + *lower);
  }
  return gamma;
}

std::vector<DegreeHistogram> feasible_degree_sequences(int k_pattern, int n, int e,
                                                       const ETable& table,
                                                       const FeasibilityOptions& opts) {
  if (k_pattern < 2 || n < 0 || e < 0) throw InputError("bad feasibility parameters");
  if (e > max_edge_bound(k_pattern, n)) throw InputError("edge count exceeds (K-1) n / 2");
  auto cost = class_costs(k_pattern, n, table, opts);
  SequenceSearch search{k_pattern, static_cast<long long>(n) * e, cost,
                        std::vector<int>(k_pattern, 0), {}};
  search.assign(k_pattern, n, 2LL * e, 0);
  return std::move(search.out);
}

bool refine_per_vertex(const DegreeHistogram& h, int e, int k_pattern, const ETable& table,
                       const FeasibilityOptions& opts) {
  const int n = h.order();
  for (int d = 0; d <= h.max_degree(); ++d) {
    if (h.count(d) == 0) continue;
    // The d smallest neighbour degrees available.
    long long z = 0;
    int need = d;
    for (int j = 1; j <= h.max_degree() && need > 0; ++j) {
      int avail = h.count(j) - (j == d ? 1 : 0);
      int take = std::min(need, std::max(0, avail));
      z += static_cast<long long>(take) * j;
      need -= take;
    }
    if (need > 0) return false;
    if (deficiency_vertex(e, static_cast<int>(z), table, k_pattern, n, d, opts) < 0) return false;
  }
  return true;
}

LowerBoundReport analyze_lower_bound(int k_pattern, int n, const ETable& table, Refinement level,
                                     const FeasibilityOptions& opts) {
  LowerBoundReport report{Bound::infinite(Provenance::Feasibility), std::nullopt, std::nullopt,
                          {}};
  const int cap = max_edge_bound(k_pattern, n);
  for (int e = 0; e <= cap; ++e) {
    auto seqs = feasible_degree_sequences(k_pattern, n, e, table, opts);
    if (seqs.empty()) continue;
    if (!report.histogram_e) {
      report.histogram_e = e;
      if (level == Refinement::Histogram) report.survivors = seqs;
    }
    std::vector<DegreeHistogram> kept;
    for (auto& h : seqs)
      if (refine_per_vertex(h, e, k_pattern, table, opts)) kept.push_back(h);
    if (!kept.empty()) {
      report.per_vertex_e = e;
      if (level == Refinement::PerVertex) report.survivors = std::move(kept);
      break;
    }
  }

  std::optional<int> chosen = level == Refinement::Histogram ? report.histogram_e
                                                             : report.per_vertex_e;
  if (!chosen) {
    report.bound = Bound::infinite(Provenance::Feasibility, "no feasible degree sequence");
    return report;
  }
  std::string note;
  if (report.survivors.size() == 1) note = "unique solution " + report.survivors[0].to_string();
  if (level == Refinement::PerVertex && report.histogram_e && *report.histogram_e < *chosen) {
    note += (note.empty() ? "" : "; ") + std::string("per-vertex refinement raises ") +
            std::to_string(*report.histogram_e) + " to " + std::to_string(*chosen);
  }
  report.bound = Bound::at_least(*chosen, Provenance::Feasibility, note);
  return report;
}

Bound min_edges_lower_bound(int k_pattern, int n, const ETable& table, Refinement level,
                            const FeasibilityOptions& opts) {
  return analyze_lower_bound(k_pattern, n, table, level, opts).bound;
}

}  // namespace ramsey
