#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/bound.hpp"
#include "ramsey/etable.hpp"
#include "ramsey/histogram.hpp"

namespace ramsey {

// Closed form for e(3,J_K,n), K >= 3, written with k = K-2:
//   0 for n <= k+1; n-k up to 2k; 3n-5k up to 5k/2 (k >= 3);
//   5n-10k up to 3k (k >= 6); 6n-13k up to 13k/4-1 (k >= 6), and also at
//   k = 4t, n = 13t (k >= 8). Otherwise AtLeast(6n-13k) for k >= 6, else
//   nullopt. Only meaningful where e(3,J_K,n) is finite.
std::optional<Bound> e_closed_form(int k_pattern, int n);

enum class MissingEntryPolicy {
  Error,       // MissingTableEntry
  ClosedForm,  // fall back to e_closed_form, recording each use
};

struct FeasibilityOptions {
  MissingEntryPolicy policy = MissingEntryPolicy::Error;
  // Receives one line per closed-form fallback when non-null.
  std::vector<std::string>* fallback_log = nullptr;
};

// Marks a configuration whose residual cannot exist at all.
inline constexpr long long kInfeasible = LLONG_MIN / 4;

// Lower bound on e(3,J_k,n) used by the deficiency formulas: nullopt for
// Infinite; throws MissingTableEntry (or falls back) for unknown cells.
std::optional<int> residual_lower_bound(const ETable& table, int k, int n,
                                        const FeasibilityOptions& opts = {});

// gamma(v) = e - z - e(3,J_{K-1}, n-d-1); kInfeasible when that entry is Infinite.
long long deficiency_vertex(int e, int z, const ETable& table, int k_pattern, int n, int d,
                            const FeasibilityOptions& opts = {});

// gamma(G) = n e - sum_i n_i (i^2 + e(3,J_{K-1}, n-i-1)), with n and e read
// off the histogram; kInfeasible when a used class has an Infinite residual.
long long deficiency_graph(const DegreeHistogram& h, const ETable& table, int k_pattern,
                           const FeasibilityOptions& opts = {});

// Every histogram with sum n_i = n, sum i n_i = 2e, degrees in [0, K-1], and
// deficiency_graph >= 0, ordered by (n_{K-1}, ..., n_0) descending.
std::vector<DegreeHistogram> feasible_degree_sequences(int k_pattern, int n, int e,
                                                       const ETable& table,
                                                       const FeasibilityOptions& opts = {});

// False when some occupied degree class d admits no vertex with gamma(v) >= 0,
// using the least Z obtainable from the d smallest degrees available in h
// (n_d - 1 of the vertex's own class, degree-0 vertices excluded).
bool refine_per_vertex(const DegreeHistogram& h, int e, int k_pattern, const ETable& table,
                       const FeasibilityOptions& opts = {});

enum class Refinement { Histogram, PerVertex };

struct LowerBoundReport {
  Bound bound;                      // at the requested refinement level
  std::optional<int> histogram_e;   // least e passing the histogram level (nullopt: none)
  std::optional<int> per_vertex_e;  // least e passing per-vertex refinement
  std::vector<DegreeHistogram> survivors;  // surviving histograms at the bound
};

LowerBoundReport analyze_lower_bound(int k_pattern, int n, const ETable& table,
                                     Refinement level = Refinement::PerVertex,
                                     const FeasibilityOptions& opts = {});

// AtLeast(least surviving e) or Infinite when nothing survives up to
// floor((K-1) n / 2).
Bound min_edges_lower_bound(int k_pattern, int n, const ETable& table,
                            Refinement level = Refinement::PerVertex,
                            const FeasibilityOptions& opts = {});

}  // namespace ramsey
