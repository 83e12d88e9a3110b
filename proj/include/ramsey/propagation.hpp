#pragma once

#include <vector>

#include "ramsey/etable.hpp"
#include "ramsey/feasibility.hpp"

namespace ramsey {

struct PropagateOptions {
  int n_min = 0;  // 0: start at K
  int n_max = 0;  // 0: stop at the first Infinite (or n = 256)
  Refinement level = Refinement::PerVertex;
  FeasibilityOptions feasibility;
};

struct PropagatedCell {
  int n;
  Bound derived;  // what feasibility alone gives
  Bound stored;   // entry after the never-weaken merge
};

// Derives lower bounds for row K from row K-1 and merges them, then lifts
// each value to at least its predecessor (e(3,J_K,n) is nondecreasing in n).
ETable propagate(const ETable& t, int k, const PropagateOptions& opts = {},
                 std::vector<PropagatedCell>* cells = nullptr);

}  // namespace ramsey
