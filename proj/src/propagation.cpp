#include "ramsey/propagation.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

ETable propagate(const ETable& t, int k, const PropagateOptions& opts,
                 std::vector<PropagatedCell>* cells) {
  if (k < 3) throw InputError("propagation needs pattern size at least 3");
  ETable out = t;
  const int lo = opts.n_min > 0 ? opts.n_min : k;
  const int hi = opts.n_max > 0 ? opts.n_max : 256;
  std::optional<int> previous;
  for (int n = lo; n <= hi; ++n) {
    if (auto existing = out.get(k, n); existing && existing->is_infinite() &&
                                        !t.entries().count({k, n})) {
      break;  // already implied by a smaller Infinite
    }
    Bound derived = min_edges_lower_bound(k, n, out, opts.level, opts.feasibility);
    out.merge(k, n, derived);
    if (previous && !derived.is_infinite()) {
      out.merge(k, n, Bound::at_least(*previous, Provenance::Feasibility, "monotone in n"));
    }
    Bound stored = *out.get(k, n);
    if (cells) cells->push_back({n, derived, stored});
    if (stored.is_infinite()) break;
    previous = stored.value;
  }
  return out;
}

}  // namespace ramsey
