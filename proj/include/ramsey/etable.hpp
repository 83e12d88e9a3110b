#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bound.hpp"

namespace ramsey {

// Bounds on e(3,H_K,n) keyed by (pattern size K, order n). One table holds
// one pattern family (J_k by default).
class ETable {
 public:
  // Stored entry; otherwise Exact(0) for n <= K-1, Infinite above a stored
  // Infinite of the same K, and nullopt ("unknown") everywhere else.
  std::optional<Bound> get(int k, int n) const;

  // Never weakens: Exact beats AtLeast, larger AtLeast beats smaller,
  // Infinite beats AtLeast. Throws ExactConflict when the new bound
  // contradicts an Exact or Infinite entry.
  void merge(int k, int n, const Bound& b);
  void merge(const ETable& other);

  const std::map<std::pair<int, int>, Bound>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Least n with an Infinite entry, i.e. an upper bound on R(3,H_K).
  std::optional<int> ramsey_upper(int k) const;

  // Monotonicity violations (finite values decreasing in n, finite entries
  // above an Infinite one), one message each.
  std::vector<std::string> invariant_violations() const;

  // Ledger records "K,n,kind,value,provenance,note", '#' comments.
  static ETable read(std::istream& in);
  static ETable read_file(const std::string& path);
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;

  // Orders down, pattern sizes across: "12", ">=117", "inf".
  std::string grid() const;

 private:
  std::map<std::pair<int, int>, Bound> entries_;
};

inline std::optional<int> derive_ramsey_upper(const ETable& t, int k) { return t.ramsey_upper(k); }

}  // namespace ramsey
