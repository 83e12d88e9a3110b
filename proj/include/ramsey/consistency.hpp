#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/enumeration.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// A census as it lives on disk: graph6 members plus a JSON manifest. Members
// are kept exactly as read, so duplicates and strays stay visible.
struct CensusSet {
  Pattern pattern;
  int order = 0;
  EdgeWindow window;
  bool complete = true;
  std::vector<Graph> graphs;
  // Recorded at generation time; checked by census_integrity when present.
  std::optional<std::size_t> declared_count;
  std::optional<std::string> declared_digest;

  static CensusSet from_census(const Census& c, EdgeWindow window = {});
};

// FNV-1a over the sorted canonical forms, as 16 hex digits.
std::string census_digest(const std::vector<Graph>& graphs);

// Writes <stem>.g6 and <stem>.json (with count and digest). Returns the
// manifest path.
std::string write_census_set(const CensusSet& s, const std::string& stem);
// Reads a manifest and the graph6 file it names (relative to the manifest).
CensusSet read_census_set(const std::string& manifest_path);

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::string detail;
  std::optional<Graph> counterexample;
};

// Members are Ramsey, of the stated order, inside the window, pairwise
// non-isomorphic, and agree with the declared count and digest.
SuiteResult census_integrity(const CensusSet& s);

// Every member loses the Ramsey property when any single edge is deleted.
SuiteResult verify_edge_minimal(const CensusSet& s);

// Adding up to f edges to lower members never leaves the upper census, and
// deleting one edge from upper members never leaves the lower census
// (restricted to each census's edge window).
SuiteResult verify_drop_add_closure(const CensusSet& lower, const CensusSet& upper, int f);

// Every residual of every member lies in the census for the shrunk pattern
// at the residual's order. Throws MissingCensus when that order is absent
// or the residual's edge count is outside its window.
SuiteResult verify_descent(const CensusSet& s, const std::map<int, CensusSet>& subtables);

}  // namespace ramsey
