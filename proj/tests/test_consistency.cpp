#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "ramsey/checks.hpp"
#include "ramsey/consistency.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/gluer.hpp"
#include "test_support.hpp"

using namespace ramsey;
using namespace ramsey::testing;

namespace {

Census census(const Pattern& p, int n, EdgeWindow window = {}) {
  SearchGuard guard;
  return enumerate_census(p, n, {}, guard, window);
}

CensusSet set_of(const Pattern& p, int n, EdgeWindow window = {}) {
  return CensusSet::from_census(census(p, n, window), window);
}

std::map<int, CensusSet> lower_tables(const Pattern& p, int max_order) {
  SearchGuard guard;
  std::map<int, CensusSet> out;
  for (const auto& c : ramsey_levels(p.shrink(), max_order, {}, guard))
    out.emplace(c.order, CensusSet::from_census(c));
  return out;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "ramsey_consistency_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verify_edge_minimal examples") {
  Pattern j7 = Pattern::near_complete(7);
  CensusSet j7_8_3 = set_of(j7, 8, EdgeWindow{3, 3});
  REQUIRE(j7_8_3.graphs.size() == 1);
  CHECK(verify_edge_minimal(j7_8_3).passed);

  CensusSet clebsch{Pattern::near_complete(6), 16, EdgeWindow{40, 40}, true, {graphs::clebsch()}, {}, {}};
  CHECK(verify_edge_minimal(clebsch).passed);

  CensusSet c5{Pattern::near_complete(4), 5, EdgeWindow{5, 5}, true, {graphs::cycle(5)}, {}, {}};
  SuiteResult r = verify_edge_minimal(c5);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == graphs::cycle(5));
}

TEST_CASE("edge-minimal censuses at e(3,J_k,n) pass for every small cell") {
  for (int k : {4, 5, 6}) {
    Pattern p = Pattern::near_complete(k);
    SearchGuard guard;
    auto levels = ramsey_levels(p, 4 * k - 8, {}, guard);
    for (const auto& c : levels) {
      if (c.graphs.empty()) break;
      int e = *c.min_edges();
      CAPTURE(k);
      CAPTURE(c.order);
      CHECK(verify_edge_minimal(CensusSet::from_census(c, EdgeWindow{e, e})).passed);
    }
  }
}

TEST_CASE("verify_drop_add_closure examples") {
  Pattern j7 = Pattern::near_complete(7);
  CensusSet lower = set_of(j7, 8, EdgeWindow{0, 4});
  CensusSet upper = set_of(j7, 8, EdgeWindow{5, 5});
  CHECK(lower.graphs.size() == 7);
  CHECK(upper.graphs.size() == 14);
  CHECK(verify_drop_add_closure(lower, upper, 2).passed);

  Pattern j5 = Pattern::near_complete(5);
  CHECK(verify_drop_add_closure(set_of(j5, 9, EdgeWindow{12, 12}), set_of(j5, 9, EdgeWindow{13, 14}), 2)
            .passed);

  // Negative control: each member of the upper census reached from below
  // is detected when removed.
  std::size_t detected = 0;
  for (std::size_t i = 0; i < upper.graphs.size(); ++i) {
    CensusSet damaged = upper;
    damaged.graphs.erase(damaged.graphs.begin() + static_cast<long>(i));
    if (!verify_drop_add_closure(lower, damaged, 2).passed) ++detected;
  }
  CHECK(detected == upper.graphs.size());

  CensusSet damaged_lower = lower;
  damaged_lower.graphs.pop_back();
  CHECK_FALSE(verify_drop_add_closure(damaged_lower, upper, 2).passed);
}

TEST_CASE("verify_descent examples") {
  Pattern j5 = Pattern::near_complete(5);
  CHECK(verify_descent(set_of(j5, 10, EdgeWindow{15, 15}), lower_tables(j5, 9)).passed);

  Pattern j7 = Pattern::near_complete(7);
  auto tables = lower_tables(j7, 7);
  CensusSet j7_8 = set_of(j7, 8);
  CHECK(j7_8.graphs.size() == 392);
  CHECK(verify_descent(j7_8, tables).passed);

  // Corrupted lower census: drop one J_6 graph that some residual needs.
  bool detected = false;
  for (int order = 0; order <= 7 && !detected; ++order) {
    if (tables.at(order).graphs.empty()) continue;
    auto damaged = tables;
    damaged.at(order).graphs.pop_back();
    detected = !verify_descent(j7_8, damaged).passed;
  }
  CHECK(detected);

  auto missing = tables;
  missing.erase(5);
  CHECK_THROWS_AS(verify_descent(j7_8, missing), MissingCensus);
}

TEST_CASE("residual descent holds for J_5, J_6 and J_7 censuses") {
  struct Case {
    int k;
    int max_n;
  };
  for (Case c : {Case{5, 10}, Case{6, 16}, Case{7, 11}}) {
    Pattern p = Pattern::near_complete(c.k);
    auto tables = lower_tables(p, c.max_n - 1);
    SearchGuard guard;
    auto levels = ramsey_levels(p, c.max_n, {}, guard);
    for (int n = 1; n <= c.max_n; ++n) {
      CAPTURE(c.k);
      CAPTURE(n);
      CHECK(verify_descent(CensusSet::from_census(levels[n]), tables).passed);
    }
  }
}

TEST_CASE("integrity catches the three mutations") {
  Pattern j7 = Pattern::near_complete(7);
  CensusSet good = set_of(j7, 8, EdgeWindow{5, 5});
  good.declared_count = good.graphs.size();
  good.declared_digest = census_digest(good.graphs);
  CHECK(census_integrity(good).passed);

  CensusSet removed = good;
  removed.graphs.pop_back();
  CensusSet stray = good;
  // Five edges, so only the Ramsey test can reject it.
  stray.graphs.push_back(Graph::from_edges(
      8, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 6}}));
  CensusSet duplicate = good;
  const std::vector<int> reverse{7, 6, 5, 4, 3, 2, 1, 0};
  duplicate.graphs.push_back(good.graphs.front().permuted(reverse));

  for (const CensusSet* bad : {&removed, &stray, &duplicate}) {
    CHECK_FALSE(census_integrity(*bad).passed);
    CHECK_FALSE(verify_edge_minimal(*bad).passed);
    CHECK_FALSE(verify_drop_add_closure(set_of(j7, 8, EdgeWindow{0, 4}), *bad, 2).passed);
    CHECK_FALSE(verify_descent(*bad, lower_tables(j7, 7)).passed);
  }

  // Without a manifest the substantive checks still see strays and duplicates.
  stray.declared_count.reset();
  stray.declared_digest.reset();
  CHECK(census_integrity(stray).detail == "member is not a Ramsey graph");
  duplicate.declared_count.reset();
  duplicate.declared_digest.reset();
  CHECK(census_integrity(duplicate).detail == "duplicate isomorphism class");
}

TEST_CASE("census sets round-trip through graph6 and a manifest") {
  auto dir = scratch_dir();
  Pattern j6 = Pattern::near_complete(6);
  CensusSet s = set_of(j6, 12, EdgeWindow{18, 20});
  std::string manifest = write_census_set(s, (dir / "j6_n12").string());
  CensusSet back = read_census_set(manifest);
  CHECK(back.pattern == j6);
  CHECK(back.order == 12);
  CHECK(back.window.min == 18);
  CHECK(back.window.max == 20);
  CHECK(back.graphs == s.graphs);
  CHECK(back.declared_count == s.graphs.size());
  CHECK(census_integrity(back).passed);

  CensusSet explicit_set{Pattern::explicit_complement(graphs::path(4)), 5, {}, true,
                         {graphs::cycle(5)}, {}, {}};
  CensusSet back2 = read_census_set(write_census_set(explicit_set, (dir / "p4").string()));
  CHECK(back2.pattern == explicit_set.pattern);

  std::ofstream(dir / "broken.json") << "{\"order\": 3";
  CHECK_THROWS_AS(read_census_set((dir / "broken.json").string()), MalformedInput);
}

TEST_CASE("shipped reference censuses pass and mutation controls fail") {
  const std::string root = RAMSEY_DATA_DIR "/census/";
  auto load = [&](const std::string& name) { return read_census_set(root + name + ".json"); };
  CensusSet lower = load("j7_n8_e0-4");
  CensusSet upper = load("j7_n8_e5");
  CensusSet full = load("j7_n8");
  CensusSet minimal = load("j7_n8_e3");
  std::map<int, CensusSet> tables;
  for (int n = 0; n <= 7; ++n) tables.emplace(n, load("j6_n" + std::to_string(n)));

  CHECK(census_integrity(full).passed);
  CHECK(full.graphs.size() == 392);
  CHECK(verify_edge_minimal(minimal).passed);
  CHECK(verify_drop_add_closure(lower, upper, 2).passed);
  CHECK(verify_descent(full, tables).passed);

  for (const char* name : {"mutation_removed", "mutation_non_ramsey", "mutation_duplicate"}) {
    CAPTURE(name);
    CensusSet bad = load(name);
    CHECK_FALSE(census_integrity(bad).passed);
    CHECK_FALSE(verify_edge_minimal(bad).passed);
    CHECK_FALSE(verify_drop_add_closure(lower, bad, 2).passed);
    CHECK_FALSE(verify_descent(bad, tables).passed);
  }
}
