#include "doctest.h"

#include "ramsey/checks.hpp"
#include "ramsey/enumeration.hpp"
#include "ramsey/errors.hpp"
#include "test_support.hpp"

using namespace ramsey;
using namespace ramsey::testing;

namespace {

std::vector<Graph> decode_all(const Census& c) {
  std::vector<Graph> out;
  for (const auto& f : c.graphs) out.push_back(f.graph());
  return out;
}

std::vector<Pattern> small_patterns() {
  std::vector<Pattern> ps;
  for (int k = 3; k <= 5; ++k) ps.push_back(Pattern::complete(k));
  for (int k = 3; k <= 8; ++k) ps.push_back(Pattern::near_complete(k));
  ps.push_back(Pattern::max_edges(5, 2));
  ps.push_back(Pattern::max_edges(6, 3));
  // Complements given explicitly: P3 + 2K1, 2K2 + 2K1, C4 + K1.
  ps.push_back(Pattern::explicit_complement(
      Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}})));
  ps.push_back(Pattern::explicit_complement(
      Graph::from_edges(6, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})));
  ps.push_back(Pattern::explicit_complement(
      Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  return ps;
}

}  // namespace

TEST_CASE("is_maximal_triangle_free examples") {
  CHECK(is_maximal_triangle_free(graphs::cycle(5)));
  CHECK_FALSE(is_maximal_triangle_free(
      Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})));
  CHECK(is_maximal_triangle_free(graphs::petersen()));
  CHECK(is_maximal_triangle_free(graphs::clebsch()));
  CHECK_FALSE(is_maximal_triangle_free(graphs::path(5)));
  CHECK_THROWS_AS(is_maximal_triangle_free(graphs::complete(3)), NotTriangleFree);
}

TEST_CASE("is_maximal_triangle_free agrees with brute force") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : labeled_triangle_free(n))
      CHECK(is_maximal_triangle_free(g) == brute_maximal_triangle_free(g));
}

TEST_CASE("generate_mtf_ramsey examples") {
  CHECK(generate_mtf_ramsey(Pattern::near_complete(5), 11).graphs.empty());

  Census j6 = generate_mtf_ramsey(Pattern::near_complete(6), 16);
  CHECK(j6.complete);
  CHECK(j6.contains(canonical_form(graphs::clebsch())));

  // K_{2,3} qualifies as well: each 4-subset spans at least 3 edges.
  Census j4 = generate_mtf_ramsey(Pattern::near_complete(4), 5);
  Graph k23 = Graph::from_edges(
      5, std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  std::vector<CanonicalForm> expected{canonical_form(graphs::cycle(5)), canonical_form(k23)};
  std::sort(expected.begin(), expected.end());
  CHECK(j4.graphs == expected);

  CHECK_THROWS_AS(generate_mtf_ramsey(Pattern::near_complete(4), 0), InputError);
}

TEST_CASE("censuses equal the brute-force oracle for every pattern at n <= 7") {
  for (const Pattern& p : small_patterns()) {
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(p.name());
      CAPTURE(n);
      auto ramsey = [&](const Graph& g) { return !brute_contains(g, p); };
      auto mtf = [&](const Graph& g) {
        return brute_maximal_triangle_free(g) && !brute_contains(g, p);
      };
      CHECK(generate_mtf_ramsey(p, n).graphs == brute_census(n, mtf));
      SearchGuard guard;
      CHECK(enumerate_census(p, n, {}, guard).graphs == brute_census(n, ramsey));
    }
  }
}

TEST_CASE("vertex-extension levels equal mtf plus edge-removal closure") {
  for (int k : {5, 6}) {
    Pattern p = Pattern::near_complete(k);
    SearchGuard guard;
    auto levels = ramsey_levels(p, 4 * k - 6, {}, guard);
    for (int n = 1; n < static_cast<int>(levels.size()); ++n) {
      CAPTURE(k);
      CAPTURE(n);
      SearchGuard g2;
      CHECK(enumerate_census(p, n, {}, g2).graphs == levels[n].graphs);
    }
  }
}

TEST_CASE("edge_removal_closure examples") {
  Census c5 = edge_removal_closure({graphs::cycle(5)}, Pattern::near_complete(4));
  CHECK(c5.contains(canonical_form(graphs::path(5))));
  REQUIRE(c5.min_edges());
  CHECK(*c5.min_edges() == 4);
  for (const Graph& g : decode_all(c5)) CHECK(brute_ramsey(g, Pattern::near_complete(4)));

  CHECK_THROWS_AS(edge_removal_closure({graphs::empty(5)}, Pattern::near_complete(4)),
                  InputError);
}

TEST_CASE("J7 censuses match the published counts per edge count") {
  auto table = read_count_table(RAMSEY_DATA_DIR "/counts/J7.csv");
  REQUIRE(!table.empty());
  Pattern p = Pattern::near_complete(7);
  for (int n : {8, 9, 10}) {
    SearchGuard guard;
    Census c = enumerate_census(p, n, {}, guard);
    CAPTURE(n);
    CHECK(c.complete);
    std::map<int, std::size_t> expected;
    for (auto [key, count] : table)
      if (key.first == n) expected[key.second] = count;
    CHECK(c.counts_by_edges() == expected);
    if (n <= 9) {
      // Independent re-verification of every member.
      for (const Graph& g : decode_all(c)) CHECK(brute_ramsey(g, p));
    }
  }
  SearchGuard guard;
  Census c8 = enumerate_census(p, 8, {}, guard);
  CHECK(c8.size() == 392);
  CHECK(c8.counts_by_edges()[3] == 1);
  CHECK(c8.counts_by_edges()[4] == 6);
  CHECK(c8.counts_by_edges()[5] == 14);
}

TEST_CASE("enumerate_min_edges examples") {
  auto j5 = enumerate_min_edges(Pattern::near_complete(5), 10);
  CHECK(j5.bound.describe() == "Exact 15");
  CHECK(j5.complete);
  CHECK(!j5.witnesses.empty());
  for (const auto& w : j5.witnesses) CHECK(w.graph().edge_count() == 15);

  CHECK(enumerate_min_edges(Pattern::near_complete(6), 9).bound.describe() == "Exact 7");
  CHECK(enumerate_min_edges(Pattern::near_complete(4), 7).bound.is_infinite());

  auto clebsch = enumerate_min_edges(Pattern::near_complete(6), 16);
  CHECK(clebsch.bound.describe() == "Exact 40");
  REQUIRE(clebsch.witnesses.size() == 1);
  CHECK(clebsch.witnesses[0] == canonical_form(graphs::clebsch()));
}

TEST_CASE("small columns of the exact e(3,J_k,n) table") {
  const std::map<int, std::vector<int>> column = {
      // n = k, k+1, ...; -1 marks Infinite
      {3, {2, 4, -1}},
      {4, {2, 4, 6, -1}},
      {5, {2, 3, 6, 8, 12, 15, -1}},
      {6, {2, 3, 4, 7, 10, 14, 18, 24, 30, 35, 40, -1}},
  };
  for (auto& [k, values] : column) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      int n = k + static_cast<int>(i);
      CAPTURE(k);
      CAPTURE(n);
      Bound b = enumerate_min_edges(Pattern::near_complete(k), n).bound;
      if (values[i] < 0)
        CHECK(b.is_infinite());
      else
        CHECK(b.describe() == "Exact " + std::to_string(values[i]));
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  Pattern p = Pattern::near_complete(7);
  RunOptions many;
  many.workers = 4;
  SearchGuard g1, g4;
  CHECK(enumerate_census(p, 9, {}, g1).graphs == enumerate_census(p, 9, many, g4).graphs);
  CHECK(generate_mtf_ramsey(Pattern::near_complete(6), 13).graphs ==
        generate_mtf_ramsey(Pattern::near_complete(6), 13, many).graphs);
}

TEST_CASE("an exhausted budget marks results incomplete") {
  RunOptions tiny;
  tiny.budget.max_nodes = 50;
  Census c = generate_mtf_ramsey(Pattern::near_complete(7), 10, tiny);
  CHECK_FALSE(c.complete);
  auto m = enumerate_min_edges(Pattern::near_complete(7), 10, tiny);
  CHECK_FALSE(m.complete);
  CHECK_FALSE(m.bound.is_exact());
  CHECK_FALSE(m.bound.is_infinite());

  SearchGuard guard(tiny.budget);
  Census closure = edge_removal_closure({graphs::clebsch()}, Pattern::near_complete(6), {}, guard);
  CHECK(closure.complete);  // Clebsch has no removable edge within 50 nodes
}

TEST_CASE("edge windows restrict the closure output") {
  Pattern p = Pattern::near_complete(7);
  SearchGuard g1, g2;
  Census all = enumerate_census(p, 9, {}, g1);
  Census window = enumerate_census(p, 9, {}, g2, EdgeWindow{6, 8});
  std::map<int, std::size_t> expected;
  for (auto [e, count] : all.counts_by_edges())
    if (e >= 6 && e <= 8) expected[e] = count;
  CHECK(window.counts_by_edges() == expected);
}
