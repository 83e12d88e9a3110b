#include <random>

#include "doctest.h"
#include "ramsey/checks.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "test_support.hpp"

using namespace ramsey;
using ramsey::testing::brute_contains;
using ramsey::testing::brute_triangle_free;

namespace {

Graph two_k2_plus_k1() { return Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("graph invariants and basic constructors") {
  Graph g = graphs::petersen();
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 15);
  for (int v = 0; v < 10; ++v) {
    CHECK(g.degree(v) == 3);
    CHECK_FALSE(g.adjacent(v, v));
    CHECK((g.neighbors(v) & ~g.vertex_mask()) == 0);
    for (int u = 0; u < 10; ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
  CHECK(graphs::clebsch().edge_count() == 40);
  CHECK_THROWS_AS(Graph(kMaxOrder + 1), OrderTooLarge);
}

TEST_CASE("is_triangle_free") {
  CHECK_FALSE(is_triangle_free(graphs::complete(3)));
  CHECK(is_triangle_free(graphs::cycle(5)));
  CHECK(is_triangle_free(graphs::petersen()));
  CHECK(is_triangle_free(graphs::clebsch()));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Graph g = ramsey::testing::random_graph(rng, 3 + i % 12, 0.25);
    CHECK(is_triangle_free(g) == brute_triangle_free(g));
  }
}

TEST_CASE("contains_pattern_in_complement examples") {
  CHECK(contains_pattern_in_complement(graphs::empty(4), Pattern::near_complete(4)));
  CHECK_FALSE(contains_pattern_in_complement(graphs::cycle(5), Pattern::near_complete(4)));
  CHECK_FALSE(contains_pattern_in_complement(two_k2_plus_k1(), Pattern::near_complete(5)));
  CHECK_THROWS_AS(contains_pattern_in_complement(graphs::cycle(5), Pattern::near_complete(6)),
                  PatternTooLarge);
}

TEST_CASE("pattern checks agree with subset enumeration") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 600; ++i) {
    int n = 4 + i % 9;
    Graph g = (i % 2 == 0) ? ramsey::testing::random_triangle_free(rng, n, 0.7)
                           : ramsey::testing::random_graph(rng, n, 0.35);
    int k = 2 + i % std::min(n - 1, 6);
    for (int t = 0; t <= 2; ++t) {
      Pattern p = Pattern::max_edges(k, t);
      CHECK_MESSAGE(contains_pattern_in_complement(g, p) == brute_contains(g, p),
                    encode_graph6(g) << " " << p.name());
    }
  }
}

TEST_CASE("explicit complement patterns") {
  // J_k is the explicit complement K_2 + (k-2)K_1.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    int n = 5 + i % 6;
    int k = 3 + i % 3;
    Graph g = ramsey::testing::random_triangle_free(rng, n, 0.8);
    Graph f(k);
    f.add_edge(0, 1);
    Pattern explicit_j = Pattern::explicit_complement(f);
    CHECK(contains_pattern_in_complement(g, explicit_j) ==
          contains_pattern_in_complement(g, Pattern::near_complete(k)));
  }
  // K_9 - 2K_2 in the complement: 2K_2 + 5K_1. Check on smaller relatives
  // against the permutation oracle.
  for (int i = 0; i < 200; ++i) {
    int n = 6 + i % 3;
    Graph g = ramsey::testing::random_triangle_free(rng, n, 0.8);
    Graph f = Graph::from_edges(6, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    Pattern p = Pattern::explicit_complement(f);
    CHECK(contains_pattern_in_complement(g, p) == brute_contains(g, p));
    Graph path3 = graphs::disjoint_union(graphs::path(3), graphs::empty(2));
    Pattern q = Pattern::explicit_complement(path3);
    CHECK(contains_pattern_in_complement(g, q) == brute_contains(g, q));
  }
}

TEST_CASE("is_ramsey_graph") {
  CHECK(is_ramsey_graph(graphs::cycle(5), Pattern::near_complete(4)));
  CHECK_FALSE(is_ramsey_graph(graphs::complete(3), Pattern::near_complete(4)));
  CHECK(is_ramsey_graph(graphs::clebsch(), Pattern::near_complete(6)));
  CHECK_FALSE(is_ramsey_graph(graphs::clebsch(), Pattern::near_complete(5)));
  // Fewer vertices than the pattern: only triangle-freeness matters.
  CHECK(is_ramsey_graph(graphs::empty(3), Pattern::near_complete(5)));
}

TEST_CASE("containment monotonicity K_k implies J_k") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    int n = 6 + i % 10;
    Graph g = ramsey::testing::random_triangle_free(rng, n, 0.6);
    int k = 3 + i % 4;
    if (contains_pattern_in_complement(g, Pattern::complete(k))) {
      CHECK(contains_pattern_in_complement(g, Pattern::near_complete(k)));
    }
  }
}

TEST_CASE("incremental extension and edge removal checks match full checks") {
  std::mt19937_64 rng(23);
  int exercised = 0;
  for (int i = 0; i < 3000 && exercised < 1200; ++i) {
    int n = 5 + i % 9;
    int k = 3 + i % 5;
    Pattern p = Pattern::max_edges(k, i % 3 == 0 ? 0 : 1);
    Graph g = ramsey::testing::random_triangle_free(rng, n, 0.9);
    if (!is_ramsey_graph(g, p)) continue;
    ++exercised;
    std::uniform_int_distribution<unsigned long long> pick(0, (1ULL << n) - 1);
    Row nb = static_cast<Row>(pick(rng));
    CHECK(extension_is_ramsey(g, nb, p) == is_ramsey_graph(g.with_vertex(nb), p));
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      h.remove_edge(u, v);
      CHECK(edge_removal_is_ramsey(g, u, v, p) == is_ramsey_graph(h, p));
    }
  }
  CHECK(exercised > 200);
}

TEST_CASE("residual") {
  Graph c5 = graphs::cycle(5);
  for (int v = 0; v < 5; ++v) {
    Graph r = residual(c5, v);
    CHECK(r.order() == 2);
    CHECK(r.edge_count() == 1);
  }
  CHECK(residual(graphs::star(4), 0).order() == 0);
  // survivors keep their relative order
  Graph p5 = graphs::path(5);
  Graph r = residual(p5, 0);
  CHECK(r == graphs::path(3));
}

TEST_CASE("residual of a Ramsey graph is Ramsey for the shrunk pattern") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 300; ++i) {
    int k = 4 + i % 3;
    Pattern p = Pattern::near_complete(k);
    Graph g = ramsey::testing::random_triangle_free(rng, 6 + i % 8, 0.9);
    if (!is_ramsey_graph(g, p)) continue;
    ++checked;
    for (int v = 0; v < g.order(); ++v) {
      Graph r = residual(g, v);
      CHECK(r.order() == g.order() - g.degree(v) - 1);
      CHECK(r.edge_count() == g.edge_count() - z_value(g, v));
      CHECK(is_ramsey_graph(r, p.shrink()));
    }
    CHECK(g.max_degree() <= k - 1);
    CHECK(g.edge_count() <= max_edge_bound(p, g.order()));
    for (int v = 0; v < g.order(); ++v) {
      CHECK(is_ramsey_graph(g.induced(g.vertex_mask() & ~bits::one(v)), p));
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("z_value and degree histogram") {
  for (int v = 0; v < 5; ++v) CHECK(z_value(graphs::cycle(5), v) == 4);
  for (int v = 0; v < 10; ++v) CHECK(z_value(graphs::petersen(), v) == 9);
  Graph star = graphs::star(4);
  CHECK(z_value(star, 0) == 4);
  CHECK(z_value(star, 1) == 4);
  CHECK(degree_histogram(graphs::cycle(5)) == DegreeHistogram{{2, 5}});
  CHECK(degree_histogram(star) == DegreeHistogram{{1, 4}, {4, 1}});
  CHECK(degree_histogram(graphs::clebsch()) == DegreeHistogram{{5, 16}});
  CHECK(degree_histogram(graphs::clebsch()).to_string() == "{n_5:16}");
}

TEST_CASE("max_edge_bound") {
  CHECK(max_edge_bound(Pattern::near_complete(10), 36) == 162);
  CHECK(max_edge_bound(Pattern::near_complete(11), 44) == 220);
  CHECK(max_edge_bound(Pattern::near_complete(3), 5) == 5);
}

TEST_CASE("graph6 format") {
  CHECK(encode_graph6(graphs::empty(5)) == "D??");
  CHECK(encode_graph6(graphs::complete(2)) == "A_");
  CHECK(decode_graph6("A_\n") == graphs::complete(2));
  CHECK(encode_graph6(graphs::petersen()) == "IheA@GUAo");
  CHECK_THROWS_AS(decode_graph6("D?"), MalformedInput);
  CHECK_THROWS_AS(decode_graph6("D?\x20"), MalformedInput);
  CHECK_THROWS_AS(decode_graph6(""), MalformedInput);
  CHECK_THROWS_AS(decode_graph6("A`"), MalformedInput);  // padding bit set
  // order 63 and above use the four-byte header
  Graph big = graphs::cycle(64);
  std::string line = encode_graph6(big);
  CHECK(line.substr(0, 4) == "~?@?");
  CHECK(decode_graph6(line) == big);
  if constexpr (kMaxOrder == 64) {
    CHECK_THROWS_AS(decode_graph6("~?@@"), OrderTooLarge);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    int n = i % 33;
    Graph g = ramsey::testing::random_graph(rng, n, density(rng));
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}
