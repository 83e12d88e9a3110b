#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

// A graph H avoided in the complement of a triangle-free graph G, expressed
// as a condition on k-subsets of V(G):
//   MaxEdges(t)            some k-subset spans at most t edges of G
//                          (t = 0 gives K_k, t = 1 gives J_k = K_k - e);
//   ExplicitComplement(F)  some k-subset maps bijectively onto V(F) with
//                          every induced G-edge landing on an F-edge.
class Pattern {
 public:
  enum class Shape { MaxEdges, ExplicitComplement };

  static Pattern max_edges(int size, int max_edges);
  static Pattern near_complete(int size) { return max_edges(size, 1); }  // J_k
  static Pattern complete(int size) { return max_edges(size, 0); }       // K_k
  static Pattern explicit_complement(Graph complement);

  // "J<k>", "K<k>", or "compl:<path.g6>" (first graph of the file).
  static Pattern parse(std::string_view text);

  int size() const { return size_; }
  Shape shape() const { return shape_; }
  bool is_max_edges() const { return shape_ == Shape::MaxEdges; }
  // Edge allowance t of a MaxEdges pattern.
  int max_edges() const { return max_edges_; }
  const Graph& complement_graph() const { return complement_; }

  // Same shape, one vertex smaller: the pattern avoided by every residual
  // of a Ramsey graph for this pattern. Defined for MaxEdges only.
  Pattern shrink() const;
  Pattern grow() const;

  // "J5", "K4", "E6t2" (MaxEdges(2) on 6 vertices), "compl:<graph6>".
  std::string name() const;

  bool operator==(const Pattern& other) const;

 private:
  Pattern() = default;

  Shape shape_ = Shape::MaxEdges;
  int size_ = 0;
  int max_edges_ = 0;
  Graph complement_;
};

}  // namespace ramsey
