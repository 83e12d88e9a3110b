#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/budget.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// Circulant on Z_n: i ~ j iff the cyclic distance between them lies in D.
struct CirculantSpec {
  int order = 0;
  std::vector<int> distances;  // sorted, distinct, each in 1..n/2

  // Throws InputError unless the invariants above hold.
  void validate() const;
  int degree() const;

  // "n: d1,d2,..."
  std::string to_string() const;
  static CirculantSpec parse(std::string_view text);

  auto operator<=>(const CirculantSpec&) const = default;
};

Graph build_circulant(const CirculantSpec& spec);

// Sum condition: no a, b, c in +-D with a + b + c = 0 mod n.
bool circulant_triangle_free(const CirculantSpec& spec);

// The distance set u*D for a unit u mod n, folded back into 1..n/2.
CirculantSpec multiply(const CirculantSpec& spec, int unit);

// True when spec is the lexicographically least set in its multiplier orbit.
bool is_orbit_minimal(const CirculantSpec& spec);

// Ramsey check that uses vertex-transitivity: every bad subset can be
// rotated to contain vertex 0.
bool verify_witness(const CirculantSpec& spec, const Pattern& p);

struct CirculantSearchResult {
  std::vector<CirculantSpec> witnesses;  // orbit-minimal, sorted
  bool complete = true;
  std::uint64_t nodes = 0;
};

// All orbit-minimal nonempty distance sets on n vertices whose circulant is
// a Ramsey graph for p.
CirculantSearchResult search_circulants(int n, const Pattern& p, const RunOptions& opts = {});

// graph6 line preceded by a "# " note line naming the spec and pattern.
void write_witness(std::ostream& out, const CirculantSpec& spec, const Pattern& p);

}  // namespace ramsey
