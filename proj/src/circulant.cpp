#include "ramsey/circulant.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <ostream>

#include "ramsey/checks.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

int fold(long long x, int n) {
  int r = static_cast<int>(((x % n) + n) % n);
  return std::min(r, n - r);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = strip(s);
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
    throw MalformedInput("bad integer '" + std::string(s) + "' in circulant spec");
  return v;
}

}  // namespace

void CirculantSpec::validate() const {
  if (order < 1) throw InputError("circulant order must be positive");
  if (order > kMaxOrder) {
    throw OrderTooLarge("circulant order " + std::to_string(order) + " exceeds the build cap of " +
                        std::to_string(kMaxOrder));
  }
  for (std::size_t i = 0; i < distances.size(); ++i) {
    int d = distances[i];
    if (d < 1 || 2 * d > order)
      throw InputError("distance " + std::to_string(d) + " outside 1.." + std::to_string(order / 2));
    if (i > 0 && distances[i - 1] >= d) throw InputError("distances must be distinct and sorted");
  }
}

int CirculantSpec::degree() const {
  int deg = 0;
  for (int d : distances) deg += 2 * d == order ? 1 : 2;
  return deg;
}

std::string CirculantSpec::to_string() const {
  std::string s = std::to_string(order) + ":";
  for (std::size_t i = 0; i < distances.size(); ++i)
    s += (i ? "," : " ") + std::to_string(distances[i]);
  return s;
}

CirculantSpec CirculantSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw MalformedInput("circulant spec needs 'n: d1,d2,...'");
  CirculantSpec spec;
  spec.order = parse_int(text.substr(0, colon));
  std::string_view rest = strip(text.substr(colon + 1));
  while (!rest.empty()) {
    auto comma = rest.find(',');
    spec.distances.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::sort(spec.distances.begin(), spec.distances.end());
  try {
    spec.validate();
  } catch (const OrderTooLarge&) {
    throw;
  } catch (const InputError& e) {
    throw MalformedInput(e.what());
  }
  return spec;
}

Graph build_circulant(const CirculantSpec& spec) {
  spec.validate();
  const int n = spec.order;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int d : spec.distances) {
      int j = (i + d) % n;
      if (2 * d == n && j < i) continue;
      edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

bool circulant_triangle_free(const CirculantSpec& spec) {
  const int n = spec.order;
  std::vector<char> in(n, 0);
  for (int d : spec.distances) in[d % n] = in[(n - d) % n] = 1;
  // A triangle 0, a, a+b exists iff a, b and a+b all lie in +-D.
  for (int a = 1; a < n; ++a) {
    if (!in[a]) continue;
    for (int b = 1; b < n; ++b)
      if (in[b] && in[(a + b) % n]) return false;
  }
  return true;
}

CirculantSpec multiply(const CirculantSpec& spec, int unit) {
  CirculantSpec out{spec.order, {}};
  for (int d : spec.distances) out.distances.push_back(fold(static_cast<long long>(d) * unit, spec.order));
  std::sort(out.distances.begin(), out.distances.end());
  return out;
}

bool is_orbit_minimal(const CirculantSpec& spec) {
  const int n = spec.order;
  for (int u = 2; 2 * u <= n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    if (multiply(spec, u).distances < spec.distances) return false;
  }
  return true;
}

bool verify_witness(const CirculantSpec& spec, const Pattern& p) {
  Graph g = build_circulant(spec);
  if (!circulant_triangle_free(spec)) return false;
  if (p.size() > g.order()) return true;
  if (!p.is_max_edges()) return is_ramsey_graph(g, p);
  VertexCosts costs{};
  bits::for_each(g.neighbors(0), [&](int v) { costs[v] = 1; });
  return !has_sparse_subset(g, g.vertex_mask() & ~bits::one(0), costs, p.size() - 1,
                            p.max_edges());
}

namespace {

// Depth-first over increasing distance sets. Triangle-freeness and the
// degree cap are both inherited by subsets, so a failing prefix is pruned.
struct CirculantSearch {
  int n;
  const Pattern& pattern;
  int degree_cap;
  SearchGuard& guard;
  std::vector<CirculantSpec> found;

  bool extend(CirculantSpec& spec, int next) {
    if (!guard.charge()) return false;
    if (is_orbit_minimal(spec) && verify_witness(spec, pattern)) found.push_back(spec);
    for (int d = next; 2 * d <= n; ++d) {
      spec.distances.push_back(d);
      if (spec.degree() <= degree_cap && circulant_triangle_free(spec)) {
        if (!extend(spec, d + 1)) return false;
      }
      spec.distances.pop_back();
    }
    return true;
  }
};

}  // namespace

CirculantSearchResult search_circulants(int n, const Pattern& p, const RunOptions& opts) {
  CirculantSpec{n, {}}.validate();
  CirculantSearchResult result;
  SearchGuard guard(opts.budget);
  std::mutex lock;
  // A neighbourhood is independent, so the degree stays below the pattern size.
  const int cap = p.size() - 1;
  parallel_for(static_cast<std::size_t>(n / 2), opts.workers, [&](std::size_t i) {
    const int first = static_cast<int>(i) + 1;
    CirculantSpec spec{n, {first}};
    if (spec.degree() > cap || !circulant_triangle_free(spec)) return;
    CirculantSearch search{n, p, cap, guard, {}};
    bool done = search.extend(spec, first + 1);
    std::lock_guard hold(lock);
    if (!done) result.complete = false;
    result.witnesses.insert(result.witnesses.end(), search.found.begin(), search.found.end());
  });
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.nodes = guard.nodes();
  if (guard.exhausted()) result.complete = false;
  return result;
}

void write_witness(std::ostream& out, const CirculantSpec& spec, const Pattern& p) {
  out << "# circulant " << spec.to_string() << ", (3," << p.name() << ";" << spec.order
      << ")-graph, R(3," << p.name() << ") >= " << spec.order + 1 << '\n';
  out << encode_graph6(build_circulant(spec)) << '\n';
}

}  // namespace ramsey
