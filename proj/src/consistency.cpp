#include "ramsey/consistency.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/checks.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

using nlohmann::json;

json pattern_to_json(const Pattern& p) {
  if (!p.is_max_edges()) return {{"complement", encode_graph6(p.complement_graph())}};
  return {{"size", p.size()}, {"max_edges", p.max_edges()}};
}

Pattern pattern_from_json(const json& j) {
  if (j.contains("complement")) {
    return Pattern::explicit_complement(decode_graph6(j.at("complement").get<std::string>()));
  }
  return Pattern::max_edges(j.at("size").get<int>(), j.at("max_edges").get<int>());
}

std::set<CanonicalForm> form_set(const CensusSet& s) {
  std::set<CanonicalForm> out;
  for (const Graph& g : s.graphs) out.insert(canonical_form(g));
  return out;
}

SuiteResult fail(std::string suite, std::string detail, const Graph& g) {
  return {std::move(suite), false, std::move(detail), g};
}

// Runs the integrity check first so every suite rejects a damaged file.
std::optional<SuiteResult> integrity_gate(const std::string& suite, const CensusSet& s) {
  SuiteResult r = census_integrity(s);
  if (r.passed) return std::nullopt;
  r.suite = suite;
  r.detail = "integrity: " + r.detail;
  return r;
}

}  // namespace

CensusSet CensusSet::from_census(const Census& c, EdgeWindow window) {
  CensusSet s{c.pattern, c.order, window, c.complete, {}, std::nullopt, std::nullopt};
  for (const auto& f : c.graphs) {
    Graph g = f.graph();
    if (window.contains(g.edge_count())) s.graphs.push_back(std::move(g));
  }
  return s;
}

std::string census_digest(const std::vector<Graph>& graphs) {
  std::vector<CanonicalForm> forms;
  for (const Graph& g : graphs) forms.push_back(canonical_form(g));
  std::sort(forms.begin(), forms.end());
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const auto& f : forms) {
    for (char c : f.bytes()) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string write_census_set(const CensusSet& s, const std::string& stem) {
  namespace fs = std::filesystem;
  const std::string g6 = stem + ".g6";
  const std::string manifest = stem + ".json";
  write_graph6_file(g6, s.graphs);
  json j = {
      {"pattern", pattern_to_json(s.pattern)},
      {"order", s.order},
      {"edge_min", s.window.min},
      {"edge_max", s.window.max},
      {"complete", s.complete},
      {"count", s.graphs.size()},
      {"digest", census_digest(s.graphs)},
      {"graphs", fs::path(g6).filename().string()},
  };
  std::ofstream out(manifest);
  if (!out) throw InputError("cannot write manifest " + manifest);
  out << j.dump(2) << '\n';
  return manifest;
}

CensusSet read_census_set(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  std::ifstream in(manifest_path);
  if (!in) throw MalformedInput("cannot open manifest " + manifest_path);
  try {
    json j = json::parse(in);
    CensusSet s{pattern_from_json(j.at("pattern")), j.at("order").get<int>(),
                EdgeWindow{j.value("edge_min", 0), j.value("edge_max", EdgeWindow{}.max)},
                j.value("complete", true), {}, std::nullopt, std::nullopt};
    if (j.contains("count")) s.declared_count = j.at("count").get<std::size_t>();
    if (j.contains("digest")) s.declared_digest = j.at("digest").get<std::string>();
    fs::path g6 = fs::path(manifest_path).parent_path() / j.at("graphs").get<std::string>();
    s.graphs = read_graph6_file(g6.string());
    return s;
  } catch (const json::exception& e) {
    throw MalformedInput("manifest " + manifest_path + ": " + e.what());
  }
}

SuiteResult census_integrity(const CensusSet& s) {
  const std::string suite = "integrity";
  std::unordered_set<CanonicalForm> seen;
  for (const Graph& g : s.graphs) {
    if (g.order() != s.order) return fail(suite, "member of the wrong order", g);
    if (!s.window.contains(g.edge_count())) return fail(suite, "member outside the edge window", g);
    if (!is_ramsey_graph(g, s.pattern)) return fail(suite, "member is not a Ramsey graph", g);
    if (!seen.insert(canonical_form(g)).second) return fail(suite, "duplicate isomorphism class", g);
  }
  if (s.declared_count && *s.declared_count != s.graphs.size()) {
    return {suite, false,
            "manifest declares " + std::to_string(*s.declared_count) + " graphs, file holds " +
                std::to_string(s.graphs.size()),
            std::nullopt};
  }
  if (s.declared_digest && *s.declared_digest != census_digest(s.graphs))
    return {suite, false, "digest differs from the manifest", std::nullopt};
  return {suite, true, std::to_string(s.graphs.size()) + " members", std::nullopt};
}

SuiteResult verify_edge_minimal(const CensusSet& s) {
  const std::string suite = "edge-minimal";
  if (auto gate = integrity_gate(suite, s)) return *gate;
  for (const Graph& g : s.graphs) {
    for (int u = 0; u < g.order(); ++u) {
      for (Row later = g.neighbors(u) & ~bits::prefix(u + 1); later != 0; later &= later - 1) {
        const int v = bits::lowest(later);
        if (edge_removal_is_ramsey(g, u, v, s.pattern)) {
          return fail(suite,
                      "edge " + std::to_string(u) + "-" + std::to_string(v) + " can be dropped", g);
        }
      }
    }
  }
  return {suite, true, std::to_string(s.graphs.size()) + " members edge-minimal", std::nullopt};
}

SuiteResult verify_drop_add_closure(const CensusSet& lower, const CensusSet& upper, int f) {
  const std::string suite = "drop-add";
  if (auto gate = integrity_gate(suite, lower)) return *gate;
  if (auto gate = integrity_gate(suite, upper)) return *gate;
  if (!(lower.pattern == upper.pattern) || lower.order != upper.order)
    throw InputError("drop-add closure needs censuses of one pattern and order");
  const auto lower_forms = form_set(lower);
  const auto upper_forms = form_set(upper);

  // Adding edges keeps the complement pattern-free; only triangles matter.
  std::set<CanonicalForm> frontier(lower_forms.begin(), lower_forms.end());
  std::size_t reached = 0;
  for (int step = 1; step <= f && !frontier.empty(); ++step) {
    std::set<CanonicalForm> next;
    for (const auto& form : frontier) {
      Graph g = form.graph();
      for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
          if (g.adjacent(u, v) || (g.neighbors(u) & g.neighbors(v)) != 0) continue;
          Graph h = g;
          h.add_edge(u, v);
          CanonicalForm hf = canonical_form(h);
          if (!next.insert(hf).second) continue;
          if (!upper.window.contains(h.edge_count())) continue;
          ++reached;
          if (!upper_forms.count(hf)) return fail(suite, "edge addition leaves the upper census", h);
        }
      }
    }
    frontier = std::move(next);
  }

  for (const Graph& g : upper.graphs) {
    if (!lower.window.contains(g.edge_count() - 1)) continue;
    for (int u = 0; u < g.order(); ++u) {
      for (Row later = g.neighbors(u) & ~bits::prefix(u + 1); later != 0; later &= later - 1) {
        const int v = bits::lowest(later);
        if (!edge_removal_is_ramsey(g, u, v, upper.pattern)) continue;
        Graph h = g;
        h.remove_edge(u, v);
        if (!lower_forms.count(canonical_form(h)))
          return fail(suite, "edge deletion leaves the lower census", h);
      }
    }
  }
  return {suite, true, std::to_string(reached) + " additions checked", std::nullopt};
}

SuiteResult verify_descent(const CensusSet& s, const std::map<int, CensusSet>& subtables) {
  const std::string suite = "descent";
  if (auto gate = integrity_gate(suite, s)) return *gate;
  const Pattern lower = s.pattern.shrink();
  std::map<int, std::set<CanonicalForm>> forms;
  for (const auto& [order, table] : subtables) {
    if (!(table.pattern == lower)) throw InputError("descent table has the wrong pattern");
    if (auto gate = integrity_gate(suite, table)) return *gate;
    forms.emplace(order, form_set(table));
  }
  std::size_t checked = 0;
  for (const Graph& g : s.graphs) {
    for (int v = 0; v < g.order(); ++v) {
      Graph r = residual(g, v);
      auto it = subtables.find(r.order());
      if (it == subtables.end() || !it->second.complete)
        throw MissingCensus("no complete " + lower.name() + " census of order " +
                            std::to_string(r.order()));
      if (!it->second.window.contains(r.edge_count()))
        throw MissingCensus(lower.name() + " census of order " + std::to_string(r.order()) +
                            " does not cover " + std::to_string(r.edge_count()) + " edges");
      ++checked;
      if (!forms.at(r.order()).count(canonical_form(r)))
        return fail(suite, "residual of vertex " + std::to_string(v) + " is missing below", g);
    }
  }
  return {suite, true, std::to_string(checked) + " residuals found", std::nullopt};
}

}  // namespace ramsey
