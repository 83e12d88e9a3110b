// Command-line front end: one subcommand per job, each leaving a JSON
// manifest (config, counts, completeness, wall time) beside its outputs.
//
// Exit codes: 0 success, 2 incomplete (budget), 3 invalid input,
// 4 consistency or verification failure.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/checks.hpp"
#include "ramsey/circulant.hpp"
#include "ramsey/consistency.hpp"
#include "ramsey/enumeration.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/etable.hpp"
#include "ramsey/feasibility.hpp"
#include "ramsey/gluer.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/propagation.hpp"

#ifndef RAMSEY_VERSION
#define RAMSEY_VERSION "0.0.0"
#endif

using namespace ramsey;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kIncomplete = 2;
constexpr int kInvalid = 3;
constexpr int kInconsistent = 4;

// Rows K-1 of the published ledgers lean on the small exact table, so a
// t2.ledger beside the first table is merged underneath unless disabled.
bool g_base_table = true;

struct Common {
  int workers = 1;
  bool deterministic = false;
  std::uint64_t max_nodes = 0;
  long long max_seconds = 0;
  std::string manifest;
  bool no_manifest = false;
  bool json_output = false;
};

struct Job {
  std::string subcommand;
  json config = json::object();
  json result = json::object();
  bool complete = true;
  std::vector<std::string> outputs;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--deterministic", c.deterministic, "Force one worker for reproducible runs");
  app->add_option("--max-nodes", c.max_nodes, "Search node budget (default: RAMSEY_MAX_NODES)")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-seconds", c.max_seconds, "Wall-time budget (default: RAMSEY_MAX_SECONDS)")
      ->check(CLI::PositiveNumber);
  app->add_option("--manifest", c.manifest, "Manifest path (default: <out>.manifest.json or ramsey-<cmd>.manifest.json)");
  app->add_flag("--no-manifest", c.no_manifest, "Skip writing the manifest");
  app->add_flag("--json", c.json_output, "Print the result object as JSON");
}

void add_table_flags(CLI::App* app) {
  app->add_flag("!--no-base-table", g_base_table, "Do not merge the t2.ledger found beside --table");
}

RunOptions run_options(const Common& c) {
  RunOptions opts;
  opts.workers = c.deterministic ? 1 : c.workers;
  opts.budget = ResourceBudget::from_environment();
  if (c.max_nodes > 0) opts.budget.max_nodes = c.max_nodes;
  if (c.max_seconds > 0) opts.budget.max_time = std::chrono::seconds(c.max_seconds);
  return opts;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Pattern parse_pattern(const std::string& text) { return Pattern::parse(text); }

ETable load_tables(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  ETable t;
  if (g_base_table && !paths.empty()) {
    fs::path base = fs::path(paths.front()).parent_path() / "t2.ledger";
    bool listed = false;
    for (const auto& p : paths) listed = listed || fs::path(p).filename() == "t2.ledger";
    if (!listed && fs::exists(base)) t.merge(ETable::read_file(base.string()));
  }
  for (const auto& p : paths) t.merge(ETable::read_file(p));
  return t;
}

FeasibilityOptions feasibility_options(const std::string& missing, std::vector<std::string>* log) {
  FeasibilityOptions f;
  if (missing == "closed-form") {
    f.policy = MissingEntryPolicy::ClosedForm;
    f.fallback_log = log;
  }
  return f;
}

json histogram_json(const DegreeHistogram& h) {
  json j = json::object();
  for (int d = 0; d <= h.max_degree(); ++d)
    if (h.count(d)) j["n_" + std::to_string(d)] = h.count(d);
  return j;
}

json bound_json(const Bound& b) {
  json j = {{"kind", std::string(to_string(b.kind))},
            {"provenance", std::string(to_string(b.provenance))},
            {"text", b.describe()}};
  if (!b.is_infinite()) j["value"] = b.value;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json counts_json(const std::map<int, std::size_t>& counts) {
  json j = json::object();
  for (auto [e, c] : counts) j[std::to_string(e)] = c;
  return j;
}

EdgeWindow window_of(int emin, int emax) {
  EdgeWindow w;
  if (emin >= 0) w.min = emin;
  if (emax >= 0) w.max = emax;
  return w;
}

void print_counts(const Census& c) {
  for (auto [e, count] : c.counts_by_edges()) std::cout << "  e=" << e << ": " << count << '\n';
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string pattern;
  int n = 0;
  int emin = -1, emax = -1;
  bool mtf_only = false;
  std::string out;
};

int run_enumerate(const EnumerateArgs& a, const RunOptions& opts, Job& job) {
  Pattern p = parse_pattern(a.pattern);
  EdgeWindow w = window_of(a.emin, a.emax);
  SearchGuard guard(opts.budget);
  // Order 0 holds only the empty graph; descent tables start there.
  Census c = a.n == 0 && !a.mtf_only ? ramsey_levels(p, 0, opts, guard).front()
             : a.mtf_only            ? generate_mtf_ramsey(p, a.n, opts, guard)
                                     : enumerate_census(p, a.n, opts, guard, w);
  job.complete = c.complete;
  std::cout << (a.mtf_only ? "maximal " : "") << "(3," << p.name() << ";" << a.n
            << ")-graphs: " << c.size() << (c.complete ? "" : " (incomplete)") << '\n';
  print_counts(c);
  if (auto m = c.min_edges()) std::cout << "min edges: " << *m << '\n';
  job.result = {{"total", c.size()}, {"counts_by_edges", counts_json(c.counts_by_edges())},
                {"nodes", c.nodes}};
  if (!a.out.empty()) {
    CensusSet s = CensusSet::from_census(c, a.mtf_only ? EdgeWindow{} : w);
    job.outputs.push_back(write_census_set(s, a.out));
    job.outputs.push_back(a.out + ".g6");
  }
  return c.complete ? kOk : kIncomplete;
}

struct MinEdgesArgs {
  std::string pattern;
  int n = 0;
  std::string out;
};

int run_min_edges(const MinEdgesArgs& a, const RunOptions& opts, Job& job) {
  Pattern p = parse_pattern(a.pattern);
  MinEdgesResult r = enumerate_min_edges(p, a.n, opts);
  job.complete = r.complete;
  std::cout << "e(3," << p.name() << "," << a.n << ") = " << r.bound.describe()
            << (r.complete ? "" : " (incomplete)") << '\n';
  if (!r.witnesses.empty()) std::cout << "witnesses: " << r.witnesses.size() << '\n';
  job.result = {{"bound", bound_json(r.bound)}, {"witnesses", r.witnesses.size()}, {"nodes", r.nodes}};
  if (!a.out.empty()) {
    std::vector<Graph> gs;
    for (const auto& f : r.witnesses) gs.push_back(f.graph());
    write_graph6_file(a.out + ".g6", gs);
    job.outputs.push_back(a.out + ".g6");
  }
  return r.complete ? kOk : kIncomplete;
}

struct GlueArgs {
  std::string pattern;
  int n = 0;
  int emin = -1, emax = -1;
  std::string anchor = "min-degree";
  std::string out;
};

int run_glue(const GlueArgs& a, const RunOptions& opts, Job& job) {
  Pattern p = parse_pattern(a.pattern);
  if (a.n < 1) throw InputError("--n must be positive");
  SearchGuard guard(opts.budget);
  std::map<int, Census> hosts;
  for (auto& c : ramsey_levels(p.shrink(), a.n - 1, opts, guard)) hosts.emplace(c.order, c);
  GlueOptions g = census_glue_options();
  if (a.anchor == "any") g.anchor = GlueAnchor::Any;
  else if (a.anchor == "max-degree") g.anchor = GlueAnchor::MaxDegree;
  Census c = glue_census(p, a.n, hosts, window_of(a.emin, a.emax), opts, guard, g);
  for (const auto& [order, h] : hosts) c.complete = c.complete && h.complete;
  job.complete = c.complete;
  std::cout << "glued (3," << p.name() << ";" << a.n << ")-graphs: " << c.size()
            << (c.complete ? "" : " (incomplete)") << '\n';
  print_counts(c);
  job.result = {{"total", c.size()}, {"counts_by_edges", counts_json(c.counts_by_edges())},
                {"nodes", guard.nodes()}};
  if (!a.out.empty()) {
    job.outputs.push_back(write_census_set(CensusSet::from_census(c, window_of(a.emin, a.emax)), a.out));
    job.outputs.push_back(a.out + ".g6");
  }
  return c.complete ? kOk : kIncomplete;
}

struct TableArgs {
  std::string pattern;
  int n = 0;
  int e = -1;
  std::vector<std::string> tables;
  std::string missing = "error";
  std::string level = "per-vertex";
};

int pattern_size(const std::string& text) {
  Pattern p = parse_pattern(text);
  if (!p.is_max_edges() || p.max_edges() != 1)
    throw UnsupportedPattern("feasibility works with J<k> patterns only");
  return p.size();
}

void report_fallbacks(const std::vector<std::string>& log, Job& job) {
  for (const auto& line : log) std::cerr << "note: " << line << '\n';
  if (!log.empty()) job.result["closed_form_fallbacks"] = log;
}

int run_feasible(const TableArgs& a, Job& job) {
  const int k = pattern_size(a.pattern);
  ETable t = load_tables(a.tables);
  std::vector<std::string> log;
  FeasibilityOptions f = feasibility_options(a.missing, &log);
  json list = json::array();
  auto seqs = feasible_degree_sequences(k, a.n, a.e, t, f);
  std::cout << "feasible degree sequences for (3,J" << k << ";" << a.n << "," << a.e
            << "): " << seqs.size() << '\n';
  for (const auto& h : seqs) {
    bool survives = refine_per_vertex(h, a.e, k, t, f);
    std::cout << "  " << h.to_string() << "  gamma(G)=" << deficiency_graph(h, t, k, f)
              << (survives ? "" : "  rejected per vertex") << '\n';
    list.push_back({{"histogram", histogram_json(h)},
                    {"gamma", deficiency_graph(h, t, k, f)},
                    {"per_vertex", survives}});
  }
  job.result = {{"sequences", list}};
  report_fallbacks(log, job);
  return kOk;
}

int run_bound(const TableArgs& a, Job& job) {
  const int k = pattern_size(a.pattern);
  ETable t = load_tables(a.tables);
  std::vector<std::string> log;
  FeasibilityOptions f = feasibility_options(a.missing, &log);
  Refinement level = a.level == "histogram" ? Refinement::Histogram : Refinement::PerVertex;
  LowerBoundReport r = analyze_lower_bound(k, a.n, t, level, f);
  std::cout << "e(3,J" << k << "," << a.n << ") " << r.bound.describe();
  if (!r.bound.note.empty()) std::cout << "  (" << r.bound.note << ")";
  std::cout << '\n';
  json survivors = json::array();
  for (const auto& h : r.survivors) survivors.push_back(histogram_json(h));
  job.result = {{"bound", bound_json(r.bound)}, {"survivors", survivors}};
  if (r.histogram_e) job.result["histogram_e"] = *r.histogram_e;
  if (r.per_vertex_e) job.result["per_vertex_e"] = *r.per_vertex_e;
  report_fallbacks(log, job);
  return kOk;
}

struct PropagateArgs {
  std::string pattern;
  std::vector<std::string> tables;
  int n_min = 0, n_max = 0;
  std::string missing = "error";
  std::string out;
};

int run_propagate(const PropagateArgs& a, Job& job) {
  const int k = pattern_size(a.pattern);
  ETable t = load_tables(a.tables);
  std::vector<std::string> log;
  PropagateOptions o;
  o.n_min = a.n_min;
  o.n_max = a.n_max;
  o.feasibility = feasibility_options(a.missing, &log);
  std::vector<PropagatedCell> cells;
  ETable out = propagate(t, k, o, &cells);
  json rows = json::array();
  for (const auto& c : cells) {
    std::cout << "  n=" << std::setw(3) << c.n << "  derived " << std::setw(12) << std::left
              << c.derived.describe() << std::right << "  stored " << c.stored.describe() << '\n';
    rows.push_back({{"n", c.n}, {"derived", bound_json(c.derived)}, {"stored", bound_json(c.stored)}});
  }
  if (auto r = out.ramsey_upper(k)) std::cout << "R(3,J" << k << ") <= " << *r << '\n';
  job.result = {{"cells", rows}};
  if (auto r = out.ramsey_upper(k)) job.result["ramsey_upper"] = *r;
  if (!a.out.empty()) {
    out.write_file(a.out);
    job.outputs.push_back(a.out);
  }
  report_fallbacks(log, job);
  return kOk;
}

int run_ramsey_upper(const std::string& pattern, const std::vector<std::string>& tables, Job& job) {
  const int k = pattern_size(pattern);
  ETable t = load_tables(tables);
  auto violations = t.invariant_violations();
  for (const auto& v : violations) std::cerr << "warning: " << v << '\n';
  auto r = t.ramsey_upper(k);
  if (r) std::cout << "R(3,J" << k << ") <= " << *r << '\n';
  else std::cout << "R(3,J" << k << "): no Infinite entry in the tables\n";
  job.result = {{"ramsey_upper", r ? json(*r) : json(nullptr)}, {"violations", violations}};
  return kOk;
}

struct CirculantArgs {
  int n = 0;
  std::string dist;
  std::string spec;
  std::string pattern;
  std::string out;
};

CirculantSpec circulant_spec(const CirculantArgs& a) {
  if (!a.spec.empty()) return CirculantSpec::parse(a.spec);
  return CirculantSpec::parse(std::to_string(a.n) + ": " + a.dist);
}

int run_circulant_verify(const CirculantArgs& a, Job& job) {
  CirculantSpec s = circulant_spec(a);
  Pattern p = parse_pattern(a.pattern);
  bool ok = verify_witness(s, p);
  Graph g = build_circulant(s);
  job.result = {{"spec", s.to_string()}, {"witness", ok}, {"edges", g.edge_count()},
                {"degree", s.degree()}};
  if (!ok) {
    std::cout << "not a witness: circulant " << s.to_string() << " is not a (3," << p.name()
              << ";" << s.order << ")-graph\n";
    return kInconsistent;
  }
  std::cout << "witness confirmed: circulant " << s.to_string() << " is a (3," << p.name() << ";"
            << s.order << ")-graph, R(3," << p.name() << ") >= " << s.order + 1 << '\n';
  job.result["ramsey_lower"] = s.order + 1;
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    write_witness(out, s, p);
    job.outputs.push_back(a.out);
  }
  return kOk;
}

int run_circulant_search(const CirculantArgs& a, const RunOptions& opts, Job& job) {
  Pattern p = parse_pattern(a.pattern);
  CirculantSearchResult r = search_circulants(a.n, p, opts);
  job.complete = r.complete;
  std::cout << "circulant (3," << p.name() << ";" << a.n << ")-graphs up to multipliers: "
            << r.witnesses.size() << (r.complete ? "" : " (incomplete)") << '\n';
  json specs = json::array();
  for (const auto& s : r.witnesses) {
    std::cout << "  " << s.to_string() << '\n';
    specs.push_back(s.to_string());
  }
  job.result = {{"witnesses", specs}, {"nodes", r.nodes}};
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    for (const auto& s : r.witnesses) write_witness(out, s, p);
    job.outputs.push_back(a.out);
  }
  return r.complete ? kOk : kIncomplete;
}

struct VerifyArgs {
  std::string suite;
  std::string census;
  std::string lower;
  std::vector<std::string> sub;
  int f = 1;
};

int run_verify(const VerifyArgs& a, Job& job) {
  CensusSet s = read_census_set(a.census);
  SuiteResult r;
  if (a.suite == "integrity") {
    r = census_integrity(s);
  } else if (a.suite == "edge-minimal") {
    r = verify_edge_minimal(s);
  } else if (a.suite == "drop-add") {
    if (a.lower.empty()) throw InputError("drop-add needs --lower");
    r = verify_drop_add_closure(read_census_set(a.lower), s, a.f);
  } else {
    std::map<int, CensusSet> sub;
    for (const auto& path : a.sub) {
      CensusSet t = read_census_set(path);
      int order = t.order;
      sub.emplace(order, std::move(t));
    }
    r = verify_descent(s, sub);
  }
  std::cout << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
  job.result = {{"suite", r.suite}, {"passed", r.passed}, {"detail", r.detail}};
  if (r.counterexample) {
    std::string g6 = encode_graph6(*r.counterexample);
    std::cout << "counterexample: " << g6 << '\n';
    job.result["counterexample"] = g6;
  }
  return r.passed ? kOk : kInconsistent;
}

struct GraphFileArgs {
  std::string in;
  std::string out;
  std::string from = "g6";
  std::string to = "g6";
  bool dedup = false;
};

std::vector<Graph> read_edge_lists(std::istream& in) {
  // Blocks of "n" followed by "u v" lines; blank lines separate graphs.
  std::vector<Graph> out;
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  auto flush = [&] {
    if (n >= 0) out.push_back(Graph::from_edges(n, edges));
    n = -1;
    edges.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a)) {
      flush();
      continue;
    }
    if (n < 0) {
      n = a;
    } else if (ls >> b) {
      edges.emplace_back(a, b);
    } else {
      throw MalformedInput("edge list line needs two vertices: '" + line + "'");
    }
  }
  flush();
  return out;
}

void write_edge_lists(std::ostream& out, const std::vector<Graph>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) out << '\n';
    out << gs[i].order() << '\n';
    for (int u = 0; u < gs[i].order(); ++u)
      for (int v = u + 1; v < gs[i].order(); ++v)
        if (gs[i].adjacent(u, v)) out << u << ' ' << v << '\n';
  }
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  if (format == "edges") return read_edge_lists(in);
  // graph6, skipping "# ..." note lines.
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

void write_graphs(const std::string& path, const std::string& format, const std::vector<Graph>& gs) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw InputError("cannot write " + path);
  }
  std::ostream& out = path.empty() ? std::cout : file;
  if (format == "edges") write_edge_lists(out, gs);
  else write_graph6(out, gs);
}

int run_canon(const GraphFileArgs& a, Job& job) {
  auto gs = read_graphs(a.in, a.from);
  std::vector<CanonicalForm> forms;
  for (const Graph& g : gs) forms.push_back(canonical_form(g));
  if (a.dedup) {
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  }
  std::vector<Graph> out;
  for (const auto& f : forms) out.push_back(f.graph());
  write_graphs(a.out, "g6", out);
  job.result = {{"read", gs.size()}, {"written", out.size()}};
  if (!a.out.empty()) job.outputs.push_back(a.out);
  return kOk;
}

int run_convert(const GraphFileArgs& a, Job& job) {
  auto gs = read_graphs(a.in, a.from);
  write_graphs(a.out, a.to, gs);
  job.result = {{"graphs", gs.size()}};
  if (!a.out.empty()) job.outputs.push_back(a.out);
  return kOk;
}

void write_manifest(const Common& c, const Job& job, const std::string& default_stem, int code,
                    double seconds, const std::string& started, const RunOptions& opts) {
  if (c.no_manifest) return;
  std::string path = c.manifest;
  if (path.empty()) {
    path = default_stem.empty() ? "ramsey-" + job.subcommand + ".manifest.json"
                                : default_stem + ".manifest.json";
  }
  json m = {
      {"tool", "ramsey"},
      {"version", RAMSEY_VERSION},
      {"subcommand", job.subcommand},
      {"config", job.config},
      {"workers", opts.workers},
      {"deterministic", c.deterministic},
      {"budget", {{"max_nodes", opts.budget.max_nodes}, {"max_seconds", opts.budget.max_time.count()}}},
      {"complete", job.complete},
      {"exit_code", code},
      {"result", job.result},
      {"outputs", job.outputs},
      {"started_at", started},
      {"wall_seconds", seconds},
  };
  std::ofstream out(path);
  if (!out) {
    std::cerr << "warning: cannot write manifest " << path << '\n';
    return;
  }
  out << m.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-free Ramsey graph tools: censuses, gluing, feasibility bounds, circulants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RAMSEY_VERSION);
  Common common;
  Job job;

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Census of (3,H;n)-graphs by mtf generation and edge removal");
  enumerate->add_option("--pattern", en.pattern, "J<k>, K<k> or compl:<file.g6>")->required();
  enumerate->add_option("--n", en.n, "Order")->required();
  enumerate->add_option("--emin", en.emin, "Least edge count kept");
  enumerate->add_option("--emax", en.emax, "Largest edge count kept");
  enumerate->add_flag("--mtf-only", en.mtf_only, "Only maximal triangle-free graphs");
  enumerate->add_option("--out", en.out, "Output stem: writes <out>.g6 and <out>.json");

  MinEdgesArgs me;
  auto* min_edges = app.add_subcommand("min-edges", "Exact e(3,H,n) by enumeration");
  min_edges->add_option("--pattern", me.pattern)->required();
  min_edges->add_option("--n", me.n)->required();
  min_edges->add_option("--out", me.out, "Output stem for the witnesses (<out>.g6)");

  GlueArgs gl;
  auto* glue = app.add_subcommand("glue", "Census by gluing a vertex onto every residual host");
  glue->add_option("--pattern", gl.pattern)->required();
  glue->add_option("--n", gl.n)->required();
  glue->add_option("--emin", gl.emin);
  glue->add_option("--emax", gl.emax);
  glue->add_option("--anchor", gl.anchor, "min-degree, max-degree or any")
      ->check(CLI::IsMember({"min-degree", "max-degree", "any"}));
  glue->add_option("--out", gl.out);

  TableArgs fe;
  auto* feasible = app.add_subcommand("feasible", "Degree histograms passing the deficiency test");
  feasible->add_option("--pattern", fe.pattern)->required();
  feasible->add_option("--n", fe.n)->required();
  feasible->add_option("--e", fe.e)->required();
  feasible->add_option("--table", fe.tables, "Ledger file (repeatable)")->required();
  feasible->add_option("--missing", fe.missing, "error or closed-form")
      ->check(CLI::IsMember({"error", "closed-form"}));

  TableArgs bo;
  auto* bound = app.add_subcommand("bound", "Lower bound on e(3,J_k,n) from the degree-sequence test");
  bound->add_option("--pattern", bo.pattern)->required();
  bound->add_option("--n", bo.n)->required();
  bound->add_option("--table", bo.tables)->required();
  bound->add_option("--missing", bo.missing)->check(CLI::IsMember({"error", "closed-form"}));
  bound->add_option("--level", bo.level)->check(CLI::IsMember({"histogram", "per-vertex"}));

  PropagateArgs pr;
  auto* propagate_cmd = app.add_subcommand("propagate", "Fill row K of the table from row K-1");
  propagate_cmd->add_option("--pattern", pr.pattern)->required();
  propagate_cmd->add_option("--table", pr.tables)->required();
  propagate_cmd->add_option("--n-min", pr.n_min);
  propagate_cmd->add_option("--n-max", pr.n_max);
  propagate_cmd->add_option("--missing", pr.missing)->check(CLI::IsMember({"error", "closed-form"}));
  propagate_cmd->add_option("--out", pr.out, "Write the merged ledger here");

  std::string ru_pattern;
  std::vector<std::string> ru_tables;
  auto* ramsey_upper = app.add_subcommand("ramsey-upper", "Upper bound on R(3,J_k) from the first Infinite entry");
  ramsey_upper->add_option("--pattern", ru_pattern)->required();
  ramsey_upper->add_option("--table", ru_tables)->required();

  CirculantArgs cv;
  auto* circ_verify = app.add_subcommand("circulant-verify", "Check a circulant Ramsey witness");
  circ_verify->add_option("--n", cv.n);
  circ_verify->add_option("--dist", cv.dist, "Comma-separated distances");
  circ_verify->add_option("--spec", cv.spec, "\"n: d1,d2,...\"");
  circ_verify->add_option("--pattern", cv.pattern)->required();
  circ_verify->add_option("--out", cv.out, "Write the witness (note line + graph6)");

  CirculantArgs cs;
  auto* circ_search = app.add_subcommand("circulant-search", "All circulant witnesses of one order");
  circ_search->add_option("--n", cs.n)->required();
  circ_search->add_option("--pattern", cs.pattern)->required();
  circ_search->add_option("--out", cs.out);

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Consistency suites over census files");
  verify->add_option("--suite", ve.suite)
      ->required()
      ->check(CLI::IsMember({"integrity", "edge-minimal", "drop-add", "descent"}));
  verify->add_option("--census", ve.census, "Census manifest")->required();
  verify->add_option("--lower", ve.lower, "Lower-window census manifest (drop-add)");
  verify->add_option("--f", ve.f, "Edges added (drop-add)");
  verify->add_option("--sub", ve.sub, "Census manifests for the shrunk pattern (descent)");

  GraphFileArgs ca;
  auto* canon = app.add_subcommand("canon", "Canonical graph6 forms");
  canon->add_option("--in", ca.in)->required();
  canon->add_option("--out", ca.out, "Output file (default stdout)");
  canon->add_option("--from", ca.from)->check(CLI::IsMember({"g6", "edges"}));
  canon->add_flag("--dedup", ca.dedup, "Keep one graph per isomorphism class");

  GraphFileArgs co;
  auto* convert = app.add_subcommand("convert", "Convert between graph6 and edge lists");
  convert->add_option("--in", co.in)->required();
  convert->add_option("--out", co.out);
  convert->add_option("--from", co.from)->check(CLI::IsMember({"g6", "edges"}));
  convert->add_option("--to", co.to)->check(CLI::IsMember({"g6", "edges"}));

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_common(sub, common);
  for (auto* sub : {feasible, bound, propagate_cmd, ramsey_upper}) add_table_flags(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  job.subcommand = chosen->get_name();
  for (const CLI::Option* opt : chosen->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    auto values = opt->results();
    job.config[opt->get_name()] = values.size() == 1 ? json(values.front()) : json(values);
  }
  const RunOptions opts = run_options(common);
  const std::string started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();

  std::string stem;
  int code = kOk;
  try {
    if (chosen == enumerate) stem = en.out, code = run_enumerate(en, opts, job);
    else if (chosen == min_edges) stem = me.out, code = run_min_edges(me, opts, job);
    else if (chosen == glue) stem = gl.out, code = run_glue(gl, opts, job);
    else if (chosen == feasible) code = run_feasible(fe, job);
    else if (chosen == bound) code = run_bound(bo, job);
    else if (chosen == propagate_cmd) stem = pr.out, code = run_propagate(pr, job);
    else if (chosen == ramsey_upper) code = run_ramsey_upper(ru_pattern, ru_tables, job);
    else if (chosen == circ_verify) stem = cv.out, code = run_circulant_verify(cv, job);
    else if (chosen == circ_search) stem = cs.out, code = run_circulant_search(cs, opts, job);
    else if (chosen == verify) code = run_verify(ve, job);
    else if (chosen == canon) stem = ca.out, code = run_canon(ca, job);
    else if (chosen == convert) stem = co.out, code = run_convert(co, job);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    job.result["error"] = e.what();
    code = kInvalid;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    job.result["error"] = e.what();
    code = kInconsistent;
  }
  if (common.json_output) std::cout << job.result.dump(2) << '\n';
  if (code == kIncomplete) std::cerr << "budget exhausted: result is incomplete\n";

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(common, job, stem, code, seconds, started, opts);
  return code;
}
