#pragma once

// Corpus loading, the per-graph verification pipeline, the Teschner search
// and report emission.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bondnum/bondage.hpp"
#include "bondnum/bounds.hpp"
#include "bondnum/domination.hpp"
#include "bondnum/embedding.hpp"
#include "bondnum/enumerate.hpp"
#include "bondnum/genus_search.hpp"
#include "bondnum/graph.hpp"
#include "bondnum/graph6.hpp"

namespace bondnum {

enum class GenusMode { Search, Declared, Skip };

struct CorpusFilters {
  bool connected = false;
  bool triangle_free = false;
  bool tree = false;
  std::optional<int> nmax;
  std::optional<int> mmax;
};

/// Text form: SOURCE[;SOURCE...][+FILTER...] with sources
///   enum:N  enum:A-B  complete:A-B  cycle:A-B  rook:A-B  g6:S1,S2  file:PATH
/// and filters  connected  triangle-free  tree  nmax=N  mmax=M.
/// rook:A-B is K_n x K_n for n in [A, B].
struct CorpusSpec {
  std::vector<std::string> sources;
  CorpusFilters filters;
  GenusMode genus_mode = GenusMode::Search;
  std::optional<int> declared_h;
  std::optional<int> declared_k;
  SearchBudget budget{100'000'000, std::chrono::milliseconds(10'000)};
  unsigned threads = 1;
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("corpus spec: bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

inline std::pair<int, int> parse_range(std::string_view s, std::string_view what) {
  const auto dash = s.find('-');
  if (dash == std::string_view::npos) {
    const int v = parse_int(s, what);
    return {v, v};
  }
  const int a = parse_int(s.substr(0, dash), what);
  const int b = parse_int(s.substr(dash + 1), what);
  if (a > b) throw std::invalid_argument("corpus spec: empty range in " + std::string(what));
  return {a, b};
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

inline std::vector<Graph> load_source(std::string_view src) {
  const auto colon = src.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("corpus spec: source needs KIND:ARG, got '" + std::string(src) + "'");
  const std::string_view kind = src.substr(0, colon);
  const std::string_view arg = src.substr(colon + 1);
  std::vector<Graph> out;
  if (kind == "enum") {
    const auto [a, b] = parse_range(arg, "enum");
    if (a < 1 || b > kEnumerateMaxOrder) throw std::invalid_argument("corpus spec: enum range must lie in 1..10");
    for (int n = a; n <= b; ++n) for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  } else if (kind == "complete") {
    const auto [a, b] = parse_range(arg, "complete");
    for (int n = a; n <= b; ++n) out.push_back(complete_graph(n));
  } else if (kind == "cycle") {
    const auto [a, b] = parse_range(arg, "cycle");
    for (int n = a; n <= b; ++n) out.push_back(cycle_graph(n));
  } else if (kind == "rook") {
    const auto [a, b] = parse_range(arg, "rook");
    for (int n = a; n <= b; ++n) out.push_back(cartesian_product(complete_graph(n), complete_graph(n)));
  } else if (kind == "g6") {
    for (std::string_view s : split(arg, ',')) out.push_back(parse_graph6(s));
  } else if (kind == "file") {
    out = read_graph_file(std::string(arg));
  } else {
    throw std::invalid_argument("corpus spec: unknown source kind '" + std::string(kind) + "'");
  }
  return out;
}

}  // namespace detail

inline CorpusSpec parse_corpus_spec(std::string_view text) {
  CorpusSpec spec;
  const auto parts = detail::split(text, '+');
  for (std::string_view s : detail::split(parts.front(), ';'))
    if (!s.empty()) spec.sources.emplace_back(s);
  if (spec.sources.empty()) throw std::invalid_argument("corpus spec: no sources");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string_view f = parts[i];
    if (f == "connected") spec.filters.connected = true;
    else if (f == "triangle-free") spec.filters.triangle_free = true;
    else if (f == "tree") spec.filters.tree = true;
    else if (f.starts_with("nmax=")) spec.filters.nmax = detail::parse_int(f.substr(5), "nmax");
    else if (f.starts_with("mmax=")) spec.filters.mmax = detail::parse_int(f.substr(5), "mmax");
    else throw std::invalid_argument("corpus spec: unknown filter '" + std::string(f) + "'");
  }
  return spec;
}

inline bool passes(const CorpusFilters& f, const Graph& g) {
  if (f.nmax && g.order() > *f.nmax) return false;
  if (f.mmax && g.size() > *f.mmax) return false;
  if (f.connected && !is_connected(g)) return false;
  if (f.triangle_free && !is_triangle_free(g)) return false;
  if (f.tree && !is_tree(g)) return false;
  return true;
}

/// All corpus graphs after filtering, in source order.
inline std::vector<Graph> load_corpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  for (const std::string& s : spec.sources)
    for (Graph& g : detail::load_source(s)) {
      if (g.order() > kGraph6MaxOrder) throw std::invalid_argument("corpus graphs are limited to 62 vertices");
      if (passes(spec.filters, g)) out.push_back(std::move(g));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

struct StageTiming {
  std::string stage;
  double ms = 0;
};

struct VerificationRecord {
  std::size_t index = 0;
  std::string graph6;
  GraphFacts facts;
  std::optional<int> gamma;
  std::optional<int> b;
  std::vector<BoundCertificate> certificates;
  std::vector<ConjectureVerdict> verdicts;
  std::vector<std::string> soundness_violations;
  std::string status = "ok";  // ok | genus_unknown | undefined_bondage | failed:<stage>: <message>
  std::vector<StageTiming> timings;

  bool failed() const { return status.starts_with("failed"); }
  bool conjecture_violated() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const ConjectureVerdict& v) { return !v.holds; });
  }
  std::optional<BoundCertificate> head() const {
    std::optional<BoundCertificate> best;
    for (const auto& c : certificates)
      if (c.applicable && (!best || c.value < best->value)) best = c;
    return best;
  }
  std::optional<std::int64_t> teschner_margin() const {
    for (const auto& v : verdicts)
      if (v.conjecture == Conjecture::Teschner) return v.margin;
    return std::nullopt;
  }
};

namespace detail {

inline void soundness_checks(const Graph& g, VerificationRecord& r) {
  const GraphFacts& f = r.facts;
  if (r.b) {
    for (const auto& c : r.certificates)
      if (c.applicable && c.value < *r.b)
        r.soundness_violations.push_back(c.name + " gives " + std::to_string(c.value) + " < b=" + std::to_string(*r.b));
    if (f.connected && !hartnell_rall_edge_floor(g, *r.b))
      r.soundness_violations.push_back("4m < n(b+1)");
  }
  auto surface_checks = [&](const Surface& s) {
    if (f.connected && f.n >= 2 && f.min_degree > sachs_min_degree_cap(s))
      r.soundness_violations.push_back("min degree exceeds the cap for " + s.name());
    if (f.connected && f.n < min_vertices_on_surface(s, false))
      r.soundness_violations.push_back("n below the minimum vertex count for " + s.name());
  };
  if (f.h) surface_checks(Surface::orientable(*f.h));
  if (f.k) surface_checks(Surface::nonorientable(*f.k));
}

}  // namespace detail

/// Runs every stage on one graph. Failures are recorded in the status field
/// and later stages that depend on the failed one are skipped.
inline VerificationRecord verify_graph(const Graph& g, const CorpusSpec& spec, std::size_t index = 0) {
  VerificationRecord r;
  r.index = index;
  auto timed = [&](const std::string& stage, auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      if (!r.failed()) r.status = "failed:" + stage + ": " + e.what();
    }
    r.timings.push_back({stage, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()});
  };

  timed("facts", [&] {
    r.graph6 = write_graph6(g);
    r.facts = GraphFacts::of(g);
  });
  if (r.failed()) return r;

  timed("genus", [&] {
    if (spec.genus_mode == GenusMode::Declared) {
      r.facts.h = spec.declared_h;
      r.facts.k = spec.declared_k;
      r.facts.provenance = GenusProvenance::Declared;
      validate_facts(r.facts);
    } else if (spec.genus_mode == GenusMode::Search && r.facts.connected) {
      const GenusResult h = min_orientable_genus(g, spec.budget);
      if (h.exact()) r.facts.h = h.genus;
      else r.status = "genus_unknown";
    }
  });
  if (r.failed()) return r;

  timed("domination", [&] { r.gamma = domination_number(g).gamma; });
  timed("bondage", [&] {
    if (g.size() == 0) {
      if (r.status == "ok") r.status = "undefined_bondage";
      return;
    }
    r.facts.edge_local_bound = edge_local_bound(g);
    r.b = bondage_number(g).b;
  });
  if (r.failed()) return r;

  timed("bounds", [&] { r.certificates = all_certificates(r.facts); });
  timed("verdicts", [&] {
    if (!r.b) return;
    r.verdicts.push_back(check_teschner(r.facts, *r.b));
    if (auto v = check_dunbar_planar(r.facts, *r.b)) r.verdicts.push_back(*v);
    if (auto v = check_genus_constants(r.facts, *r.b)) r.verdicts.push_back(*v);
  });
  timed("soundness", [&] { detail::soundness_checks(g, r); });
  return r;
}

/// Applies `work` to every index in [0, count) on `threads` workers and
/// returns results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& work) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = work(i);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  return out;
}

inline std::vector<VerificationRecord> verify_graphs(const std::vector<Graph>& graphs, const CorpusSpec& spec) {
  return parallel_map<VerificationRecord>(graphs.size(), spec.threads,
                                          [&](std::size_t i) { return verify_graph(graphs[i], spec, i); });
}

inline std::vector<VerificationRecord> verify_corpus(const CorpusSpec& spec) {
  return verify_graphs(load_corpus(spec), spec);
}

struct CorpusSummary {
  std::size_t records = 0;
  std::size_t failures = 0;
  std::size_t soundness_violations = 0;
  std::size_t conjecture_violations = 0;
};

inline CorpusSummary summarize(const std::vector<VerificationRecord>& records) {
  CorpusSummary s;
  s.records = records.size();
  for (const auto& r : records) {
    if (r.failed()) ++s.failures;
    if (!r.soundness_violations.empty()) ++s.soundness_violations;
    if (r.conjecture_violated()) ++s.conjecture_violations;
  }
  return s;
}

/// 0 clean, 1 operational failure, 2 soundness violation, 3 conjecture violation.
inline int exit_code(const CorpusSummary& s) {
  if (s.soundness_violations > 0) return 2;
  if (s.conjecture_violations > 0) return 3;
  if (s.failures > 0) return 1;
  return 0;
}

struct TeschnerSearch {
  std::vector<std::string> violations;       // 2b > 3 Delta
  std::vector<std::string> equality_cases;   // 2b = 3 Delta
  std::vector<std::string> failures;         // graph6 plus message
  std::size_t examined = 0;
};

/// Exact b against 3 Delta / 2 on every corpus graph with at least one edge.
inline TeschnerSearch search_teschner_violations(const CorpusSpec& spec) {
  const std::vector<Graph> graphs = load_corpus(spec);
  struct Outcome {
    std::string g6;
    std::optional<std::int64_t> margin;
    std::string error;
  };
  const auto results = parallel_map<Outcome>(graphs.size(), spec.threads, [&](std::size_t i) {
    Outcome o;
    const Graph& g = graphs[i];
    try {
      o.g6 = write_graph6(g);
      if (g.size() == 0) return o;
      const int b = bondage_number(g).b;
      o.margin = 3LL * g.max_degree() - 2LL * b;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    return o;
  });
  TeschnerSearch out;
  for (const auto& o : results) {
    if (!o.error.empty()) {
      out.failures.push_back(o.g6 + ": " + o.error);
      continue;
    }
    if (!o.margin) continue;
    ++out.examined;
    if (*o.margin < 0) out.violations.push_back(o.g6);
    else if (*o.margin == 0) out.equality_cases.push_back(o.g6);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

enum class ReportFormat { Csv, JsonLines };

inline constexpr const char* kReportColumns =
    "graph6,n,m,max_degree,min_degree,connected,triangle_free,h,k,gamma,b,best_bound_name,best_bound_value,"
    "teschner_margin";

namespace detail {

inline std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
inline std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

inline std::string csv_row(const VerificationRecord& r) {
  const auto head = r.head();
  const GraphFacts& f = r.facts;
  std::string row = r.graph6;
  auto add = [&](const std::string& s) { row += ',' + s; };
  add(std::to_string(f.n));
  add(std::to_string(f.m));
  add(std::to_string(f.max_degree));
  add(std::to_string(f.min_degree));
  add(f.connected ? "true" : "false");
  add(f.triangle_free ? "true" : "false");
  add(detail::opt_str(f.h));
  add(detail::opt_str(f.k));
  add(detail::opt_str(r.gamma));
  add(detail::opt_str(r.b));
  add(head ? head->name : "");
  add(head ? std::to_string(head->value) : "");
  add(detail::opt_str(r.teschner_margin()));
  return row;
}

inline nlohmann::ordered_json json_row(const VerificationRecord& r) {
  const auto head = r.head();
  const GraphFacts& f = r.facts;
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = f.n;
  j["m"] = f.m;
  j["max_degree"] = f.max_degree;
  j["min_degree"] = f.min_degree;
  j["connected"] = f.connected;
  j["triangle_free"] = f.triangle_free;
  j["h"] = detail::opt_json(f.h);
  j["k"] = detail::opt_json(f.k);
  j["gamma"] = detail::opt_json(r.gamma);
  j["b"] = detail::opt_json(r.b);
  j["best_bound_name"] = head ? nlohmann::ordered_json(head->name) : nlohmann::ordered_json(nullptr);
  j["best_bound_value"] = head ? nlohmann::ordered_json(head->value) : nlohmann::ordered_json(nullptr);
  j["teschner_margin"] = detail::opt_json(r.teschner_margin());
  j["status"] = r.status;
  return j;
}

/// CSV always starts with the header; json-lines has one object per record.
inline void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, std::ostream& os) {
  if (format == ReportFormat::Csv) {
    os << kReportColumns << '\n';
    for (const auto& r : records) os << csv_row(r) << '\n';
  } else {
    for (const auto& r : records) os << json_row(r).dump() << '\n';
  }
}

}  // namespace bondnum
