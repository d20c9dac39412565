// bondnum: command-line front end for the bondage-number toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bondnum/bondnum.hpp"

using namespace bondnum;

namespace {

std::vector<Graph> graphs_from_argument(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  return {parse_graph6(arg)};
}

SearchBudget budget_from(std::uint64_t nodes, long long time_ms) {
  SearchBudget b;
  b.node_limit = nodes;
  b.time_limit = std::chrono::milliseconds(time_ms);
  return b;
}

void print_genus(const char* label, const GenusResult& r) {
  std::cout << label << ' ';
  if (r.exact()) std::cout << *r.genus;
  else std::cout << "unknown (between " << r.lower_bound << " and " << r.upper_bound << ")";
  std::cout << "  nodes=" << r.nodes << '\n';
}

int cmd_invariants(const std::string& arg) {
  for (const Graph& g : graphs_from_argument(arg)) {
    const GraphFacts f = GraphFacts::of(g);
    std::cout << "graph6 " << write_graph6(g) << '\n'
              << "n " << f.n << "\nm " << f.m << "\nmax_degree " << f.max_degree << "\nmin_degree " << f.min_degree
              << "\nconnected " << (f.connected ? "true" : "false") << "\ntriangle_free "
              << (f.triangle_free ? "true" : "false") << '\n';
    const DominationResult d = domination_number(g);
    std::cout << "gamma " << d.gamma << "\ndominating_set";
    for (Vertex v : d.witness.to_vector()) std::cout << ' ' << v;
    std::cout << '\n';
    if (g.size() == 0) {
      std::cout << "b undefined\n";
    } else {
      const BondageResult b = bondage_number(g);
      std::cout << "b " << b.b << "\nbondage_set";
      for (const Edge& e : b.witness) std::cout << ' ' << e.u << '-' << e.v;
      std::cout << "\nedge_local_bound " << edge_local_bound(g) << '\n';
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_genus(const std::string& g6, const SearchBudget& budget) {
  const Graph g = parse_graph6(g6);
  const GenusResult lo = min_orientable_genus(g, budget);
  const GenusResult hi = max_orientable_genus(g, budget);
  print_genus("min_orientable_genus", lo);
  print_genus("max_orientable_genus", hi);
  if (g.size() > 0 && g.size() != g.order() - 1) std::cout << "max_nonorientable_genus " << max_nonorientable_genus(g) << '\n';
  if (lo.witness) std::cout << "\n# minimum genus witness\n" << write_embedding(*lo.witness);
  if (hi.witness) std::cout << "\n# maximum genus witness\n" << write_embedding(*hi.witness);
  return lo.exact() && hi.exact() ? 0 : 1;
}

int cmd_bounds(const std::string& g6, std::optional<int> h, std::optional<int> k, const SearchBudget& budget) {
  const Graph g = parse_graph6(g6);
  GraphFacts f = GraphFacts::of(g);
  if (h || k) {
    f.h = h;
    f.k = k;
    f.provenance = GenusProvenance::Declared;
    validate_facts(f);
  } else if (f.connected) {
    const GenusResult r = min_orientable_genus(g, budget);
    if (r.exact()) f.h = r.genus;
    else std::cout << "# orientable genus unknown within budget\n";
  }
  if (g.size() > 0) f.edge_local_bound = edge_local_bound(g);
  std::cout << "# " << write_graph6(g) << "  " << detail::facts_inputs(f) << '\n';
  std::vector<BoundCertificate> all = all_certificates(f);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.applicable != b.applicable) return a.applicable;
    return a.applicable && a.value < b.value;
  });
  for (const auto& c : all) std::cout << format_certificate(c) << '\n';
  return 0;
}

int cmd_table1(bool check) {
  const auto got = regenerate_table1();
  const auto want = expected_table1();
  int mismatches = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto& e = got[i];
    std::cout << (e.kind == SurfaceKind::Orientable ? "h" : "k") << '=' << e.genus << ' ' << e.value;
    if (check) {
      const bool ok = e == want[i];
      if (!ok) ++mismatches;
      std::cout << (ok ? "  ok" : "  MISMATCH expected " + std::to_string(want[i].value));
    }
    std::cout << '\n';
  }
  if (check) {
    std::cout << "mismatches " << mismatches << '\n';
    return mismatches == 0 ? 0 : 2;
  }
  return 0;
}

int cmd_verify(const CorpusSpec& spec, const std::string& out, ReportFormat format) {
  const auto records = verify_corpus(spec);
  if (out.empty()) {
    emit_report(records, format, std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    emit_report(records, format, os);
  }
  for (const auto& r : records) {
    if (r.failed()) std::cerr << r.graph6 << ": " << r.status << '\n';
    for (const auto& v : r.soundness_violations) std::cerr << "SOUNDNESS " << r.graph6 << ": " << v << '\n';
    for (const auto& v : r.verdicts)
      if (!v.holds) std::cerr << "CONJECTURE " << conjecture_name(v.conjecture) << ' ' << r.graph6 << " margin " << v.margin << '\n';
  }
  const CorpusSummary s = summarize(records);
  std::cerr << "records " << s.records << " failures " << s.failures << " soundness_violations "
            << s.soundness_violations << " conjecture_violations " << s.conjecture_violations << '\n';
  return exit_code(s);
}

int cmd_search_teschner(const CorpusSpec& spec) {
  const TeschnerSearch t = search_teschner_violations(spec);
  std::cout << "examined " << t.examined << '\n';
  std::cout << "violations " << t.violations.size() << '\n';
  for (const auto& s : t.violations) std::cout << "violation " << s << '\n';
  std::cout << "equality_cases " << t.equality_cases.size() << '\n';
  for (const auto& s : t.equality_cases) std::cout << "equality " << s << '\n';
  for (const auto& s : t.failures) std::cerr << "failed " << s << '\n';
  if (!t.violations.empty()) return 3;
  return t.failures.empty() ? 0 : 1;
}

int cmd_embed(const std::string& g6, int genus, const SearchBudget& budget) {
  const Graph g = parse_graph6(g6);
  const EmbedResult r = embedding_with_genus(g, genus, budget);
  if (r.embedding) {
    std::cout << write_embedding(*r.embedding);
    return 0;
  }
  if (r.status == SearchStatus::BudgetExhausted) {
    std::cout << "unknown\n";
    return 1;
  }
  std::cout << "none\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bondage number, domination and surface-embedding toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  std::uint64_t nodes = 100'000'000;
  long long time_ms = 10'000;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", nodes, "Node limit for the genus search")->capture_default_str();
    sub->add_option("--time-limit-ms", time_ms, "Wall-clock limit for the genus search (0 = none)")->capture_default_str();
  };

  std::string arg;
  auto* inv = app.add_subcommand("invariants", "n, m, degrees, gamma, b, connectivity, triangle-freeness");
  inv->add_option("graph", arg, "graph6 string or graph file")->required();

  auto* gen = app.add_subcommand("genus", "Minimum and maximum orientable genus with witnesses");
  gen->add_option("graph6", arg)->required();
  add_budget(gen);

  std::optional<int> h;
  std::optional<int> k;
  auto* bnd = app.add_subcommand("bounds", "All bound certificates, sorted");
  bnd->add_option("graph6", arg)->required();
  bnd->add_option("--h", h, "Declared orientable genus");
  bnd->add_option("--k", k, "Declared non-orientable genus");
  add_budget(bnd);

  bool check = false;
  auto* tab = app.add_subcommand("table1", "Regenerated constants for higher genera");
  tab->add_flag("--check", check, "Compare against the reference constants");

  std::string corpus;
  std::string out;
  std::string format = "csv";
  std::string genus_mode = "search";
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  auto* ver = app.add_subcommand("verify", "Full pipeline over a corpus");
  ver->add_option("--corpus", corpus, "Corpus spec, e.g. enum:1-6 or g6:Cr,C~")->required();
  ver->add_option("--out", out, "Report file (default stdout)");
  ver->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
  ver->add_option("--genus-mode", genus_mode)->check(CLI::IsMember({"search", "declared", "skip"}))->capture_default_str();
  ver->add_option("--h", h, "Declared orientable genus (declared mode)");
  ver->add_option("--k", k, "Declared non-orientable genus (declared mode)");
  ver->add_option("--threads", threads)->capture_default_str();
  add_budget(ver);

  auto* tes = app.add_subcommand("search-teschner", "Graphs with 2b > 3 Delta");
  tes->add_option("--corpus", corpus)->required();
  tes->add_option("--threads", threads)->capture_default_str();

  int genus = 0;
  auto* emb = app.add_subcommand("embed", "Rotation system on the orientable surface of a given genus");
  emb->add_option("graph6", arg)->required();
  emb->add_option("--genus", genus)->required();
  add_budget(emb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const SearchBudget budget = budget_from(nodes, time_ms);
    if (*inv) return cmd_invariants(arg);
    if (*gen) return cmd_genus(arg, budget);
    if (*bnd) return cmd_bounds(arg, h, k, budget);
    if (*tab) return cmd_table1(check);
    if (*ver || *tes) {
      CorpusSpec spec = parse_corpus_spec(corpus);
      spec.threads = threads;
      spec.budget = budget;
      if (*tes) return cmd_search_teschner(spec);
      spec.genus_mode = genus_mode == "search" ? GenusMode::Search
                        : genus_mode == "declared" ? GenusMode::Declared
                                                   : GenusMode::Skip;
      if (spec.genus_mode == GenusMode::Declared && !h && !k)
        throw std::invalid_argument("--genus-mode declared needs --h and/or --k");
      spec.declared_h = h;
      spec.declared_k = k;
      return cmd_verify(spec, out, format == "csv" ? ReportFormat::Csv : ReportFormat::JsonLines);
    }
    if (*emb) return cmd_embed(arg, genus, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
