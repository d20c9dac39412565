// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "bondnum/bondnum.hpp"

using namespace bondnum;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

Graph graph_from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int b = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++b)
      if ((bits >> b) & 1U) g.add_edge(u, v);
  return g;
}

// Largest upper-triangle word over all n! orderings.
std::uint64_t brute_force_code(const Graph& g) {
  std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = 0;
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < g.order(); ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(p[i], p[j]) ? 1U : 0U);
    best = std::max(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<Graph> connected_up_to(int nmax) {
  std::vector<Graph> out;
  for (int n = 1; n <= nmax; ++n) {
    auto level = enumerate_connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Outcome table1() {
  Outcome o;
  const std::int64_t h_values[] = {15, 19, 22, 25, 28, 30, 33, 35, 37, 39, 41, 43, 44, 46};
  const std::int64_t k_values[] = {13, 15, 17, 19, 21, 22, 24, 25, 27, 28, 29, 30, 32, 33};
  const auto got = regenerate_table1();
  if (got.size() != 28) o.fail("expected 28 entries, got " + std::to_string(got.size()));
  int mismatches = 0;
  for (const auto& e : got) {
    const bool orientable = e.kind == SurfaceKind::Orientable;
    const std::int64_t want = orientable ? h_values[e.genus - 2] : k_values[e.genus - 3];
    if (e.value != want) {
      ++mismatches;
      o.fail(std::string(orientable ? "h=" : "k=") + std::to_string(e.genus) + " gives " + std::to_string(e.value));
    }
  }
  if (o.pass) o.detail = "28 entries, 0 mismatches";
  else o.detail += " (" + std::to_string(mismatches) + " mismatches)";
  return o;
}

Outcome sharpness() {
  Outcome o;
  const Graph g2 = cartesian_product(complete_graph(2), complete_graph(2));
  const VerificationRecord r = verify_graph(g2, CorpusSpec{});
  if (r.gamma != 2) o.fail("gamma " + (r.gamma ? std::to_string(*r.gamma) : "?"));
  if (r.b != 3) o.fail("b " + (r.b ? std::to_string(*r.b) : "?"));
  if (r.facts.max_degree != 2) o.fail("Delta " + std::to_string(r.facts.max_degree));
  if (r.teschner_margin() != 0) o.fail("Teschner margin not 0");
  if (o.pass) o.detail = "gamma=2 b=3 Delta=2 margin=0";
  return o;
}

Outcome genus_tightness() {
  Outcome o;
  const GenusResult h5 = min_orientable_genus(complete_graph(5));
  const GenusResult hm5 = max_orientable_genus(complete_graph(5));
  const GenusResult hm6 = max_orientable_genus(complete_graph(6));
  if (!h5.exact() || *h5.genus != 1) o.fail("h(K5) != 1");
  if (!hm5.exact() || *hm5.genus != 3) o.fail("hM(K5) != 3");
  if (!hm6.exact() || *hm6.genus != 5) o.fail("hM(K6) != 5");
  if (!hm5.witness || hm5.witness->face_count() != 1) o.fail("K5 maximum-genus witness is not one face");
  if (hm5.witness && hm5.witness->surface() != Surface::orientable(3)) o.fail("K5 witness is not on S3");
  if (o.pass) o.detail = "h(K5)=1 hM(K5)=3 (1 face) hM(K6)=5";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::ostringstream counts;
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> brute;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const Graph g = graph_from_bits(n, bits);
      if (is_connected(g)) brute.insert(brute_force_code(g));
    }
    std::set<std::uint64_t> enumerated;
    const auto graphs = enumerate_connected_graphs(n);
    for (const Graph& g : graphs) enumerated.insert(brute_force_code(g));
    if (graphs.size() != brute.size() || enumerated != brute)
      o.fail("n=" + std::to_string(n) + ": enumerator " + std::to_string(graphs.size()) + " vs oracle " +
             std::to_string(brute.size()));
    counts << (n > 1 ? "," : "") << brute.size();
  }

  const auto graphs = connected_up_to(6);
  struct Check {
    bool gamma_ok = true;
    bool b_checked = false;
    bool b_ok = true;
  };
  const auto checks = parallel_map<Check>(graphs.size(), worker_count(), [&](std::size_t i) {
    Check c;
    const Graph& g = graphs[i];
    c.gamma_ok = domination_number(g).gamma == domination_number_oracle(g);
    if (g.size() >= 1 && g.size() <= 12) {
      c.b_checked = true;
      c.b_ok = bondage_number(g).b == bondage_number_oracle(g);
    }
    return c;
  });
  std::size_t gamma_bad = 0;
  std::size_t b_bad = 0;
  std::size_t b_checked = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (!checks[i].gamma_ok) {
      ++gamma_bad;
      o.fail("gamma mismatch on " + write_graph6(graphs[i]));
    }
    if (checks[i].b_checked) ++b_checked;
    if (!checks[i].b_ok) {
      ++b_bad;
      o.fail("b mismatch on " + write_graph6(graphs[i]));
    }
  }
  if (o.pass)
    o.detail = "classes " + counts.str() + "; gamma " + std::to_string(graphs.size()) + " graphs, b " +
               std::to_string(b_checked) + " graphs, 0 discrepancies";
  else
    o.detail += " (gamma " + std::to_string(gamma_bad) + ", b " + std::to_string(b_bad) + " discrepancies)";
  return o;
}

std::vector<VerificationRecord> sweep_records;

Outcome soundness_sweep() {
  Outcome o;
  CorpusSpec spec = parse_corpus_spec("enum:1-6");
  spec.threads = worker_count();
  sweep_records = verify_corpus(spec);
  const auto graphs = load_corpus(spec);
  std::size_t violations = 0;
  for (std::size_t i = 0; i < sweep_records.size(); ++i) {
    const VerificationRecord& r = sweep_records[i];
    const Graph& g = graphs[i];
    if (r.failed() || r.status == "genus_unknown") o.fail(r.graph6 + ": " + r.status);
    if (!r.b) continue;
    for (const auto& c : r.certificates)
      if (c.applicable && c.value < *r.b) {
        ++violations;
        o.fail(r.graph6 + ": " + c.name + " = " + std::to_string(c.value) + " < b = " + std::to_string(*r.b));
      }
    if (4LL * g.size() < 1LL * g.order() * (*r.b + 1)) {
      ++violations;
      o.fail(r.graph6 + ": 4m < n(b+1)");
    }
    violations += r.soundness_violations.size();
    if (!r.soundness_violations.empty()) o.fail(r.graph6 + ": " + r.soundness_violations.front());
  }
  const int code = exit_code(summarize(sweep_records));
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (o.pass) o.detail = std::to_string(sweep_records.size()) + " graphs, 0 violations, exit code 0";
  else o.detail += " (" + std::to_string(violations) + " violations)";
  return o;
}

Outcome teschner_search() {
  Outcome o;
  CorpusSpec spec = parse_corpus_spec("enum:1-6");
  spec.threads = worker_count();
  const TeschnerSearch t = search_teschner_violations(spec);
  if (!t.violations.empty()) o.fail("violation " + t.violations.front());
  if (!t.failures.empty()) o.fail("failure " + t.failures.front());
  const std::uint64_t c4 = brute_force_code(cycle_graph(4));
  const bool c4_equal = std::any_of(t.equality_cases.begin(), t.equality_cases.end(),
                                    [&](const std::string& s) { return brute_force_code(parse_graph6(s)) == c4; });
  if (!c4_equal) o.fail("C4 is not an equality case");
  if (o.pass)
    o.detail = std::to_string(t.examined) + " graphs, 0 violations, " + std::to_string(t.equality_cases.size()) +
               " equality cases including C4";
  return o;
}

Outcome curvature_identity() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::vector<Graph> pool;
  for (int n = 3; n <= 8; ++n) pool.push_back(complete_graph(n));
  for (int n = 3; n <= 8; ++n) pool.push_back(cycle_graph(n));
  pool.push_back(cartesian_product(complete_graph(2), complete_graph(4)));
  pool.push_back(star_graph(7));
  while (pool.size() < 60) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    pool.push_back(g);
  }
  int nonorientable = 0;
  for (int t = 0; t < 1000; ++t) {
    const Graph& g = pool[rng() % pool.size()];
    RotationSystem r = RotationSystem::sorted(g);
    for (auto& ord : r.order) std::shuffle(ord.begin(), ord.end(), rng);
    for (int& s : r.signature) s = (rng() & 1) ? 1 : -1;
    const Embedding e = trace_faces(g, r);
    if (!e.orientable) ++nonorientable;
    const CurvatureProfile p = edge_curvatures(e, e.surface());
    if (p.total_q != ExactRational(0)) o.fail("sum Q = " + p.total_q.str() + " on " + write_graph6(g));
    if (p.total_w != ExactRational(g.order())) o.fail("sum w != n on " + write_graph6(g));
    if (p.total_f != ExactRational(e.face_count())) o.fail("sum f != faces on " + write_graph6(g));
  }
  if (o.pass) o.detail = "1000 rotation systems (" + std::to_string(nonorientable) + " non-orientable), exact";
  return o;
}

Outcome triangle_free_strengthening() {
  Outcome o;
  std::size_t compared = 0;
  std::size_t planar = 0;
  auto compare = [&](const GraphFacts& f, const std::string& label) {
    const BoundCertificate t = bound_triangle_free(f);
    const BoundCertificate g = bound_constant_general(f);
    if (t.applicable && g.applicable) {
      ++compared;
      if (t.value > g.value) o.fail(label + ": " + std::to_string(t.value) + " > " + std::to_string(g.value));
    }
    if (t.applicable && f.h == 0 && !f.k) {
      ++planar;
      if (t.value != 6) o.fail(label + ": planar triangle-free value " + std::to_string(t.value));
    }
  };
  for (const VerificationRecord& r : sweep_records)
    if (r.facts.triangle_free && r.facts.connected) compare(r.facts, r.graph6);
  const std::size_t corpus_planar = planar;
  // Declared surfaces over the admissible vertex range, one representative per (genus, n).
  for (int genus = 1; genus <= 20; ++genus)
    for (int n = 4; n <= 120; ++n) {
      GraphFacts f;
      f.n = n;
      f.m = n;
      f.max_degree = 3;
      f.min_degree = 2;
      f.connected = true;
      f.triangle_free = true;
      if (n >= min_vertices_on_surface(Surface::orientable(genus), true)) {
        f.h = genus;
        compare(f, "h=" + std::to_string(genus) + " n=" + std::to_string(n));
      }
      f.h.reset();
      if (n >= min_vertices_on_surface(Surface::nonorientable(genus), true)) {
        f.k = genus;
        compare(f, "k=" + std::to_string(genus) + " n=" + std::to_string(n));
      }
    }
  if (corpus_planar == 0) o.fail("no planar triangle-free graphs in the corpus");
  if (o.pass)
    o.detail = std::to_string(compared) + " comparisons, " + std::to_string(corpus_planar) +
               " planar triangle-free corpus graphs all at 6";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"table1_regeneration", table1},
      {"sharpness_witness", sharpness},
      {"genus_tightness", genus_tightness},
      {"oracle_equivalence", oracle_equivalence},
      {"soundness_sweep", soundness_sweep},
      {"teschner_search", teschner_search},
      {"curvature_identity", curvature_identity},
      {"triangle_free_strengthening", triangle_free_strengthening},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << index << ' ' << c.name << ": " << o.detail << " ["
              << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
