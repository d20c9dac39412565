#pragma once

// Closed-form upper bounds on the bondage number in terms of the maximum
// degree, vertex count and surface genus, with their applicability rules.
// Every real-valued bound is floored: b is an integer, so b <= x iff b <= floor(x).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bondnum/embedding.hpp"
#include "bondnum/graph.hpp"
#include "bondnum/numeric.hpp"

namespace bondnum {

class InconsistentFacts : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GenusProvenance { Computed, Declared };

struct GraphFacts {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  bool connected = false;
  bool triangle_free = false;
  std::optional<int> h;  // orientable genus
  std::optional<int> k;  // non-orientable genus
  GenusProvenance provenance = GenusProvenance::Computed;
  std::optional<int> edge_local_bound;

  static GraphFacts of(const Graph& g) {
    GraphFacts f;
    f.n = g.order();
    f.m = g.size();
    f.max_degree = g.max_degree();
    f.min_degree = g.min_degree();
    f.connected = g.order() > 0 && is_connected(g);
    f.triangle_free = is_triangle_free(g);
    return f;
  }
};

/// Checks the Euler edge limits m <= 3(n - chi), and m <= 2(n - chi) for
/// triangle-free graphs, against every genus present in the facts.
inline void validate_facts(const GraphFacts& f) {
  if (f.n < 0 || f.m < 0) throw InconsistentFacts("negative order or size");
  if (f.min_degree > f.max_degree) throw InconsistentFacts("min degree exceeds max degree");
  if (f.connected && f.n >= 2 && f.min_degree < 1) throw InconsistentFacts("connected graph with an isolated vertex");
  if (f.triangle_free && 4LL * f.m > 1LL * f.n * f.n) throw InconsistentFacts("triangle-free graph with m > n^2/4");
  auto check = [&](const Surface& s) {
    if (f.n < 3) return;
    const long long slack = f.n - s.euler_characteristic();
    if (f.m > 3 * slack) throw InconsistentFacts("m exceeds 3(n - chi) for " + s.name());
    if (f.triangle_free && f.m > 2 * slack) throw InconsistentFacts("triangle-free m exceeds 2(n - chi) for " + s.name());
  };
  if (f.h) {
    if (*f.h < 0) throw InconsistentFacts("negative orientable genus");
    check(Surface::orientable(*f.h));
  }
  if (f.k) {
    if (*f.k < 1) throw InconsistentFacts("non-orientable genus must be at least 1");
    check(Surface::nonorientable(*f.k));
  }
}

struct BoundCertificate {
  std::string name;
  std::string citation;
  bool applicable = false;
  std::string reason;  // why it applies, or why not
  std::int64_t value = 0;
  std::string inputs;
};

namespace detail {

inline std::string facts_inputs(const GraphFacts& f) {
  std::ostringstream os;
  os << "n=" << f.n << " m=" << f.m << " Delta=" << f.max_degree << " delta=" << f.min_degree;
  if (f.h) os << " h=" << *f.h;
  if (f.k) os << " k=" << *f.k;
  if (f.triangle_free) os << " triangle_free";
  return os.str();
}

inline BoundCertificate make_cert(const GraphFacts& f, std::string name, std::string citation) {
  BoundCertificate c;
  c.name = std::move(name);
  c.citation = std::move(citation);
  c.inputs = facts_inputs(f);
  return c;
}

inline BoundCertificate skip(BoundCertificate c, std::string why) {
  c.applicable = false;
  c.reason = std::move(why);
  c.value = 0;
  return c;
}

inline BoundCertificate take(BoundCertificate c, std::int64_t value, std::string why) {
  c.applicable = true;
  c.reason = std::move(why);
  c.value = value;
  return c;
}

// Keeps the smaller of two optional branch values, remembering which won.
struct Branch {
  std::optional<std::int64_t> value;
  std::string why;
  void offer(std::int64_t v, const std::string& w) {
    if (!value || v < *value) {
      value = v;
      why = w;
    }
  }
};

}  // namespace detail

/// b <= min{8, Delta + 2} for connected planar graphs.
inline BoundCertificate bound_kang_yuan(const GraphFacts& f) {
  auto c = detail::make_cert(f, "kang_yuan_planar", "b <= min{8, Delta+2}, connected planar graphs");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.h || *f.h != 0) return detail::skip(c, "graph not known to be planar");
  return detail::take(c, std::min(8, f.max_degree + 2), "h=0");
}

/// b <= min{Delta + h + 2, Delta + k + 1}.
inline BoundCertificate bound_genus_additive(const GraphFacts& f) {
  auto c = detail::make_cert(f, "genus_additive", "b <= min{Delta+h+2, Delta+k+1}");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  detail::Branch br;
  if (f.h) br.offer(f.max_degree + *f.h + 2, "Delta+h+2");
  if (f.k) br.offer(f.max_degree + *f.k + 1, "Delta+k+1");
  if (!br.value) return detail::skip(c, "no genus known");
  return detail::take(c, *br.value, br.why);
}

/// Cases of b <= 11 - 12 chi / n with the vertex-count range for the surface.
inline BoundCertificate bound_constant_general(const GraphFacts& f) {
  auto c = detail::make_cert(f, "euler_constant",
                             "4m >= n(b+1) with m <= 3(n-chi): b <= 10 (h=0 or k=1); 11 (n > 12(2h-2) or "
                             "n > 12(k-2)); 11+24(h-1)(3-sqrt(16h+1))/(1-8h), 11+12(k-2)(3-sqrt(8k+1))/(1-4k)");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  detail::Branch br;
  if (f.h) {
    const int h = *f.h;
    if (h > 0 && f.n < min_vertices_on_surface(Surface::orientable(h), false))
      throw InconsistentFacts("n is below the minimum vertex count for orientable genus " + std::to_string(h));
    if (h == 0) br.offer(10, "h=0");
    else if (f.n > 12 * (2 * h - 2)) br.offer(11, "h>=1, n > 12(2h-2)");
    else br.offer(floor_real_bound(BoundShape::EulerOrientable, h), "h>=2, n <= 12(2h-2)");
  }
  if (f.k) {
    const int k = *f.k;
    if (f.n < min_vertices_on_surface(Surface::nonorientable(k), false))
      throw InconsistentFacts("n is below the minimum vertex count for non-orientable genus " + std::to_string(k));
    if (k == 1) br.offer(10, "k=1");
    else if (f.n > 12 * (k - 2)) br.offer(11, "k>=2, n > 12(k-2)");
    else br.offer(floor_real_bound(BoundShape::EulerNonorientable, k), "k>=3, n <= 12(k-2)");
  }
  if (!br.value) return detail::skip(c, "no genus known");
  return detail::take(c, *br.value, br.why);
}

/// Triangle-free analogue: b <= 7 - 8 chi / n.
inline BoundCertificate bound_triangle_free(const GraphFacts& f) {
  auto c = detail::make_cert(f, "triangle_free_constant",
                             "4m >= n(b+1) with m <= 2(n-chi): b <= 6 (h=0 or k=1); 7 (n > 8(2h-2) or "
                             "n > 8(k-2)); 7+8(h-1)/(1+sqrt(2h)), 7+4(k-2)/(1+sqrt(k))");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.triangle_free) return detail::skip(c, "graph has a triangle");
  if (4LL * f.m > 1LL * f.n * f.n) throw InconsistentFacts("triangle-free graph with m > n^2/4");
  detail::Branch br;
  if (f.h) {
    const int h = *f.h;
    if (h > 0 && f.n < min_vertices_on_surface(Surface::orientable(h), true))
      throw InconsistentFacts("n is below the triangle-free minimum for orientable genus " + std::to_string(h));
    if (h == 0) br.offer(6, "h=0");
    else if (f.n > 8 * (2 * h - 2)) br.offer(7, "h>=1, n > 8(2h-2)");
    else br.offer(floor_real_bound(BoundShape::TriangleFreeOrientable, h), "h>=2, n <= 8(2h-2)");
  }
  if (f.k) {
    const int k = *f.k;
    if (f.n < min_vertices_on_surface(Surface::nonorientable(k), true))
      throw InconsistentFacts("n is below the triangle-free minimum for non-orientable genus " + std::to_string(k));
    if (k == 1) br.offer(6, "k=1");
    else if (f.n > 8 * (k - 2)) br.offer(7, "k>=2, n > 8(k-2)");
    else br.offer(floor_real_bound(BoundShape::TriangleFreeNonorientable, k), "k>=3, n <= 8(k-2)");
  }
  if (!br.value) return detail::skip(c, "no genus known");
  return detail::take(c, *br.value, br.why);
}

/// b <= Delta + floor((3 + sqrt(1 + 48h)) / 2), Delta + floor((3 + sqrt(1 + 24k)) / 2).
inline BoundCertificate bound_sqrt_degree(const GraphFacts& f) {
  auto c = detail::make_cert(f, "sqrt_genus_degree",
                             "b <= min{Delta+floor((3+sqrt(1+48h))/2), Delta+floor((3+sqrt(1+24k))/2)}, h,k >= 1");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  detail::Branch br;
  if (f.h && *f.h >= 1) br.offer(f.max_degree + floor_sqrt_expr(3, 1 + 48LL * *f.h, 2), "h>=1");
  if (f.k && *f.k >= 1) br.offer(f.max_degree + floor_sqrt_expr(3, 1 + 24LL * *f.k, 2), "k>=1");
  if (!br.value) return detail::skip(c, "needs h >= 1 or k >= 1");
  return detail::take(c, *br.value, br.why);
}

/// b <= Delta + ceil(h^0.7) + 2 for h <= 5, + 3 for h >= 6.
inline BoundCertificate bound_orientable_degree(const GraphFacts& f) {
  auto c = detail::make_cert(f, "orientable_degree", "b <= Delta+ceil(h^0.7)+2 (h<=5), Delta+ceil(h^0.7)+3 (h>=6)");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.h) return detail::skip(c, "orientable genus unknown");
  const int h = *f.h;
  const std::int64_t lift = ceil_power(h, 7, 10);
  if (h <= 5) return detail::take(c, f.max_degree + lift + 2, "h<=5");
  return detail::take(c, f.max_degree + lift + 3, "h>=6");
}

/// Large-n refinements: Delta + ceil(ln^2 h) + 3 if n >= h; Delta + ceil(ln h) + 3
/// if n >= h^1.9; Delta + 4 if n >= h^2.5.
inline BoundCertificate bound_orientable_degree_refined(const GraphFacts& f) {
  auto c = detail::make_cert(f, "orientable_degree_large_n",
                             "b <= Delta+ceil(ln^2 h)+3 (n>=h), Delta+ceil(ln h)+3 (n>=h^1.9), Delta+4 (n>=h^2.5)");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.h || *f.h < 1) return detail::skip(c, "needs h >= 1");
  const int h = *f.h;
  detail::Branch br;
  if (f.n >= h) br.offer(f.max_degree + ceil_log_power(h, 2) + 3, "n >= h");
  if (at_least_power(f.n, h, 19, 10)) br.offer(f.max_degree + ceil_log_power(h, 1) + 3, "n >= h^1.9");
  if (at_least_power(f.n, h, 5, 2)) br.offer(f.max_degree + 4, "n >= h^2.5");
  if (!br.value) return detail::skip(c, "n < h");
  return detail::take(c, *br.value, br.why);
}

/// b <= Delta + ceil(k^0.6) + 1 for k <= 5, + 2 for k >= 6.
inline BoundCertificate bound_nonorientable_degree(const GraphFacts& f) {
  auto c = detail::make_cert(f, "nonorientable_degree", "b <= Delta+ceil(k^0.6)+1 (k<=5), Delta+ceil(k^0.6)+2 (k>=6)");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.k) return detail::skip(c, "non-orientable genus unknown");
  const int k = *f.k;
  const std::int64_t lift = ceil_power(k, 3, 5);
  if (k <= 5) return detail::take(c, f.max_degree + lift + 1, "k<=5");
  return detail::take(c, f.max_degree + lift + 2, "k>=6");
}

/// Large-n refinements: Delta + ceil(ln^2 k) + 2 if n >= k/6; Delta + ceil(ln k) + 2
/// if n >= k^1.6; Delta + 3 if n > k^2.
inline BoundCertificate bound_nonorientable_degree_refined(const GraphFacts& f) {
  auto c = detail::make_cert(f, "nonorientable_degree_large_n",
                             "b <= Delta+ceil(ln^2 k)+2 (n>=k/6), Delta+ceil(ln k)+2 (n>=k^1.6), Delta+3 (n>k^2)");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.k) return detail::skip(c, "non-orientable genus unknown");
  const int k = *f.k;
  detail::Branch br;
  if (6LL * f.n >= k) br.offer(f.max_degree + ceil_log_power(k, 2) + 2, "n >= k/6");
  if (at_least_power(f.n, k, 8, 5)) br.offer(f.max_degree + ceil_log_power(k, 1) + 2, "n >= k^1.6");
  if (1LL * f.n > 1LL * k * k) br.offer(f.max_degree + 3, "n > k^2");
  if (!br.value) return detail::skip(c, "n < k/6");
  return detail::take(c, *br.value, br.why);
}

/// b <= min{10, Delta + 2} on the projective plane; min{11, Delta + 3} on the
/// torus and the Klein bottle.
inline BoundCertificate bound_small_surfaces(const GraphFacts& f) {
  auto c = detail::make_cert(f, "small_surface",
                             "b <= min{10, Delta+2} (k=1); b <= min{11, Delta+3} (h=1 or k=2)");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  detail::Branch br;
  if (f.k && *f.k == 1) br.offer(std::min(10, f.max_degree + 2), "k=1");
  if (f.h && *f.h == 1) br.offer(std::min(11, f.max_degree + 3), "h=1");
  if (f.k && *f.k == 2) br.offer(std::min(11, f.max_degree + 3), "k=2");
  if (!br.value) return detail::skip(c, "surface is not N1, S1 or N2");
  return detail::take(c, *br.value, br.why);
}

/// b <= Delta + k - 5 for k >= 13.
inline BoundCertificate bound_nonorientable_shift(const GraphFacts& f) {
  auto c = detail::make_cert(f, "nonorientable_shift_k13", "b <= Delta+k-5 for k >= 13");
  if (!f.connected) return detail::skip(c, "graph is disconnected");
  if (!f.k || *f.k < 13) return detail::skip(c, "needs k >= 13");
  return detail::take(c, f.max_degree + *f.k - 5, "k>=13");
}

/// The edge-local bound min d(u)+d(v)-1-|N(u) & N(v)|, when supplied.
inline BoundCertificate bound_edge_local(const GraphFacts& f) {
  auto c = detail::make_cert(f, "edge_local", "b <= d(u)+d(v)-1-|N(u) & N(v)| for every edge uv");
  if (!f.edge_local_bound) return detail::skip(c, "edge-local value not supplied");
  return detail::take(c, *f.edge_local_bound, "min over edges");
}

/// Every certificate, applicable or not, in a fixed order.
inline std::vector<BoundCertificate> all_certificates(const GraphFacts& f) {
  return {bound_kang_yuan(f),          bound_genus_additive(f),
          bound_constant_general(f),   bound_triangle_free(f),
          bound_sqrt_degree(f),        bound_orientable_degree(f),
          bound_orientable_degree_refined(f), bound_nonorientable_degree(f),
          bound_nonorientable_degree_refined(f), bound_small_surfaces(f),
          bound_nonorientable_shift(f), bound_edge_local(f)};
}

/// Applicable certificates sorted by value; ties keep the fixed order.
inline std::vector<BoundCertificate> best_bound(const GraphFacts& f) {
  std::vector<BoundCertificate> out;
  for (auto& c : all_certificates(f))
    if (c.applicable) out.push_back(std::move(c));
  if (out.empty()) throw std::invalid_argument("no bound applies to these facts");
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

// ---------------------------------------------------------------------------
// Constant table for higher genera

struct Table1Entry {
  SurfaceKind kind;
  int genus;
  std::int64_t value;
  bool operator==(const Table1Entry&) const = default;
};

/// Floors of the orientable formula for h = 2..15 and the non-orientable one for k = 3..16.
inline std::vector<Table1Entry> regenerate_table1() {
  std::vector<Table1Entry> out;
  for (int h = 2; h <= 15; ++h)
    out.push_back({SurfaceKind::Orientable, h, floor_real_bound(BoundShape::EulerOrientable, h)});
  for (int k = 3; k <= 16; ++k)
    out.push_back({SurfaceKind::NonOrientable, k, floor_real_bound(BoundShape::EulerNonorientable, k)});
  return out;
}

/// Reference constants, h = 2..15 then k = 3..16.
inline std::vector<Table1Entry> expected_table1() {
  static constexpr int kOrientable[] = {15, 19, 22, 25, 28, 30, 33, 35, 37, 39, 41, 43, 44, 46};
  static constexpr int kNonorientable[] = {13, 15, 17, 19, 21, 22, 24, 25, 27, 28, 29, 30, 32, 33};
  std::vector<Table1Entry> out;
  for (int i = 0; i < 14; ++i) out.push_back({SurfaceKind::Orientable, i + 2, kOrientable[i]});
  for (int i = 0; i < 14; ++i) out.push_back({SurfaceKind::NonOrientable, i + 3, kNonorientable[i]});
  return out;
}

// ---------------------------------------------------------------------------
// Degree caps and the improvement window

/// Largest possible minimum degree of a graph on `s`.
inline int sachs_min_degree_cap(const Surface& s) {
  if (s.is_orientable() && s.genus == 0) return 5;
  if (!s.is_orientable() && s.genus == 1) return 5;
  if (s.is_orientable()) return static_cast<int>(floor_sqrt_expr(5, 1 + 48LL * s.genus, 2));
  return static_cast<int>(floor_sqrt_expr(5, 1 + 24LL * s.genus, 2));
}

/// The closed interval [(c0 - sqrt(r)) / 2, (c0 + sqrt(r)) / 2].
struct RadicalInterval {
  std::int64_t c0 = 0;
  std::int64_t radicand = 0;

  std::int64_t first_integer() const { return -floor_sqrt_expr(-c0, radicand, 2); }
  std::int64_t last_integer() const { return floor_sqrt_expr(c0, radicand, 2); }
  std::string str() const {
    return "[(" + std::to_string(c0) + "-sqrt(" + std::to_string(radicand) + "))/2, (" + std::to_string(c0) + "+sqrt(" +
           std::to_string(radicand) + "))/2]";
  }
};

struct ImprovementWindow {
  RadicalInterval h;
  RadicalInterval k;
};

/// Genera for which Delta + h - a and Delta + k - b are at least as good as the
/// square-root bounds: h in a + 15/2 +- sqrt(48a + 217)/2, k in b + 9/2 +- sqrt(24b + 73)/2.
inline ImprovementWindow improvement_window(int a, int b) {
  if (a < -1 || b < 0) throw std::invalid_argument("improvement_window needs a >= -1 and b >= 0");
  return {RadicalInterval{2LL * a + 15, 48LL * a + 217}, RadicalInterval{2LL * b + 9, 24LL * b + 73}};
}

// ---------------------------------------------------------------------------
// Conjectures

enum class Conjecture { Teschner, DunbarPlanar, GenusConstants };

inline std::string conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::Teschner: return "teschner";
    case Conjecture::DunbarPlanar: return "dunbar_planar";
    case Conjecture::GenusConstants: return "genus_constants";
  }
  return "?";
}

struct ConjectureVerdict {
  Conjecture conjecture;
  bool holds = true;
  std::int64_t margin = 0;
};

/// 2b <= 3 Delta; the margin is 3 Delta - 2b.
inline ConjectureVerdict check_teschner(const GraphFacts& f, int exact_b) {
  const std::int64_t margin = 3LL * f.max_degree - 2LL * exact_b;
  return {Conjecture::Teschner, margin >= 0, margin};
}

/// b <= Delta + 1 for planar graphs; empty when the graph is not known to be planar.
inline std::optional<ConjectureVerdict> check_dunbar_planar(const GraphFacts& f, int exact_b) {
  if (!f.h || *f.h != 0) return std::nullopt;
  const std::int64_t margin = f.max_degree + 1LL - exact_b;
  return ConjectureVerdict{Conjecture::DunbarPlanar, margin >= 0, margin};
}

/// Best known genus-only constants: 8 (planar), 10 (projective plane),
/// 11 (torus, Klein bottle), and the floored formula above that.
inline std::optional<std::int64_t> genus_constant(const Surface& s) {
  if (s.is_orientable()) {
    if (s.genus == 0) return 8;
    if (s.genus == 1) return 11;
    return floor_real_bound(BoundShape::EulerOrientable, s.genus);
  }
  if (s.genus == 1) return 10;
  if (s.genus == 2) return 11;
  return floor_real_bound(BoundShape::EulerNonorientable, s.genus);
}

/// b <= c_h and b <= c'_k for the known genera; empty when no genus is known.
inline std::optional<ConjectureVerdict> check_genus_constants(const GraphFacts& f, int exact_b) {
  std::optional<std::int64_t> c;
  if (f.h) c = genus_constant(Surface::orientable(*f.h));
  if (f.k) {
    const auto ck = genus_constant(Surface::nonorientable(*f.k));
    c = c ? std::min(*c, *ck) : ck;
  }
  if (!c) return std::nullopt;
  const std::int64_t margin = *c - exact_b;
  return ConjectureVerdict{Conjecture::GenusConstants, margin >= 0, margin};
}

// ---------------------------------------------------------------------------
// Text form

/// One line per certificate: name value applicable reason | citation | inputs.
inline std::string format_certificate(const BoundCertificate& c) {
  std::ostringstream os;
  os << c.name << ' ';
  if (c.applicable) os << c.value; else os << '-';
  os << ' ' << (c.applicable ? "applicable" : "inapplicable") << " (" << c.reason << ") | " << c.citation << " | "
     << c.inputs;
  return os.str();
}

}  // namespace bondnum
