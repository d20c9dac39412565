#pragma once

// Simple undirected graphs on at most 64 vertices, stored as one adjacency
// word per vertex so neighbourhood intersections are single AND operations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bondnum {

using Vertex = int;

/// Set of vertices of a graph with at most 64 vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr Vertex lowest() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge with endpoints ordered u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
  }
  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::vector<Edge>;

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n)) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (adj_[u].contains(v)) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edge_count_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!adj_[u].contains(v)) return;
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edge_count_;
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[v] | VertexSet::single(v); }
  int degree(Vertex v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::first(order()); }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    if (order() == 0) return 0;
    int d = order();
    for (Vertex v = 0; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  /// Edges in lexicographic (u, v) order; this order defines edge indices.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
      (adj_[u] - VertexSet::first(u + 1)).for_each([&](Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  static std::vector<VertexSet> check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
    return std::vector<VertexSet>(static_cast<std::size_t>(n));
  }

  void check_pair(Vertex u, Vertex v) const {
    if (!valid_vertex(u) || !valid_vertex(v))
      throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
  }

  std::vector<VertexSet> adj_;
  int edge_count_ = 0;
};

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph requires n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph requires n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star_graph requires at least one leaf");
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Vertex (a, b) of the product gets index a * h.order() + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument("cartesian_product requires non-empty factors");
  const int gn = g.order();
  const int hn = h.order();
  Graph p(gn * hn);
  auto id = [hn](Vertex a, Vertex b) { return a * hn + b; };
  for (Vertex a = 0; a < gn; ++a)
    for (const Edge& e : h.edges()) p.add_edge(id(a, e.u), id(a, e.v));
  for (Vertex b = 0; b < hn; ++b)
    for (const Edge& e : g.edges()) p.add_edge(id(e.u, b), id(e.v, b));
  return p;
}

/// Vertices reachable from `start`.
inline VertexSet component_of(const Graph& g, Vertex start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("is_connected is undefined for the empty graph");
  return component_of(g, 0) == g.vertices();
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = component_of(g, left.lowest());
    out.push_back(c);
    left = left - c;
  }
  return out;
}

/// Subgraph induced by `keep`, relabelled in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<Vertex> ids = keep.to_vector();
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  Graph s(static_cast<int>(ids.size()));
  for (const Edge& e : g.edges())
    if (keep.contains(e.u) && keep.contains(e.v)) s.add_edge(pos[e.u], pos[e.v]);
  return s;
}

inline bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges())
    if (!(g.neighbors(e.u) & g.neighbors(e.v)).empty()) return false;
  return true;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

inline int common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("common_neighbors requires distinct vertices");
  return (g.neighbors(u) & g.neighbors(v)).count();
}

inline Graph remove_edges(Graph g, const EdgeSet& edges) {
  for (const Edge& e : edges) g.remove_edge(e.u, e.v);
  return g;
}

/// Vertices whose removal disconnects their component.
inline VertexSet cut_vertices(const Graph& g) {
  VertexSet cuts;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    VertexSet comp = component_of(g, v) - VertexSet::single(v);
    Graph rest = g;
    g.neighbors(v).for_each([&](Vertex u) { rest.remove_edge(v, u); });
    if (component_of(rest, g.neighbors(v).lowest()) != comp) cuts.insert(v);
  }
  return cuts;
}

}  // namespace bondnum
