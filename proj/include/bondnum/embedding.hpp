#pragma once

// Rotation-system embeddings. A rotation system fixes a cyclic order of the
// edge-ends at each vertex and a sign on each edge; tracing it always yields
// a 2-cell embedding, whose surface is read off from the face count.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bondnum/graph.hpp"
#include "bondnum/numeric.hpp"

namespace bondnum {

enum class SurfaceKind { Orientable, NonOrientable };

struct Surface {
  SurfaceKind kind = SurfaceKind::Orientable;
  int genus = 0;

  static Surface orientable(int h) {
    if (h < 0) throw std::invalid_argument("orientable genus must be >= 0");
    return {SurfaceKind::Orientable, h};
  }
  static Surface nonorientable(int k) {
    if (k < 1) throw std::invalid_argument("non-orientable genus must be >= 1");
    return {SurfaceKind::NonOrientable, k};
  }

  bool is_orientable() const { return kind == SurfaceKind::Orientable; }
  int euler_characteristic() const { return is_orientable() ? 2 - 2 * genus : 2 - genus; }
  std::string name() const { return (is_orientable() ? "S" : "N") + std::to_string(genus); }
  bool operator==(const Surface&) const = default;
};

/// order[v] lists the neighbours of v in cyclic order; signature[i] is the
/// sign (+1 or -1) of edge i in Graph::edges() order.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
  std::vector<int> signature;

  /// Neighbours in increasing order, every edge positive.
  static RotationSystem sorted(const Graph& g) {
    RotationSystem r;
    r.order.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) r.order[v] = g.neighbors(v).to_vector();
    r.signature.assign(static_cast<std::size_t>(g.size()), 1);
    return r;
  }

  bool all_positive() const {
    for (int s : signature)
      if (s != 1) return false;
    return true;
  }
};

inline void validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (rot.order.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("rotation system: wrong number of vertices");
  if (rot.signature.size() != static_cast<std::size_t>(g.size()))
    throw std::invalid_argument("rotation system: wrong number of edge signatures");
  for (int s : rot.signature)
    if (s != 1 && s != -1) throw std::invalid_argument("rotation system: signatures must be +1 or -1");
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet seen;
    for (Vertex w : rot.order[v]) {
      if (!g.valid_vertex(w) || !g.adjacent(v, w))
        throw std::invalid_argument("rotation system: vertex " + std::to_string(v) + " lists a non-neighbour");
      if (seen.contains(w))
        throw std::invalid_argument("rotation system: vertex " + std::to_string(v) + " lists an edge-end twice");
      seen.insert(w);
    }
    if (seen != g.neighbors(v))
      throw std::invalid_argument("rotation system: vertex " + std::to_string(v) + " is missing an edge-end");
  }
}

struct Face {
  std::vector<Vertex> walk;  // boundary walk; consecutive entries (cyclically) are joined by an edge
  int length() const { return static_cast<int>(walk.size()); }
};

struct Embedding {
  Graph graph;
  RotationSystem rotation;
  std::vector<Face> faces;
  /// Per edge (Graph::edges() order): the faces on its two sides and their
  /// boundary lengths (m', m''). An edge lying twice on one face lists it twice.
  std::vector<std::pair<int, int>> side_faces;
  std::vector<std::pair<int, int>> side_lengths;
  int euler_characteristic = 2;
  bool orientable = true;

  int face_count() const { return static_cast<int>(faces.size()); }
  Surface surface() const {
    return orientable ? Surface::orientable((2 - euler_characteristic) / 2)
                      : Surface::nonorientable(2 - euler_characteristic);
  }
};

namespace detail {

/// Dart 2i runs from edges()[i].u to edges()[i].v, dart 2i+1 the other way.
struct DartTable {
  std::vector<Edge> edges;
  std::vector<int> edge_id;   // n*n matrix, -1 when not adjacent
  std::vector<int> next_out;  // successor in the rotation at the dart's tail
  std::vector<int> prev_out;
  int n = 0;

  int edge_index(Vertex a, Vertex b) const { return edge_id[static_cast<std::size_t>(a * n + b)]; }
  int dart(Vertex from, Vertex to) const { return 2 * edge_index(from, to) + (from < to ? 0 : 1); }
  Vertex tail(int d) const { return (d & 1) ? edges[d / 2].v : edges[d / 2].u; }
  Vertex head(int d) const { return (d & 1) ? edges[d / 2].u : edges[d / 2].v; }

  DartTable(const Graph& g, const RotationSystem& rot) : edges(g.edges()), n(g.order()) {
    edge_id.assign(static_cast<std::size_t>(n * n), -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      edge_id[static_cast<std::size_t>(edges[i].u * n + edges[i].v)] = static_cast<int>(i);
      edge_id[static_cast<std::size_t>(edges[i].v * n + edges[i].u)] = static_cast<int>(i);
    }
    next_out.assign(2 * edges.size(), -1);
    prev_out.assign(2 * edges.size(), -1);
    for (Vertex v = 0; v < n; ++v) {
      const auto& ord = rot.order[v];
      const std::size_t d = ord.size();
      for (std::size_t j = 0; j < d; ++j) {
        const int a = dart(v, ord[j]);
        const int b = dart(v, ord[(j + 1) % d]);
        next_out[a] = b;
        prev_out[b] = a;
      }
    }
  }
};

/// True if every cycle carries an even number of negative edges.
inline bool signature_balanced(const Graph& g, const std::vector<Edge>& edges, const std::vector<int>& sig) {
  std::vector<int> sign(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, sig[i]);
    adj[edges[i].v].emplace_back(edges[i].u, sig[i]);
  }
  for (Vertex root = 0; root < g.order(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, s] : adj[x]) {
        if (sign[y] == 0) {
          sign[y] = sign[x] * s;
          stack.push_back(y);
        } else if (sign[y] != sign[x] * s) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Traces the faces of a (signed) rotation system. A traversal state is a dart
/// plus a local orientation; the step permutation on states has exactly two
/// orbits per face (one per direction), paired by reversal.
inline Embedding trace_faces(const Graph& g, const RotationSystem& rot) {
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("trace_faces requires a connected graph");
  validate_rotation(g, rot);

  Embedding emb;
  emb.graph = g;
  emb.rotation = rot;
  const int m = g.size();
  const int n = g.order();
  if (m == 0) {
    emb.faces.push_back(Face{});
    emb.euler_characteristic = 2;
    emb.orientable = true;
    return emb;
  }

  const detail::DartTable t(g, rot);
  const int states = 4 * m;
  auto encode = [](int dart, int s) { return 2 * dart + (s > 0 ? 0 : 1); };
  auto step = [&](int state) {
    const int d = state / 2;
    const int s = (state & 1) ? -1 : 1;
    const int s2 = s * rot.signature[d / 2];
    const int rev = d ^ 1;
    return encode(s2 > 0 ? t.next_out[rev] : t.prev_out[rev], s2);
  };
  auto reverse = [&](int state) {
    const int d = state / 2;
    const int s = (state & 1) ? -1 : 1;
    return encode(d ^ 1, -s * rot.signature[d / 2]);
  };

  std::vector<char> seen(static_cast<std::size_t>(states), 0);
  std::vector<std::vector<int>> edge_faces(static_cast<std::size_t>(m));
  for (int start = 0; start < states; ++start) {
    if (seen[start]) continue;
    Face face;
    const int face_id = static_cast<int>(emb.faces.size());
    int x = start;
    do {
      seen[x] = 1;
      face.walk.push_back(t.tail(x / 2));
      edge_faces[(x / 2) / 2].push_back(face_id);
      x = step(x);
    } while (x != start);

    const int r0 = reverse(start);
    if (seen[r0]) throw std::logic_error("trace_faces: face orbit is its own reverse");
    x = r0;
    do {
      if (seen[x]) throw std::logic_error("trace_faces: reversed orbit overlaps a traced face");
      seen[x] = 1;
      x = step(x);
    } while (x != r0);
    emb.faces.push_back(std::move(face));
  }

  emb.side_faces.resize(static_cast<std::size_t>(m));
  emb.side_lengths.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    if (edge_faces[e].size() != 2) throw std::logic_error("trace_faces: edge not bounded by exactly two face sides");
    const int f1 = edge_faces[e][0];
    const int f2 = edge_faces[e][1];
    emb.side_faces[e] = {f1, f2};
    emb.side_lengths[e] = {emb.faces[f1].length(), emb.faces[f2].length()};
  }

  emb.euler_characteristic = n - m + emb.face_count();
  emb.orientable = detail::signature_balanced(g, t.edges, rot.signature);
  if (emb.orientable && (emb.euler_characteristic % 2 != 0))
    throw std::logic_error("trace_faces: orientable embedding with odd Euler characteristic");
  return emb;
}

// ---------------------------------------------------------------------------
// Edge curvature

struct EdgeCurvature {
  Edge edge;
  ExactRational w;  // 1/d(u) + 1/d(v)
  ExactRational f;  // 1/m' + 1/m''
  ExactRational q;  // w + f - 1 - chi/m
};

struct CurvatureProfile {
  std::vector<EdgeCurvature> edges;
  ExactRational total_w;
  ExactRational total_f;
  ExactRational total_q;
};

inline CurvatureProfile edge_curvatures(const Embedding& emb, const Surface& s) {
  if (s.euler_characteristic() != emb.euler_characteristic)
    throw std::invalid_argument("edge_curvatures: embedding has Euler characteristic " +
                                std::to_string(emb.euler_characteristic) + ", surface " + s.name() + " has " +
                                std::to_string(s.euler_characteristic()));
  const Graph& g = emb.graph;
  const int m = g.size();
  if (m == 0) throw std::invalid_argument("edge_curvatures: graph has no edges");
  CurvatureProfile p;
  const ExactRational chi_share(BigInt(emb.euler_characteristic), BigInt(m));
  const auto edges = g.edges();
  for (int i = 0; i < m; ++i) {
    const Edge& e = edges[static_cast<std::size_t>(i)];
    EdgeCurvature c;
    c.edge = e;
    c.w = ExactRational(1, g.degree(e.u)) + ExactRational(1, g.degree(e.v));
    c.f = ExactRational(1, emb.side_lengths[i].first) + ExactRational(1, emb.side_lengths[i].second);
    c.q = c.w + c.f - ExactRational(1) - chi_share;
    p.total_w += c.w;
    p.total_f += c.f;
    p.total_q += c.q;
    p.edges.push_back(std::move(c));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Vertex-count lower bounds for 2-cell embeddings

/// Least n admitting a 2-cell embedding on `s`: n >= (3 + sqrt(17 - 8 chi)) / 2
/// in general, n >= 2 + sqrt(4 (2 - chi)) for triangle-free graphs.
inline int min_vertices_on_surface(const Surface& s, bool triangle_free) {
  if (s.is_orientable() && s.genus == 0) return 1;
  const std::int64_t g = s.genus;
  if (!triangle_free) {
    const std::int64_t radicand = s.is_orientable() ? 16 * g + 1 : 8 * g + 1;
    return static_cast<int>(ceil_sqrt_expr(3, radicand, 2));
  }
  const std::int64_t radicand = s.is_orientable() ? 8 * g : 4 * g;
  return static_cast<int>(ceil_sqrt_expr(2, radicand, 1));
}

// ---------------------------------------------------------------------------
// Text serialisation
//
//   embedding n=<n> m=<m> faces=<f> chi=<chi> surface=<S|N><genus>
//   rotation <v>: <w1> <w2> ...
//   signature <u> <v> <+|->
//   face <i>: <v0> <v1> ...

inline std::string write_embedding(const Embedding& emb) {
  std::ostringstream os;
  const Graph& g = emb.graph;
  os << "embedding n=" << g.order() << " m=" << g.size() << " faces=" << emb.face_count()
     << " chi=" << emb.euler_characteristic << " surface=" << emb.surface().name() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "rotation " << v << ':';
    for (Vertex w : emb.rotation.order[v]) os << ' ' << w;
    os << '\n';
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    os << "signature " << edges[i].u << ' ' << edges[i].v << ' ' << (emb.rotation.signature[i] > 0 ? '+' : '-')
       << '\n';
  for (std::size_t i = 0; i < emb.faces.size(); ++i) {
    os << "face " << i << ':';
    for (Vertex v : emb.faces[i].walk) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

/// Reads the rotation and signature lines written by write_embedding; the
/// graph is rebuilt from the rotations. Other lines are ignored.
inline std::pair<Graph, RotationSystem> parse_embedding(std::istream& in) {
  std::vector<std::vector<Vertex>> order;
  std::vector<std::pair<Edge, int>> signs;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "rotation") {
      int v = 0;
      char colon = 0;
      if (!(ls >> v >> colon) || colon != ':' || v < 0 || v >= Graph::kMaxVertices)
        throw std::invalid_argument("embedding text: malformed rotation line");
      if (static_cast<int>(order.size()) <= v) order.resize(static_cast<std::size_t>(v) + 1);
      int w = 0;
      while (ls >> w) order[v].push_back(w);
    } else if (tag == "signature") {
      int u = 0;
      int v = 0;
      char s = 0;
      if (!(ls >> u >> v >> s) || (s != '+' && s != '-'))
        throw std::invalid_argument("embedding text: malformed signature line");
      signs.emplace_back(Edge(u, v), s == '+' ? 1 : -1);
    }
  }
  Graph g(static_cast<int>(order.size()));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : order[v]) {
      if (w < 0 || w >= g.order() || w == v) throw std::invalid_argument("embedding text: bad neighbour");
      g.add_edge(v, w);
    }
  RotationSystem rot;
  rot.order = std::move(order);
  rot.signature.assign(static_cast<std::size_t>(g.size()), 1);
  const auto edges = g.edges();
  for (const auto& [e, s] : signs) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw std::invalid_argument("embedding text: signature on a non-edge");
    rot.signature[static_cast<std::size_t>(it - edges.begin())] = s;
  }
  validate_rotation(g, rot);
  return {std::move(g), std::move(rot)};
}

}  // namespace bondnum
