#pragma once

// Connected graphs up to isomorphism by canonical augmentation: a child is
// a parent plus one new vertex joined to a nonempty vertex subset, kept only
// when the new vertex is the canonical deletion vertex up to automorphism.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bondnum/canon.hpp"
#include "bondnum/graph.hpp"

namespace bondnum {

inline constexpr int kEnumerateMaxOrder = 10;

/// Connected graphs per order, 0..10.
inline constexpr std::array<std::uint64_t, 11> kConnectedGraphCounts = {0,   1,   1,     2,      6,       21,
                                                                         112, 853, 11117, 261080, 11716571};

namespace detail {

// Among non-cut vertices of maximum degree, the one placed last canonically.
// Returns whether `v` is equivalent to it, and the child's canonical form.
inline bool accept_child(const Graph& child, Vertex v, CanonResult& canon) {
  const VertexSet cuts = cut_vertices(child);
  int top = 0;
  for (Vertex u = 0; u < child.order(); ++u)
    if (!cuts.contains(u)) top = std::max(top, child.degree(u));
  if (child.degree(v) < top) return false;
  canon = canonical_form(child);
  Vertex c = -1;
  for (int i = child.order() - 1; i >= 0; --i) {
    const Vertex u = canon.labeling[i];
    if (!cuts.contains(u) && child.degree(u) == top) {
      c = u;
      break;
    }
  }
  return c == v || same_orbit(child, c, v);
}

template <typename Sink>
void next_level(const std::vector<Graph>& parents, Sink&& sink) {
  for (const Graph& h : parents) {
    const int n = h.order();
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Graph child(n + 1);
      for (const Edge& e : h.edges()) child.add_edge(e.u, e.v);
      VertexSet(mask).for_each([&](Vertex u) { child.add_edge(u, n); });
      CanonResult canon;
      if (!accept_child(child, n, canon)) continue;
      if (!seen.insert(canon.code).second) continue;
      sink(relabel(child, canon.labeling));
    }
  }
}

}  // namespace detail

/// Calls f(graph) once per isomorphism class of connected graphs on n vertices,
/// each in canonical labelling, in a fixed order.
template <typename F>
void for_each_connected_graph(int n, F&& f) {
  if (n < 1 || n > kEnumerateMaxOrder) throw std::invalid_argument("enumeration supports 1 <= n <= 10");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k < n; ++k) {
    std::vector<Graph> next;
    detail::next_level(level, [&](Graph g) { next.push_back(std::move(g)); });
    level = std::move(next);
  }
  if (n == 1) {
    f(level.front());
    return;
  }
  detail::next_level(level, [&](const Graph& g) { f(g); });
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace bondnum
