#pragma once

// Canonical labelling for small graphs by colour refinement and
// individualisation, with orbit pruning from automorphisms found at leaves.
// The canonical code is the largest upper-triangle adjacency word (graph6 bit
// order) over all leaves of the search tree.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bondnum/graph.hpp"

namespace bondnum {

inline constexpr int kCanonMaxOrder = 11;  // n(n-1)/2 bits must fit in 64

using Labeling = std::vector<Vertex>;  // labeling[i] = vertex placed at position i

/// Adjacency bits of g read in the order (0,1), (0,2), (1,2), (0,3), ... of positions.
inline std::uint64_t adjacency_code(const Graph& g, const Labeling& lab) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(lab[i], lab[j]) ? 1U : 0U);
  return code;
}

/// Graph whose vertex i is lab[i] of g.
inline Graph relabel(const Graph& g, const Labeling& lab) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < lab.size(); ++i) pos[static_cast<std::size_t>(lab[i])] = static_cast<int>(i);
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(pos[e.u], pos[e.v]);
  return out;
}

struct CanonResult {
  Labeling labeling;
  std::uint64_t code = 0;
};

namespace detail {

class Canonizer {
 public:
  Canonizer(const Graph& g, std::vector<int> colours) : g_(g), n_(g.order()) {
    if (colours.empty()) colours.assign(static_cast<std::size_t>(n_), 0);
    if (static_cast<int>(colours.size()) != n_) throw std::invalid_argument("colour vector has the wrong length");
    // Compress the given colours to ranks 0..c-1, keeping their order.
    std::vector<int> sorted = colours;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : colours) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    root_ = std::move(colours);
  }

  CanonResult run() {
    std::vector<Vertex> prefix;
    search(root_, prefix);
    return CanonResult{best_lab_, best_code_};
  }

 private:
  // Splits colour classes by neighbour counts per class until stable.
  void refine(std::vector<int>& col) const {
    int cells = 1 + *std::max_element(col.begin(), col.end());
    while (true) {
      std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) {
        auto& k = key[v];
        k.assign(static_cast<std::size_t>(cells) + 1, 0);
        k[0] = col[v];
        g_.neighbors(v).for_each([&](Vertex w) { ++k[1 + col[w]]; });
      }
      std::vector<Vertex> order(static_cast<std::size_t>(n_));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
      int next = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && key[order[i]] != key[order[i - 1]]) ++next;
        col[order[i]] = next;
      }
      if (next + 1 == cells) return;
      cells = next + 1;
    }
  }

  static std::vector<int> individualize(const std::vector<int>& col, Vertex v) {
    std::vector<int> out = col;
    const int c = col[v];
    for (std::size_t w = 0; w < out.size(); ++w)
      if (col[w] > c || (col[w] == c && static_cast<Vertex>(w) != v)) ++out[w];
    return out;
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by stored automorphisms fixing `prefix`.
  std::vector<int> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& perm : autos_) {
      bool fixes = true;
      for (Vertex p : prefix)
        if (perm[p] != p) fixes = false;
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void leaf(const std::vector<int>& col) {
    Labeling lab(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) lab[col[v]] = v;
    const std::uint64_t code = adjacency_code(g_, lab);
    auto record = [&](const Labeling& other) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) perm[other[i]] = lab[i];
      autos_.push_back(std::move(perm));
    };
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      return;
    }
    if (code == first_code_) record(first_lab_);
    else if (code == best_code_) record(best_lab_);
    if (code > best_code_) {
      best_code_ = code;
      best_lab_ = lab;
    }
  }

  void search(std::vector<int> col, std::vector<Vertex>& prefix) {
    refine(col);
    int target = -1;
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) ++size[col[v]];
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(col);
      return;
    }
    std::vector<Vertex> done;
    for (Vertex v = 0; v < n_; ++v) {
      if (col[v] != target) continue;
      if (!done.empty()) {
        const std::vector<int> orb = orbits(prefix);
        bool seen = false;
        for (Vertex w : done)
          if (orb[w] == orb[v]) seen = true;
        if (seen) continue;
      }
      prefix.push_back(v);
      search(individualize(col, v), prefix);
      prefix.pop_back();
      done.push_back(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> root_;
  bool have_first_ = false;
  Labeling first_lab_;
  Labeling best_lab_;
  std::uint64_t first_code_ = 0;
  std::uint64_t best_code_ = 0;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace detail

/// Canonical labelling of g. Optional vertex colours are respected: vertices
/// of smaller colour come first, and only colour-preserving relabellings count.
inline CanonResult canonical_form(const Graph& g, std::vector<int> colours = {}) {
  if (g.order() < 1) throw std::invalid_argument("canonical_form requires at least one vertex");
  if (g.order() > kCanonMaxOrder) throw std::invalid_argument("canonical_form supports at most 11 vertices");
  return detail::Canonizer(g, std::move(colours)).run();
}

inline std::uint64_t canonical_code(const Graph& g) { return canonical_form(g).code; }

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

/// True iff some automorphism of g maps u to v.
inline bool same_orbit(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  std::vector<int> cu(static_cast<std::size_t>(g.order()), 1);
  std::vector<int> cv = cu;
  cu[u] = 0;
  cv[v] = 0;
  return canonical_form(g, cu).code == canonical_form(g, cv).code;
}

}  // namespace bondnum
