#pragma once

// Exact domination number by branch and bound, plus a subset-enumeration oracle.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bondnum/graph.hpp"

namespace bondnum {

struct DominationResult {
  int gamma = 0;
  VertexSet witness;
};

inline bool is_dominating_set(const Graph& g, VertexSet d) {
  if (!(d - g.vertices()).empty()) throw std::out_of_range("dominating set contains an invalid vertex");
  VertexSet covered;
  d.for_each([&](Vertex v) { covered |= g.closed_neighborhood(v); });
  return covered == g.vertices();
}

namespace detail {

class DominationSolver {
 public:
  explicit DominationSolver(const Graph& g) : g_(g), all_(g.vertices()) {
    closed_.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) closed_.push_back(g.closed_neighborhood(v));
  }

  DominationResult solve(std::optional<VertexSet> warm) {
    best_ = greedy();
    if (warm && warm->count() < best_.count() && is_dominating_set(g_, *warm)) best_ = *warm;
    search(VertexSet{}, VertexSet{}, VertexSet{});
    return DominationResult{best_.count(), best_};
  }

 private:
  // Repeatedly takes the vertex covering the most uncovered vertices.
  VertexSet greedy() const {
    VertexSet d;
    VertexSet covered;
    while (covered != all_) {
      Vertex pick = -1;
      int gain = -1;
      for (Vertex v = 0; v < g_.order(); ++v) {
        const int c = (closed_[v] - covered).count();
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      d.insert(pick);
      covered |= closed_[pick];
    }
    return d;
  }

  // Uncovered vertices with pairwise disjoint closed neighbourhoods each need
  // their own dominator; `free` restricts the dominators still allowed.
  int packing_bound(VertexSet uncovered, VertexSet free) const {
    int count = 0;
    VertexSet blocked;
    uncovered.for_each([&](Vertex u) {
      const VertexSet reach = closed_[u] & free;
      if ((reach & blocked).empty()) {
        ++count;
        blocked |= reach;
      }
    });
    return count;
  }

  void search(VertexSet chosen, VertexSet covered, VertexSet forbidden) {
    if (covered == all_) {
      if (chosen.count() < best_.count()) best_ = chosen;
      return;
    }
    const VertexSet uncovered = all_ - covered;
    const VertexSet free = all_ - forbidden - chosen;
    if (chosen.count() + 1 >= best_.count()) return;

    Vertex pivot = -1;
    int pivot_options = 0;
    int max_gain = 0;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (free.contains(v)) max_gain = std::max(max_gain, (closed_[v] & uncovered).count());
    bool dead = false;
    uncovered.for_each([&](Vertex u) {
      if (dead) return;
      const int options = (closed_[u] & free).count();
      if (options == 0) dead = true;
      if (pivot < 0 || options < pivot_options) {
        pivot = u;
        pivot_options = options;
      }
    });
    if (dead) return;

    const int need = std::max((uncovered.count() + max_gain - 1) / max_gain, packing_bound(uncovered, free));
    if (chosen.count() + need >= best_.count()) return;

    std::vector<Vertex> cands = (closed_[pivot] & free).to_vector();
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      return (closed_[a] & uncovered).count() > (closed_[b] & uncovered).count();
    });
    for (Vertex w : cands) {
      VertexSet next = chosen;
      next.insert(w);
      search(next, covered | closed_[w], forbidden);
      forbidden.insert(w);
    }
  }

  const Graph& g_;
  VertexSet all_;
  std::vector<VertexSet> closed_;
  VertexSet best_;
};

}  // namespace detail

/// Exact domination number. `warm` may supply a known dominating set; it only
/// seeds the incumbent and never changes the result.
inline DominationResult domination_number(const Graph& g, std::optional<VertexSet> warm = std::nullopt) {
  if (g.order() == 0) throw std::invalid_argument("domination_number requires at least one vertex");
  return detail::DominationSolver(g).solve(warm);
}

inline constexpr int kDominationOracleMaxOrder = 20;

/// Smallest dominating set size over all vertex subsets.
inline int domination_number_oracle(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("domination oracle requires at least one vertex");
  if (n > kDominationOracleMaxOrder) throw std::invalid_argument("domination oracle is limited to n <= 20");
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) closed[v] = static_cast<std::uint32_t>(g.closed_neighborhood(v).bits());
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  int best = n;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    std::uint32_t cover = 0;
    for (std::uint32_t b = mask; b != 0; b &= b - 1) cover |= closed[std::countr_zero(b)];
    if (cover == full) best = size;
  }
  return best;
}

}  // namespace bondnum
