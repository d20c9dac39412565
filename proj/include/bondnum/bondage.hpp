#pragma once

// Exact bondage number by iterative deepening over edge subsets, plus the
// edge-local upper bound and an edge-subset oracle.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bondnum/domination.hpp"
#include "bondnum/graph.hpp"

namespace bondnum {

/// Raised for graphs whose domination number cannot be increased (no edges).
class UndefinedBondage : public std::domain_error {
 public:
  UndefinedBondage() : std::domain_error("bondage number is undefined for a graph without edges") {}
};

struct BondageResult {
  int b = 0;
  EdgeSet witness;
};

/// min over edges uv of d(u) + d(v) - 1 - |N(u) & N(v)|.
inline int edge_local_bound(const Graph& g) {
  if (g.size() == 0) throw UndefinedBondage();
  int best = 2 * g.order();
  for (const Edge& e : g.edges())
    best = std::min(best, g.degree(e.u) + g.degree(e.v) - 1 - common_neighbors(g, e.u, e.v));
  return best;
}

inline bool hartnell_rall_edge_floor(const Graph& g, int b) {
  return 4 * static_cast<long long>(g.size()) >= static_cast<long long>(g.order()) * (b + 1);
}

namespace detail {

// Visits every k-subset of {0..m-1} in lexicographic order until `f` returns true.
template <typename F>
bool for_each_combination(int m, int k, F&& f) {
  if (k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Exact bondage number with a minimum-size witness.
///
/// Every minimum dominating set found along the way is kept; a subset B is
/// settled without a solver call whenever one of them still dominates G - B.
inline BondageResult bondage_number(const Graph& g) {
  if (g.order() == 0 || g.size() == 0) throw UndefinedBondage();
  const std::vector<Edge> edges = g.edges();
  const DominationResult base = domination_number(g);
  std::vector<VertexSet> known{base.witness};
  const int m = g.size();

  for (int k = 1; k <= m; ++k) {
    BondageResult found;
    const bool hit = detail::for_each_combination(m, k, [&](const std::vector<int>& idx) {
      Graph h = g;
      for (int i : idx) h.remove_edge(edges[i].u, edges[i].v);
      for (std::size_t j = 0; j < known.size(); ++j) {
        if (is_dominating_set(h, known[j])) {
          if (j > 0) std::swap(known[j], known[j - 1]);
          return false;
        }
      }
      const DominationResult r = domination_number(h);
      if (r.gamma > base.gamma) {
        found.b = k;
        for (int i : idx) found.witness.push_back(edges[i]);
        return true;
      }
      known.push_back(r.witness);
      return false;
    });
    if (hit) return found;
  }
  throw std::logic_error("bondage search exhausted all edge subsets");
}

inline constexpr int kBondageOracleMaxEdges = 18;

/// Smallest edge subset raising the domination number, by plain enumeration.
inline int bondage_number_oracle(const Graph& g) {
  if (g.size() == 0) throw UndefinedBondage();
  if (g.size() > kBondageOracleMaxEdges) throw std::invalid_argument("bondage oracle is limited to m <= 18");
  const std::vector<Edge> edges = g.edges();
  const int gamma = domination_number_oracle(g);
  const int m = g.size();
  for (int k = 1; k <= m; ++k) {
    const bool hit = detail::for_each_combination(m, k, [&](const std::vector<int>& idx) {
      Graph h = g;
      for (int i : idx) h.remove_edge(edges[i].u, edges[i].v);
      return domination_number_oracle(h) > gamma;
    });
    if (hit) return k;
  }
  throw std::logic_error("bondage oracle exhausted all edge subsets");
}

}  // namespace bondnum
