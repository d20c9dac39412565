#pragma once

// Exact orientable genus search over rotation systems.
//
// The rotation at each vertex is built one successor at a time. Setting
// sigma(y) = z fixes one link alpha(y) -> z of the face permutation, so the
// partially built face permutation is a set of closed cycles (finished faces)
// plus open chains. Each chain ends up inside a single face and every face is
// at least `min_face` long, which bounds the reachable face count from above;
// any open material bounds it from below by one more face.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bondnum/embedding.hpp"
#include "bondnum/graph.hpp"

namespace bondnum {

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{0};  // zero means no wall-clock limit
};

enum class SearchStatus { Exact, BudgetExhausted };

struct GenusResult {
  SearchStatus status = SearchStatus::Exact;
  std::optional<int> genus;  // set when exact
  int lower_bound = 0;
  int upper_bound = 0;
  std::optional<Embedding> witness;  // best embedding found
  std::uint64_t nodes = 0;

  bool exact() const { return status == SearchStatus::Exact; }
};

struct EmbedResult {
  SearchStatus status = SearchStatus::Exact;
  std::optional<Embedding> embedding;  // empty with Exact status means none exists
  std::uint64_t nodes = 0;
};

/// h >= (m - 3n + 6) / 6 from m <= 3(n - chi), for connected graphs with n >= 3.
inline int euler_genus_lower_bound(const Graph& g) {
  if (g.order() < 3) return 0;
  return static_cast<int>(std::max<std::int64_t>(0, ceil_div(g.size() - 3 * g.order() + 6, 6)));
}

/// Number of orientable faces f is determined by the genus: f = 2 - 2h - n + m.
inline int faces_for_genus(const Graph& g, int h) { return 2 - 2 * h - g.order() + g.size(); }
inline int genus_for_faces(const Graph& g, int f) { return (2 - g.order() + g.size() - f) / 2; }

namespace detail {

class RotationSearch {
 public:
  enum class Mode { MaxFaces, MinFaces, TargetFaces };

  RotationSearch(const Graph& g, SearchBudget budget) : g_(g), budget_(budget) {
    edges_ = g.edges();
    const int m = g.size();
    darts_ = 2 * m;
    out_.resize(static_cast<std::size_t>(g.order()));
    local_.assign(static_cast<std::size_t>(darts_), 0);
    for (int i = 0; i < m; ++i) {
      const Edge& e = edges_[static_cast<std::size_t>(i)];
      out_[e.u].push_back(2 * i);
      out_[e.v].push_back(2 * i + 1);
    }
    for (auto& ds : out_) {
      std::sort(ds.begin(), ds.end(), [&](int a, int b) { return head(a) < head(b); });
      for (std::size_t j = 0; j < ds.size(); ++j) local_[ds[j]] = static_cast<int>(j);
    }
    min_face_ = (m >= 2) ? (is_triangle_free(g) ? 4 : 3) : 2;
    order_vertices();
    sigma_.assign(static_cast<std::size_t>(darts_), -1);
    other_end_.resize(static_cast<std::size_t>(darts_));
    len_.assign(static_cast<std::size_t>(darts_), 1);
    for (int d = 0; d < darts_; ++d) other_end_[d] = d;
    short_sum_ = darts_;  // every dart starts as a length-1 chain
    max_cap_ = std::min(m - g.order() + 2, (2 * m) / min_face_);
    if (((max_cap_ - (m - g.order())) % 2 + 2) % 2 != 0) --max_cap_;
    min_cap_ = ((m - g.order()) % 2 != 0) ? 1 : 2;
    if (m == g.order() - 1) max_cap_ = min_cap_ = 1;
    start_ = std::chrono::steady_clock::now();
  }

  int max_cap() const { return max_cap_; }
  int min_cap() const { return min_cap_; }

  /// Runs the search; returns the best face count found (or -1 when none).
  int run(Mode mode, int target = 0) {
    mode_ = mode;
    target_ = target;
    best_ = (mode == Mode::MaxFaces) ? 0 : (mode == Mode::MinFaces ? darts_ + 1 : -1);
    found_ = false;
    done_ = false;
    place(0);
    return found_ ? best_ : -1;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  RotationSystem best_rotation() const {
    RotationSystem r;
    r.order.resize(static_cast<std::size_t>(g_.order()));
    for (Vertex v = 0; v < g_.order(); ++v) {
      const auto& ds = out_[v];
      if (ds.empty()) continue;
      int d = ds.front();
      for (std::size_t j = 0; j < ds.size(); ++j) {
        r.order[v].push_back(head(d));
        d = best_sigma_[d];
      }
    }
    r.signature.assign(edges_.size(), 1);
    return r;
  }

 private:
  Vertex head(int d) const { return (d & 1) ? edges_[d / 2].u : edges_[d / 2].v; }

  // Highest degree first, then repeatedly the vertex with most placed neighbours.
  void order_vertices() {
    const int n = g_.order();
    VertexSet placed;
    for (int i = 0; i < n; ++i) {
      Vertex best = -1;
      auto key = [&](Vertex v) { return std::pair{(g_.neighbors(v) & placed).count(), g_.degree(v)}; };
      for (Vertex v = 0; v < n; ++v) {
        if (placed.contains(v)) continue;
        if (best < 0 || key(v) > key(best)) best = v;
      }
      order_.push_back(best);
      placed.insert(best);
    }
    mirror_vertex_ = -1;
    for (Vertex v : order_)
      if (g_.degree(v) >= 3) {
        mirror_vertex_ = v;
        break;
      }
  }

  void add_chain(int l) {
    if (l >= min_face_) ++long_chains_; else short_sum_ += l;
  }
  void remove_chain(int l) {
    if (l >= min_face_) --long_chains_; else short_sum_ -= l;
  }

  struct Undo {
    bool closed;
    int head_a, tail_b, len_a, len_b, x, z;
  };

  // Adds the face-permutation link x -> z (x a chain tail, z a chain head).
  Undo link(int x, int z) {
    const int ha = other_end_[x];
    if (ha == z) {
      const int l = len_[z];
      remove_chain(l);
      ++closed_;
      return Undo{true, ha, x, l, 0, x, z};
    }
    const int tb = other_end_[z];
    const int la = len_[ha];
    const int lb = len_[z];
    remove_chain(la);
    remove_chain(lb);
    add_chain(la + lb);
    other_end_[ha] = tb;
    other_end_[tb] = ha;
    len_[ha] = len_[tb] = la + lb;
    return Undo{false, ha, tb, la, lb, x, z};
  }

  void unlink(const Undo& u) {
    if (u.closed) {
      --closed_;
      add_chain(u.len_a);
      return;
    }
    remove_chain(u.len_a + u.len_b);
    add_chain(u.len_a);
    add_chain(u.len_b);
    other_end_[u.head_a] = u.x;
    other_end_[u.x] = u.head_a;
    other_end_[u.tail_b] = u.z;
    other_end_[u.z] = u.tail_b;
    len_[u.head_a] = len_[u.x] = u.len_a;
    len_[u.tail_b] = len_[u.z] = u.len_b;
  }

  int upper_faces() const { return closed_ + long_chains_ + short_sum_ / min_face_; }
  int lower_faces() const { return closed_ + ((long_chains_ > 0 || short_sum_ > 0) ? 1 : 0); }

  bool prune() const {
    switch (mode_) {
      case Mode::MaxFaces: return upper_faces() <= best_;
      case Mode::MinFaces: return lower_faces() >= best_;
      case Mode::TargetFaces: return upper_faces() < target_ || lower_faces() > target_;
    }
    return false;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ >= budget_.node_limit) aborted_ = true;
    if ((nodes_ & 0xFFF) == 0 && budget_.time_limit.count() > 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit)
      aborted_ = true;
    return !aborted_;
  }

  void leaf() {
    const int f = closed_;
    bool better = false;
    switch (mode_) {
      case Mode::MaxFaces: better = f > best_; break;
      case Mode::MinFaces: better = f < best_; break;
      case Mode::TargetFaces: better = f == target_; break;
    }
    if (!better) return;
    best_ = f;
    best_sigma_ = sigma_;
    found_ = true;
    if ((mode_ == Mode::MaxFaces && best_ >= max_cap_) || (mode_ == Mode::MinFaces && best_ <= min_cap_) ||
        mode_ == Mode::TargetFaces)
      done_ = true;
  }

  bool stop() const { return done_ || aborted_; }

  void place(std::size_t vi) {
    if (stop()) return;
    if (vi == order_.size()) {
      leaf();
      return;
    }
    const Vertex v = order_[vi];
    const auto& ds = out_[v];
    if (ds.empty()) {
      place(vi + 1);
      return;
    }
    const int first = ds.front();
    extend(vi, first, first, -1, 1U);
  }

  // `cur` is the last dart placed in v's rotation; `second` is sigma(first).
  void extend(std::size_t vi, int first, int cur, int second, std::uint64_t used) {
    const Vertex v = order_[vi];
    const auto& ds = out_[v];
    if (std::popcount(used) == static_cast<int>(ds.size())) {
      if (v == mirror_vertex_ && local_[second] > local_[cur]) return;
      if (!tick()) return;
      sigma_[cur] = first;
      const Undo u = link(cur ^ 1, first);
      if (!prune()) place(vi + 1);
      unlink(u);
      return;
    }
    for (std::size_t j = 1; j < ds.size() && !stop(); ++j) {
      if (used & (std::uint64_t{1} << j)) continue;
      const int z = ds[j];
      if (!tick()) return;
      sigma_[cur] = z;
      const Undo u = link(cur ^ 1, z);
      if (!prune()) extend(vi, first, z, second < 0 ? z : second, used | (std::uint64_t{1} << j));
      unlink(u);
    }
  }

  const Graph& g_;
  SearchBudget budget_;
  std::vector<Edge> edges_;
  int darts_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<int> local_;
  std::vector<Vertex> order_;
  Vertex mirror_vertex_ = -1;
  int min_face_ = 3;

  std::vector<int> sigma_;
  std::vector<int> best_sigma_;
  std::vector<int> other_end_;
  std::vector<int> len_;
  int closed_ = 0;
  int long_chains_ = 0;
  int short_sum_ = 0;

  Mode mode_ = Mode::MaxFaces;
  int target_ = 0;
  int best_ = 0;
  bool found_ = false;
  bool done_ = false;
  bool aborted_ = false;
  int max_cap_ = 0;
  int min_cap_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

inline void require_searchable(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("genus search requires a connected graph");
  if (g.max_degree() > 63) throw std::invalid_argument("genus search supports degrees up to 63");
}

}  // namespace detail

/// Minimum orientable genus h(G): the rotation system with the most faces.
inline GenusResult min_orientable_genus(const Graph& g, SearchBudget budget = {}) {
  detail::require_searchable(g);
  GenusResult r;
  if (g.size() == 0) {
    r.genus = 0;
    r.witness = trace_faces(g, RotationSystem::sorted(g));
    return r;
  }
  detail::RotationSearch s(g, budget);
  const int best = s.run(detail::RotationSearch::Mode::MaxFaces);
  r.nodes = s.nodes();
  r.lower_bound = genus_for_faces(g, s.max_cap());
  if (best > 0) {
    r.witness = trace_faces(g, s.best_rotation());
    r.upper_bound = genus_for_faces(g, best);
  } else {
    r.upper_bound = genus_for_faces(g, s.min_cap());
  }
  if (!s.aborted() || best >= s.max_cap()) {
    r.genus = genus_for_faces(g, best);
    r.lower_bound = r.upper_bound = *r.genus;
  } else {
    r.status = SearchStatus::BudgetExhausted;
  }
  return r;
}

/// Maximum orientable genus h_M(G): the rotation system with the fewest faces.
inline GenusResult max_orientable_genus(const Graph& g, SearchBudget budget = {}) {
  detail::require_searchable(g);
  GenusResult r;
  if (g.size() == 0) {
    r.genus = 0;
    r.witness = trace_faces(g, RotationSystem::sorted(g));
    return r;
  }
  detail::RotationSearch s(g, budget);
  const int best = s.run(detail::RotationSearch::Mode::MinFaces);
  r.nodes = s.nodes();
  r.upper_bound = genus_for_faces(g, s.min_cap());
  if (best > 0) {
    r.witness = trace_faces(g, s.best_rotation());
    r.lower_bound = genus_for_faces(g, best);
  } else {
    r.lower_bound = 0;
  }
  if (!s.aborted() || (best > 0 && best <= s.min_cap())) {
    r.genus = genus_for_faces(g, best);
    r.lower_bound = r.upper_bound = *r.genus;
  } else {
    r.status = SearchStatus::BudgetExhausted;
  }
  return r;
}

/// A 2-cell embedding of g on the orientable surface of genus h, if any.
inline EmbedResult embedding_with_genus(const Graph& g, int h, SearchBudget budget = {}) {
  detail::require_searchable(g);
  EmbedResult r;
  if (h < 0) return r;
  const int target = faces_for_genus(g, h);
  if (g.size() == 0) {
    if (h == 0) r.embedding = trace_faces(g, RotationSystem::sorted(g));
    return r;
  }
  detail::RotationSearch s(g, budget);
  if (target < s.min_cap() || target > s.max_cap()) return r;
  const int f = s.run(detail::RotationSearch::Mode::TargetFaces, target);
  r.nodes = s.nodes();
  if (f == target) {
    r.embedding = trace_faces(g, s.best_rotation());
  } else if (s.aborted()) {
    r.status = SearchStatus::BudgetExhausted;
  }
  return r;
}

/// k_M(G) = m - n + 1 for a connected graph that is not a tree.
inline int max_nonorientable_genus(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("max_nonorientable_genus requires a connected graph");
  if (g.size() == g.order() - 1) throw std::invalid_argument("max_nonorientable_genus is not defined for trees");
  return g.size() - g.order() + 1;
}

}  // namespace bondnum
