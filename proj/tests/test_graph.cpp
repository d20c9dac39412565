#include <gtest/gtest.h>

#include <random>

#include "bondnum/graph.hpp"

using namespace bondnum;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s;
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(5);
  EXPECT_EQ(s.count(), 2);
  EXPECT_TRUE(s.contains(5));
  EXPECT_EQ(s.lowest(), 3);
  s.erase(3);
  EXPECT_EQ(s.to_vector(), std::vector<Vertex>{5});
  EXPECT_EQ(VertexSet::first(64).count(), 64);
  EXPECT_EQ((VertexSet::first(4) - VertexSet::single(1)).to_vector(), (std::vector<Vertex>{0, 2, 3}));
}

TEST(Edge, NormalizesEndpoints) {
  Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_THROW(Edge(1, 1), std::invalid_argument);
}

TEST(Graph, AddRemoveAndDegrees) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.min_degree(), 0);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.size(), 1);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::out_of_range);
  EXPECT_THROW(Graph(65), std::invalid_argument);
}

TEST(Graph, EdgesInLexicographicOrder) {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  g.add_edge(0, 1);
  const auto e = g.edges();
  ASSERT_EQ(e.size(), 3U);
  EXPECT_EQ(e[0], Edge(0, 1));
  EXPECT_EQ(e[1], Edge(0, 3));
  EXPECT_EQ(e[2], Edge(2, 3));
}

TEST(Generators, SmallFamilies) {
  EXPECT_EQ(complete_graph(5).size(), 10);
  EXPECT_EQ(cycle_graph(6).size(), 6);
  EXPECT_EQ(path_graph(4).size(), 3);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Generators, CartesianProduct) {
  const Graph k2 = complete_graph(2);
  const Graph c4 = cartesian_product(k2, k2);
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.size(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2);
  EXPECT_TRUE(is_connected(c4));

  const Graph k33 = cartesian_product(complete_graph(3), complete_graph(3));
  EXPECT_EQ(k33.order(), 9);
  EXPECT_EQ(k33.size(), 18);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(k33.degree(v), 4);
  EXPECT_FALSE(is_triangle_free(k33));

  const Graph p = path_graph(4);
  EXPECT_EQ(cartesian_product(Graph(1), p), p);
}

TEST(Queries, ConnectivityAndComponents) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(connected_components(g).size(), 3U);
  EXPECT_THROW(is_connected(Graph(0)), std::invalid_argument);
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Queries, TriangleFreeAndTrees) {
  EXPECT_TRUE(is_triangle_free(cycle_graph(4)));
  EXPECT_FALSE(is_triangle_free(complete_graph(3)));
  EXPECT_TRUE(is_tree(star_graph(3)));
  EXPECT_FALSE(is_tree(cycle_graph(5)));
}

TEST(Queries, CommonNeighbors) {
  EXPECT_EQ(common_neighbors(complete_graph(4), 0, 1), 2);
  EXPECT_EQ(common_neighbors(cycle_graph(4), 0, 1), 0);
  EXPECT_THROW(common_neighbors(complete_graph(3), 1, 1), std::invalid_argument);
  EXPECT_THROW(common_neighbors(complete_graph(3), 0, 7), std::out_of_range);
}

TEST(Queries, InducedSubgraphAndRemoval) {
  const Graph k4 = complete_graph(4);
  const Graph tri = induced_subgraph(k4, VertexSet(0b1011));
  EXPECT_EQ(tri, complete_graph(3));
  const Graph h = remove_edges(k4, {Edge(0, 1), Edge(2, 3)});
  EXPECT_EQ(h.size(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(h.degree(v), 2);
  EXPECT_TRUE(is_connected(h));
}

TEST(Queries, CutVerticesMatchDefinition) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 35);
    const VertexSet cuts = cut_vertices(g);
    const auto base = connected_components(g).size();
    for (Vertex v = 0; v < g.order(); ++v) {
      // v is a cut vertex iff deleting it leaves more components (v itself excluded).
      const Graph rest = induced_subgraph(g, g.vertices() - VertexSet::single(v));
      const std::size_t after = rest.order() == 0 ? 0 : connected_components(rest).size();
      const bool isolated = g.degree(v) == 0;
      const std::size_t expect_same = isolated ? base - 1 : base;
      EXPECT_EQ(cuts.contains(v), after > expect_same) << "vertex " << v;
    }
  }
}
