#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bondnum/graph6.hpp"

using namespace bondnum;

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(write_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(write_graph6(cycle_graph(4)), "Cl");
  const Graph petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10);
  EXPECT_EQ(petersen.size(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<D~{\n"), complete_graph(5));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), FormatError);
  EXPECT_THROW(parse_graph6("?"), FormatError);      // n = 0
  EXPECT_THROW(parse_graph6("D~"), FormatError);     // too short
  EXPECT_THROW(parse_graph6("D~{{"), FormatError);   // too long
  EXPECT_THROW(parse_graph6("D~ "), FormatError);    // character out of range
  EXPECT_THROW(parse_graph6("~?@d"), FormatError);   // long form
  EXPECT_THROW(parse_graph6("A`"), FormatError);     // nonzero padding
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 62);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

TEST(Graph6, OrderLimit) {
  EXPECT_THROW(write_graph6(Graph(63)), std::invalid_argument);
}

TEST(AdjacencyList, RoundTripAndErrors) {
  const Graph g = cycle_graph(5);
  std::istringstream in(write_adjacency_list(g));
  EXPECT_EQ(parse_adjacency_list(in), g);

  std::istringstream loop("2 1\n0 0\n");
  EXPECT_THROW(parse_adjacency_list(loop), FormatError);
  std::istringstream dup("3 2\n0 1\n1 0\n");
  EXPECT_THROW(parse_adjacency_list(dup), FormatError);
  std::istringstream range("3 1\n0 3\n");
  EXPECT_THROW(parse_adjacency_list(range), FormatError);
  std::istringstream shortfile("3 2\n0 1\n");
  EXPECT_THROW(parse_adjacency_list(shortfile), FormatError);
}

TEST(ReadGraphs, DetectsFormat) {
  std::istringstream g6(">>graph6<<\nD~{\nCl\n\n");
  const auto a = read_graphs(g6);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0], complete_graph(5));
  EXPECT_EQ(a[1], cycle_graph(4));

  std::istringstream adj("3 3\n0 1\n1 2\n0 2\n");
  const auto b = read_graphs(adj);
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(b[0], complete_graph(3));
}
