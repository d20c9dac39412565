#pragma once

// graph6 (short form, n <= 62) and "n m / u v" adjacency-list text I/O.

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bondnum/graph.hpp"

namespace bondnum {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw FormatError("graph6: character outside printable range 63-126");

  const int head = text[0] - 63;
  if (head == 63) throw FormatError("graph6: long-form size header is not supported");
  if (head == 0) throw FormatError("graph6: empty graph (n = 0) is not accepted");
  const int n = head;

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - 1 != groups)
    throw FormatError("graph6: expected " + std::to_string(groups) + " data bytes for n = " +
                      std::to_string(n) + ", got " + std::to_string(text.size() - 1));

  Graph g(n);
  std::size_t k = 0;
  auto bit = [&](std::size_t i) {
    const int byte = text[1 + i / 6] - 63;
    return (byte >> (5 - static_cast<int>(i % 6))) & 1;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit(k)) g.add_edge(i, j);
  for (std::size_t i = bits; i < groups * 6; ++i)
    if (bit(i)) throw FormatError("graph6: nonzero padding bits");
  return g;
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw std::invalid_argument("graph6: n = " + std::to_string(n) + " exceeds the short-form limit of 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// "n m" on the first line followed by m lines "u v" (0-indexed).
inline Graph parse_adjacency_list(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) throw FormatError("adjacency list: missing 'n m' header");
  if (n <= 0) throw FormatError("adjacency list: n must be positive");
  if (n > Graph::kMaxVertices) throw FormatError("adjacency list: n exceeds 64");
  if (m < 0) throw FormatError("adjacency list: negative edge count");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) throw FormatError("adjacency list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("adjacency list: vertex out of range");
    if (u == v) throw FormatError("adjacency list: self-loop");
    if (g.adjacent(u, v)) throw FormatError("adjacency list: parallel edge");
    g.add_edge(u, v);
  }
  return g;
}

inline std::string write_adjacency_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

/// Reads a graph file: either an adjacency list ("n m" header) or one graph6
/// string per line, with an optional ">>graph6<<" header.
inline std::vector<Graph> read_graphs(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream lines(content);
  std::string first;
  while (std::getline(lines, first)) {
    if (first.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::vector<Graph> out;
  const auto digit_start = first.find_first_not_of(" \t");
  if (digit_start != std::string::npos && std::isdigit(static_cast<unsigned char>(first[digit_start]))) {
    std::istringstream whole(content);
    out.push_back(parse_adjacency_list(whole));
    return out;
  }
  std::istringstream again(content);
  std::string line;
  while (std::getline(again, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line == kGraph6Header) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graphs(in);
}

}  // namespace bondnum
