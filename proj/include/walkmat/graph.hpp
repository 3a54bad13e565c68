#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walkmat {

/// Unordered edge with 1-based endpoints, as used by edge lists and graph6 tools.
struct Edge {
  std::size_t u;
  std::size_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown by graph6 and edge-list readers. `offset()` is the byte (graph6)
/// or token (edge list) position where decoding failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Simple undirected graph on vertices 0..n-1 with a dense symmetric 0/1
/// adjacency. Values are immutable once built; all transformations return
/// new graphs.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  /// Edges with 1-based endpoints, u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

/// Mutable staging area used by the constructions below.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  /// 0-based endpoints; i != j.
  void connect(std::size_t i, std::size_t j) {
    g_.adj_[i * g_.n_ + j] = 1;
    g_.adj_[j * g_.n_ + i] = 1;
  }
  void disconnect(std::size_t i, std::size_t j) {
    g_.adj_[i * g_.n_ + j] = 0;
    g_.adj_[j * g_.n_ + i] = 0;
  }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

/// Graph on n vertices with the given 1-based edges. Duplicates collapse;
/// loops and out-of-range endpoints throw std::invalid_argument naming the edge.
Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges);

Graph path_graph(std::size_t m);
Graph complement(const Graph& g);
/// Removes vertex v (0-based); the remaining vertices keep their relative order.
Graph delete_vertex(const Graph& g, std::size_t v);

// graph6 (McKay). Only the 1-byte and 4-byte order encodings are accepted.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

// Plain edge lists: first token n, then whitespace-separated 1-based pairs.
Graph edge_list_decode(std::string_view text);
std::string edge_list_encode(const Graph& g);

/// Path length and root position for G o P_m^(ell). Positions past the
/// middle of the path are mirrored to m + 1 - ell, which gives an isomorphic
/// product.
class RootedProductSpec {
 public:
  RootedProductSpec(int m, int ell);
  int m() const noexcept { return m_; }
  int ell() const noexcept { return ell_; }

 private:
  int m_;
  int ell_;
};

/// G o P_m^(ell). Vertex i of path copy j (both 0-based) gets index j*n + i,
/// so the adjacency equals A(P_m) (x) I_n + D_ell (x) A(G) literally.
Graph rooted_product_path(const Graph& g, const RootedProductSpec& spec);

// Labeled enumeration for n <= 6. Bit b of the index switches on the b-th
// vertex pair in graph6 order (0,1),(0,2),(1,2),(0,3),...
inline constexpr std::size_t kMaxEnumerationOrder = 6;
std::uint64_t labeled_graph_count(std::size_t n);
Graph labeled_graph(std::size_t n, std::uint64_t index);
std::vector<Graph> enumerate_graphs(std::size_t n);

}  // namespace walkmat
