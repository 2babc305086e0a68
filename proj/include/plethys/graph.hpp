#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace plethys::graphs {

inline constexpr int max_vertices = 32;

using VertexSet = std::uint32_t;

/// Simple graph on vertices 0..n-1, adjacency as one bitmask per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws std::invalid_argument unless 0 <= n <= 32.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v & 1U) != 0; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v] | (VertexSet{1} << v); }
  int degree(int v) const;
  int edge_count() const;
  /// Pairs (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Throws std::invalid_argument on a loop or an out-of-range vertex.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::array<VertexSet, max_vertices> adj_{};
};

Graph complement(const Graph& g);
/// Subgraph induced on `vertices`, renumbered in the given order.
Graph induced(const Graph& g, const std::vector<int>& vertices);
/// Blows up vertex i of `outer` into fibers[i]; fiber vertices are numbered
/// consecutively in fiber order. Throws std::invalid_argument on an arity
/// mismatch or an empty fiber.
Graph superimpose(const Graph& outer, const std::vector<Graph>& fibers);

bool is_connected(const Graph& g);
bool is_pd(const Graph& g);
bool is_co_pd(const Graph& g);
bool is_bipd(const Graph& g);
/// No vertex of degree exactly one; isolated vertices are allowed.
bool is_endpoint_free(const Graph& g);
bool is_acyclic(const Graph& g);
bool is_p4_free(const Graph& g);
/// Bi-point-determining kernel has at most one vertex.
bool is_cograph(const Graph& g);

struct Flags {
  bool pd = false;
  bool co_pd = false;
  bool bipd = false;
  bool connected = false;
  bool endpoint_free = false;
  bool cograph = false;

  bool operator==(const Flags&) const = default;
};

Flags classify(const Graph& g);

/// Upper-triangular adjacency bit string, pair (0,1) in the most significant
/// position. Requires n <= 11.
std::uint64_t edge_code(const Graph& g);
Graph from_edge_code(int n, std::uint64_t code);
/// Minimal edge_code over all vertex permutations. Requires n <= 9.
std::uint64_t canonical_code(const Graph& g);

/// Bicolored graph: m white vertices, n black vertices, edges white-black only.
class BicoloredGraph {
 public:
  BicoloredGraph() = default;
  /// Throws std::invalid_argument unless m, n >= 0 and m + n <= 32.
  BicoloredGraph(int m, int n);

  int white() const { return m_; }
  int black() const { return n_; }
  bool adjacent(int w, int b) const { return (rows_[w] >> b & 1U) != 0; }
  /// Black neighbours of a white vertex.
  VertexSet white_neighbors(int w) const { return rows_[w]; }
  VertexSet black_neighbors(int b) const;
  int edge_count() const;

  void add_edge(int w, int b);

  /// Whites are 0..m-1, blacks m..m+n-1.
  Graph underlying() const;

  bool operator==(const BicoloredGraph& other) const = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::array<VertexSet, max_vertices> rows_{};
};

/// Every vertex has a distinct neighbourhood.
bool is_pd(const BicoloredGraph& g);
/// Vertices of the same colour have distinct neighbourhoods.
bool is_semi_pd(const BicoloredGraph& g);
bool is_connected(const BicoloredGraph& g);

/// Row-major white x black bit string, (0,0) most significant. Requires m*n <= 63.
std::uint64_t edge_code(const BicoloredGraph& g);
BicoloredGraph from_edge_code(int m, int n, std::uint64_t code);
/// Minimal code over colour-preserving relabellings.
std::uint64_t canonical_code(const BicoloredGraph& g);

}  // namespace plethys::graphs
