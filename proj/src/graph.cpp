#include "plethys/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "plethys/kernel.hpp"

namespace plethys::graphs {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) +
                                " vertices");
  }
}

VertexSet all_of(int n) { return n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

// True when some two vertices have the same image under `nbhd`.
template <typename F>
bool has_twins(int n, F nbhd) {
  std::vector<VertexSet> seen;
  seen.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) seen.push_back(nbhd(v));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
}

bool connected_from(int n, VertexSet start, auto neighbors) {
  if (n == 0) return false;
  VertexSet reached = start;
  VertexSet frontier = start;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= neighbors(std::countr_zero(f));
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all_of(n);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices) throw std::invalid_argument("graph size must be between 0 and 32");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) { return complement(Graph(n)); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  adj_[u] &= ~(VertexSet{1} << v);
  adj_[v] &= ~(VertexSet{1} << u);
}

Graph complement(const Graph& g) {
  Graph out(g.size());
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g.size(), vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Graph superimpose(const Graph& outer, const std::vector<Graph>& fibers) {
  if (static_cast<int>(fibers.size()) != outer.size()) {
    throw std::invalid_argument("superimpose needs one fiber per outer vertex");
  }
  std::vector<int> offset(fibers.size() + 1, 0);
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (fibers[i].size() == 0) throw std::invalid_argument("superimpose: empty fiber");
    offset[i + 1] = offset[i] + fibers[i].size();
  }
  Graph g(offset.back());
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    for (auto [u, v] : fibers[i].edges()) g.add_edge(offset[i] + u, offset[i] + v);
  }
  for (auto [a, b] : outer.edges()) {
    for (int u = offset[a]; u < offset[a + 1]; ++u) {
      for (int v = offset[b]; v < offset[b + 1]; ++v) g.add_edge(u, v);
    }
  }
  return g;
}

bool is_connected(const Graph& g) {
  return connected_from(g.size(), VertexSet{1}, [&](int v) { return g.neighbors(v); });
}

bool is_pd(const Graph& g) {
  return !has_twins(g.size(), [&](int v) { return g.neighbors(v); });
}

bool is_co_pd(const Graph& g) {
  return !has_twins(g.size(), [&](int v) { return g.closed_neighbors(v); });
}

bool is_bipd(const Graph& g) { return is_pd(g) && is_co_pd(g); }

bool is_endpoint_free(const Graph& g) {
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 1) return false;
  }
  return true;
}

bool is_acyclic(const Graph& g) {
  // A forest has n - c edges, c the number of components.
  std::vector<int> parent(static_cast<std::size_t>(g.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_p4_free(const Graph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const std::vector<int> quad = {a, b, c, d};
          Graph h = induced(g, quad);
          if (h.edge_count() != 3 || !is_connected(h)) continue;
          int leaves = 0;
          for (int v = 0; v < 4; ++v) leaves += h.degree(v) == 1 ? 1 : 0;
          if (leaves == 2) return false;  // the star K_{1,3} has three
        }
      }
    }
  }
  return true;
}

bool is_cograph(const Graph& g) { return bipd_kernel(g).kernel.size() <= 1; }

Flags classify(const Graph& g) {
  Flags f;
  f.pd = is_pd(g);
  f.co_pd = is_co_pd(g);
  f.bipd = f.pd && f.co_pd;
  f.connected = is_connected(g);
  f.endpoint_free = is_endpoint_free(g);
  f.cograph = is_cograph(g);
  return f;
}

std::uint64_t edge_code(const Graph& g) {
  const int n = g.size();
  if (n > 11) throw std::invalid_argument("edge_code supports at most 11 vertices");
  std::uint64_t code = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) code = code << 1 | (g.adjacent(u, v) ? 1U : 0U);
  }
  return code;
}

Graph from_edge_code(int n, std::uint64_t code) {
  if (n > 11) throw std::invalid_argument("edge_code supports at most 11 vertices");
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      --bit;
      if ((code >> bit & 1U) != 0) g.add_edge(u, v);
    }
  }
  return g;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.size();
  if (n > 9) throw std::invalid_argument("canonical_code supports at most 9 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // New vertex i is old vertex perm[i].
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) code = code << 1 | (g.adjacent(perm[u], perm[v]) ? 1U : 0U);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BicoloredGraph::BicoloredGraph(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0 || m + n > max_vertices) {
    throw std::invalid_argument("bicolored graph needs m, n >= 0 and m + n <= 32");
  }
}

VertexSet BicoloredGraph::black_neighbors(int b) const {
  VertexSet out = 0;
  for (int w = 0; w < m_; ++w) {
    if (adjacent(w, b)) out |= VertexSet{1} << w;
  }
  return out;
}

int BicoloredGraph::edge_count() const {
  int e = 0;
  for (int w = 0; w < m_; ++w) e += std::popcount(rows_[w]);
  return e;
}

void BicoloredGraph::add_edge(int w, int b) {
  check_vertex(m_, w);
  check_vertex(n_, b);
  rows_[w] |= VertexSet{1} << b;
}

Graph BicoloredGraph::underlying() const {
  Graph g(m_ + n_);
  for (int w = 0; w < m_; ++w) {
    for (int b = 0; b < n_; ++b) {
      if (adjacent(w, b)) g.add_edge(w, m_ + b);
    }
  }
  return g;
}

bool is_pd(const BicoloredGraph& g) { return is_pd(g.underlying()); }

bool is_semi_pd(const BicoloredGraph& g) {
  return !has_twins(g.white(), [&](int w) { return g.white_neighbors(w); }) &&
         !has_twins(g.black(), [&](int b) { return g.black_neighbors(b); });
}

bool is_connected(const BicoloredGraph& g) { return is_connected(g.underlying()); }

std::uint64_t edge_code(const BicoloredGraph& g) {
  if (g.white() * g.black() > 63) throw std::invalid_argument("bicolored edge_code supports m*n <= 63");
  std::uint64_t code = 0;
  for (int w = 0; w < g.white(); ++w) {
    for (int b = 0; b < g.black(); ++b) code = code << 1 | (g.adjacent(w, b) ? 1U : 0U);
  }
  return code;
}

BicoloredGraph from_edge_code(int m, int n, std::uint64_t code) {
  BicoloredGraph g(m, n);
  if (m * n > 63) throw std::invalid_argument("bicolored edge_code supports m*n <= 63");
  int bit = m * n;
  for (int w = 0; w < m; ++w) {
    for (int b = 0; b < n; ++b) {
      --bit;
      if ((code >> bit & 1U) != 0) g.add_edge(w, b);
    }
  }
  return g;
}

std::uint64_t canonical_code(const BicoloredGraph& g) {
  const int m = g.white();
  const int n = g.black();
  if (m > 8 || n > 8) throw std::invalid_argument("bicolored canonical_code supports at most 8 per colour");
  std::vector<int> pw(static_cast<std::size_t>(m));
  std::vector<int> pb(static_cast<std::size_t>(n));
  std::iota(pw.begin(), pw.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::iota(pb.begin(), pb.end(), 0);
    do {
      std::uint64_t code = 0;
      for (int w = 0; w < m; ++w) {
        for (int b = 0; b < n; ++b) code = code << 1 | (g.adjacent(pw[w], pb[b]) ? 1U : 0U);
      }
      best = std::min(best, code);
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pw.begin(), pw.end()));
  return best;
}

}  // namespace plethys::graphs
