#include "plethys/kernel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace plethys::graphs {

namespace {

// Kernel and fiber graphs of g for a partition of its vertices into blocks
// that are pairwise fully joined or fully separated.
KernelResult quotient(const Graph& g, std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  KernelResult r;
  r.kernel = Graph(static_cast<int>(blocks.size()));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    r.fiber_graphs.push_back(induced(g, blocks[i]));
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (g.adjacent(blocks[i].front(), blocks[j].front())) {
        r.kernel.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  r.fibers = std::move(blocks);
  return r;
}

struct SiblingPairs {
  std::vector<std::pair<int, int>> weak;
  std::vector<std::pair<int, int>> strong;
};

SiblingPairs sibling_pairs(const Graph& h) {
  SiblingPairs out;
  VertexSet in_weak = 0;
  VertexSet in_strong = 0;
  for (int a = 0; a < h.size(); ++a) {
    for (int b = a + 1; b < h.size(); ++b) {
      if (h.neighbors(a) == h.neighbors(b)) {
        out.weak.emplace_back(a, b);
        in_weak |= VertexSet{1} << a | VertexSet{1} << b;
      } else if (h.closed_neighbors(a) == h.closed_neighbors(b)) {
        out.strong.emplace_back(a, b);
        in_strong |= VertexSet{1} << a | VertexSet{1} << b;
      }
    }
  }
  if ((in_weak & in_strong) != 0) {
    throw std::logic_error("a vertex belongs to both a weak and a strong sibling pair");
  }
  return out;
}

}  // namespace

KernelResult pd_kernel(const Graph& g, SiblingMode mode) {
  std::map<VertexSet, std::vector<int>> classes;
  for (int v = 0; v < g.size(); ++v) {
    classes[mode == SiblingMode::open ? g.neighbors(v) : g.closed_neighbors(v)].push_back(v);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [key, block] : classes) blocks.push_back(std::move(block));
  return quotient(g, std::move(blocks));
}

KernelResult bipd_kernel(const Graph& g, std::optional<std::uint64_t> seed) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < g.size(); ++v) blocks.push_back({v});
  std::mt19937_64 rng(seed.value_or(0));
  while (true) {
    // Blocks are kept in order of least vertex, so block i is kernel vertex i.
    KernelResult current = quotient(g, blocks);
    blocks = current.fibers;
    SiblingPairs pairs = sibling_pairs(current.kernel);
    const std::size_t total = pairs.weak.size() + pairs.strong.size();
    if (total == 0) return current;
    std::size_t pick = 0;
    if (seed) pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
    auto [a, b] = pick < pairs.weak.size() ? pairs.weak[pick] : pairs.strong[pick - pairs.weak.size()];
    blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
    blocks.erase(blocks.begin() + b);
  }
}

Graph reconstruct(const KernelResult& r) {
  int n = 0;
  for (const auto& f : r.fibers) n += static_cast<int>(f.size());
  Graph g(n);
  for (std::size_t i = 0; i < r.fibers.size(); ++i) {
    const auto& f = r.fibers[i];
    for (auto [u, v] : r.fiber_graphs[i].edges()) g.add_edge(f[u], f[v]);
    for (std::size_t j = i + 1; j < r.fibers.size(); ++j) {
      if (!r.kernel.adjacent(static_cast<int>(i), static_cast<int>(j))) continue;
      for (int u : f) {
        for (int v : r.fibers[j]) g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace plethys::graphs
