#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plethys/graph.hpp"

namespace plethys::graphs {

/// Kernel vertex i stands for fibers[i]; fibers are sorted by least vertex
/// and each is sorted ascending.
struct KernelResult {
  Graph kernel;
  std::vector<std::vector<int>> fibers;
  std::vector<Graph> fiber_graphs;
};

enum class SiblingMode {
  open,    // equal open neighbourhoods (weak siblings); fibers edgeless
  closed,  // equal closed neighbourhoods (strong siblings); fibers complete
};

KernelResult pd_kernel(const Graph& g, SiblingMode mode);

/// Merges one weak or strong sibling pair at a time until none is left.
/// Without a seed the lowest eligible pair is merged, weak pairs first; with a
/// seed the pair is drawn uniformly from all eligible pairs. Throws
/// std::logic_error if a vertex is ever found in both a weak and a strong
/// sibling pair.
KernelResult bipd_kernel(const Graph& g, std::optional<std::uint64_t> seed = std::nullopt);

/// Superimposition of the fiber graphs on the kernel, in original vertex
/// numbering.
Graph reconstruct(const KernelResult& r);

}  // namespace plethys::graphs
