#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/cycle_index.hpp"

namespace plethys::catalog {

struct EntryInfo {
  std::string name;
  int sorts;
  std::string description;
  /// False for virtual species and formal composites whose coefficients need
  /// not be nonnegative integers.
  bool genuine;
};

const std::vector<EntryInfo>& entries();
const EntryInfo* find_entry(std::string_view name);

/// Cycle index of a named species at truncation `maxdeg`.
/// Throws std::invalid_argument for unknown names.
CycleIndex species_ci(std::string_view name, int maxdeg);

/// Rooted trees: the fixed point of A^r = X E(A^r), solved degree by degree.
CycleIndex rooted_trees_ci(int maxdeg);
/// Cographs: the fixed point of C = E_+((C + X)/2), solved degree by degree.
CycleIndex cographs_ci(int maxdeg);
/// X E(-X), the compositional inverse of rooted trees.
CycleIndex x_times_sets_of_minus_x(int maxdeg);

/// Counts indexed by degree vector: {n} for one sort, {m, n} for two.
struct CountTable {
  int sorts = 1;
  int n_max = 0;
  std::map<std::vector<int>, BigInt> entries;

  BigInt at(const std::vector<int>& degrees) const;
};

/// Labeled counts from the EGF, unlabeled from the type series, for every
/// degree vector of total degree <= n_max. Throws std::out_of_range when
/// n_max exceeds the truncation and std::domain_error on a non-integer count.
CountTable counts(const CycleIndex& f, bool labeled, int n_max);
CountTable counts(std::string_view name, bool labeled, int n_max);

/// Generating polynomial of unlabeled bicolored graphs with m white and n
/// black vertices by number of edges; index = edge count.
std::vector<BigInt> edge_gf(int m, int n);

}  // namespace plethys::catalog
