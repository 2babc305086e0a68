#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/cycle_index.hpp"
#include "plethys/graph.hpp"

namespace plethys::graphs {

using Predicate = std::function<bool(const Graph&)>;
using BicoloredPredicate = std::function<bool(const BicoloredGraph&)>;

inline constexpr int labeled_limit = 7;
inline constexpr int unlabeled_limit = 7;
inline constexpr int bicolored_limit = 8;

/// Number of labeled graphs on n vertices satisfying `pred`; n <= 7.
BigInt count_labeled(const Predicate& pred, int n);
/// Number of isomorphism classes satisfying the invariant predicate; n <= 7.
BigInt count_unlabeled(const Predicate& pred, int n);
/// One graph per isomorphism class on n vertices, each in its minimal
/// edge_code labelling, in increasing code order. Cached; n <= 7.
const std::vector<Graph>& unlabeled_graphs(int n);

/// Cycle index obtained by counting, for each cycle type, the graphs
/// satisfying `pred` that a permutation of that type fixes; degrees <= n_max.
CycleIndex fixed_point_cycle_index(const Predicate& pred, int n_max);

BigInt count_bicolored_labeled(const BicoloredPredicate& pred, int m, int n);
BigInt count_bicolored_unlabeled(const BicoloredPredicate& pred, int m, int n);
/// Unlabeled counts by number of edges; index = edge count.
std::vector<BigInt> count_bicolored_by_edges(const BicoloredPredicate& pred, int m, int n);
/// Two-sort analogue of fixed_point_cycle_index; total degree <= n_max.
CycleIndex bicolored_fixed_point_cycle_index(const BicoloredPredicate& pred, int n_max);

/// A graph class with the catalog species that should count it.
struct OraclePair {
  std::string label;
  std::string species;
  Predicate predicate;
};

/// pd/P, co_pd/Q, bipd/B, connected pd/Pc, connected co_pd/Qc, connected
/// bipd/Bc, endpoint-free/M, connected endpoint-free/Mc, cographs/C,
/// connected cographs/Cc, trees/A.
const std::vector<OraclePair>& oracle_pairs();

struct BicoloredOraclePair {
  std::string label;
  std::string species;
  BicoloredPredicate predicate;
};

/// all/GXY, connected/GcXY, semi-pd/PsXY, pd/PXY, connected pd/PcXY.
const std::vector<BicoloredOraclePair>& bicolored_oracle_pairs();

}  // namespace plethys::graphs
