#include "plethys/oracle.hpp"

#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace plethys::graphs {

namespace {

void check_size(int n, int limit, const char* what) {
  if (n < 0 || n > limit) {
    throw std::invalid_argument(std::string(what) + " supports 0 <= n <= " + std::to_string(limit));
  }
}

int pair_count(int n) { return n * (n - 1) / 2; }

// Index of pair {u, v} in the order (0,1), (0,2), ..., (1,2), ...
int pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

// A permutation with cycles (0..p0-1)(p0..p0+p1-1)...
std::vector<int> permutation_of_type(const Partition& lambda) {
  std::vector<int> sigma;
  int start = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) sigma.push_back(start + (i + 1) % part);
    start += part;
  }
  return sigma;
}

// Orbits of a permutation acting on the integers 0..size-1 through `image`.
template <typename Image>
std::vector<std::vector<int>> orbits(int size, Image image) {
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < size; ++k) {
    if (seen[k]) continue;
    std::vector<int> orbit;
    for (int j = k; !seen[j]; j = image(j)) {
      seen[j] = true;
      orbit.push_back(j);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

struct UnlabeledCache {
  std::mutex mutex;
  std::array<std::vector<Graph>, unlabeled_limit + 1> reps;
  std::array<bool, unlabeled_limit + 1> ready{};
};

std::vector<Graph> compute_representatives(int n) {
  const int pairs = pair_count(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // For each permutation, the bit each pair's bit moves to.
  std::vector<std::vector<int>> moves;
  do {
    std::vector<int> move(static_cast<std::size_t>(pairs));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        move[pairs - 1 - pair_index(n, u, v)] = pairs - 1 - pair_index(n, perm[u], perm[v]);
      }
    }
    moves.push_back(std::move(move));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> visited(std::size_t{1} << pairs, false);
  std::vector<Graph> reps;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    if (visited[code]) continue;
    // Codes are visited in increasing order, so this one is its orbit's least.
    reps.push_back(from_edge_code(n, code));
    for (const auto& move : moves) {
      std::uint64_t image = 0;
      for (int bit = 0; bit < pairs; ++bit) {
        if ((code >> bit & 1U) != 0) image |= std::uint64_t{1} << move[bit];
      }
      visited[image] = true;
    }
  }
  return reps;
}

BigInt count_bicolored_impl(const BicoloredPredicate& pred, int m, int n, bool labeled) {
  check_size(m + n, bicolored_limit, "bicolored enumeration");
  BigInt total = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * n)); ++code) {
    BicoloredGraph g = from_edge_code(m, n, code);
    if (!labeled && canonical_code(g) != code) continue;
    if (pred(g)) ++total;
  }
  return total;
}

}  // namespace

BigInt count_labeled(const Predicate& pred, int n) {
  check_size(n, labeled_limit, "labeled enumeration");
  BigInt total = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
    if (pred(from_edge_code(n, code))) ++total;
  }
  return total;
}

const std::vector<Graph>& unlabeled_graphs(int n) {
  check_size(n, unlabeled_limit, "unlabeled enumeration");
  static UnlabeledCache cache;
  std::lock_guard lock(cache.mutex);
  if (!cache.ready[n]) {
    cache.reps[n] = compute_representatives(n);
    cache.ready[n] = true;
  }
  return cache.reps[n];
}

BigInt count_unlabeled(const Predicate& pred, int n) {
  BigInt total = 0;
  for (const auto& g : unlabeled_graphs(n)) {
    if (pred(g)) ++total;
  }
  return total;
}

CycleIndex fixed_point_cycle_index(const Predicate& pred, int n_max) {
  check_size(n_max, labeled_limit, "fixed-point enumeration");
  CycleIndex f(1, n_max);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (const auto& lambda : partitions_of(n)) {
      const std::vector<int> sigma = permutation_of_type(lambda);
      auto pair_orbits = orbits(static_cast<int>(pairs.size()), [&](int k) {
        return pair_index(n, sigma[pairs[k].first], sigma[pairs[k].second]);
      });
      // A fixed graph is a union of pair orbits.
      BigInt fixed = 0;
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pair_orbits.size()); ++subset) {
        Graph g(n);
        for (std::size_t o = 0; o < pair_orbits.size(); ++o) {
          if ((subset >> o & 1U) == 0) continue;
          for (int k : pair_orbits[o]) g.add_edge(pairs[k].first, pairs[k].second);
        }
        if (pred(g)) ++fixed;
      }
      f.add_term(PMonomial::from_partition(lambda), make_rational(fixed, partition_z(lambda)));
    }
  }
  return f;
}

BigInt count_bicolored_labeled(const BicoloredPredicate& pred, int m, int n) {
  return count_bicolored_impl(pred, m, n, true);
}

BigInt count_bicolored_unlabeled(const BicoloredPredicate& pred, int m, int n) {
  return count_bicolored_impl(pred, m, n, false);
}

std::vector<BigInt> count_bicolored_by_edges(const BicoloredPredicate& pred, int m, int n) {
  check_size(m + n, bicolored_limit, "bicolored enumeration");
  std::vector<BigInt> out(static_cast<std::size_t>(m * n + 1), BigInt(0));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * n)); ++code) {
    BicoloredGraph g = from_edge_code(m, n, code);
    if (canonical_code(g) == code && pred(g)) ++out[static_cast<std::size_t>(g.edge_count())];
  }
  return out;
}

CycleIndex bicolored_fixed_point_cycle_index(const BicoloredPredicate& pred, int n_max) {
  check_size(n_max, bicolored_limit, "bicolored fixed-point enumeration");
  CycleIndex f(2, n_max);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; m + n <= n_max; ++n) {
      for (const auto& lambda : partitions_of(m)) {
        const std::vector<int> sigma = permutation_of_type(lambda);
        for (const auto& mu : partitions_of(n)) {
          const std::vector<int> tau = permutation_of_type(mu);
          auto pair_orbits = orbits(m * n, [&](int k) { return sigma[k / n] * n + tau[k % n]; });
          BigInt fixed = 0;
          for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pair_orbits.size()); ++subset) {
            BicoloredGraph g(m, n);
            for (std::size_t o = 0; o < pair_orbits.size(); ++o) {
              if ((subset >> o & 1U) == 0) continue;
              for (int k : pair_orbits[o]) g.add_edge(k / n, k % n);
            }
            if (pred(g)) ++fixed;
          }
          PMonomial mon = PMonomial::from_partition(lambda, 0) * PMonomial::from_partition(mu, 1);
          f.add_term(mon, make_rational(fixed, partition_z(lambda) * partition_z(mu)));
        }
      }
    }
  }
  return f;
}

const std::vector<OraclePair>& oracle_pairs() {
  static const std::vector<OraclePair> pairs = {
      {"point-determining", "P", [](const Graph& g) { return is_pd(g); }},
      {"co-point-determining", "Q", [](const Graph& g) { return is_co_pd(g); }},
      {"bi-point-determining", "B", [](const Graph& g) { return is_bipd(g); }},
      {"connected point-determining", "Pc", [](const Graph& g) { return is_connected(g) && is_pd(g); }},
      {"connected co-point-determining", "Qc", [](const Graph& g) { return is_connected(g) && is_co_pd(g); }},
      {"connected bi-point-determining", "Bc", [](const Graph& g) { return is_connected(g) && is_bipd(g); }},
      {"without endpoints", "M", [](const Graph& g) { return is_endpoint_free(g); }},
      {"connected without endpoints", "Mc",
       [](const Graph& g) { return is_connected(g) && is_endpoint_free(g); }},
      {"cographs", "C", [](const Graph& g) { return g.size() >= 1 && is_p4_free(g); }},
      {"connected cographs", "Cc", [](const Graph& g) { return is_connected(g) && is_p4_free(g); }},
      {"trees", "A", [](const Graph& g) { return is_connected(g) && is_acyclic(g); }},
  };
  return pairs;
}

const std::vector<BicoloredOraclePair>& bicolored_oracle_pairs() {
  static const std::vector<BicoloredOraclePair> pairs = {
      {"bicolored", "GXY", [](const BicoloredGraph&) { return true; }},
      {"connected bicolored", "GcXY", [](const BicoloredGraph& g) { return is_connected(g); }},
      {"semi-point-determining bicolored", "PsXY", [](const BicoloredGraph& g) { return is_semi_pd(g); }},
      {"point-determining bicolored", "PXY", [](const BicoloredGraph& g) { return is_pd(g); }},
      {"connected point-determining bicolored", "PcXY",
       [](const BicoloredGraph& g) { return is_connected(g) && is_pd(g); }},
  };
  return pairs;
}

}  // namespace plethys::graphs
