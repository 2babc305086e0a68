#include <doctest.h>

#include <numeric>
#include <vector>

#include "plethys/catalog.hpp"
#include "plethys/oracle.hpp"
#include "plethys/species.hpp"

using namespace plethys;

namespace {

// A permutation of 0..n-1 with the given cycle type, cycles laid out in order.
std::vector<int> permutation_of_type(const Partition& type) {
  std::vector<int> perm;
  int start = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i) perm.push_back(start + (i + 1) % len);
    start += len;
  }
  return perm;
}

// Graphs on n labeled vertices fixed by perm, by enumerating all edge sets.
long brute_graphs_fixed(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  long fixed = 0;
  for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
    auto has = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k] == std::pair{a, b}) return (mask >> k & 1) != 0;
      }
      return false;
    };
    bool ok = true;
    for (std::size_t k = 0; k < pairs.size() && ok; ++k) {
      if ((mask >> k & 1) != 0) ok = has(perm[pairs[k].first], perm[pairs[k].second]);
    }
    if (ok) ++fixed;
  }
  return fixed;
}

}  // namespace

TEST_CASE("graphs fixed by a permutation match brute force") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& type : partitions_of(n)) {
      CAPTURE(n);
      CHECK(graphs_fix(type) == brute_graphs_fixed(permutation_of_type(type)));
    }
  }
}

TEST_CASE("bicolored fixed points") {
  // identity on 2 + 3 vertices fixes every one of the 2^6 graphs
  CHECK(bicolored_fix(Partition{1, 1}, Partition{1, 1, 1}) == 64);
  // a 2-cycle on whites and a 3-cycle on blacks: gcd(2,3) = 1 orbit of pairs
  CHECK(bicolored_fix(Partition{2}, Partition{3}) == 2);
  CHECK(bicolored_fix(Partition{2}, Partition{2}) == 4);
  CHECK(bicolored_fix(Partition{}, Partition{1, 1}) == 1);
}

TEST_CASE("cyclic and dihedral atoms") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(ogf_series(dihedral_ci(n, n)).coefficient({n}) == 1);
    CHECK(ogf_series(cyclic_ci(n, n)).coefficient({n}) == 1);
    // (n-1)!/2 labeled polygons, (n-1)! labeled directed cycles
    CHECK(labeled_count(dihedral_ci(n, n), std::vector<int>{n}) * 2 == factorial(n - 1));
    CHECK(labeled_count(cyclic_ci(n, n), std::vector<int>{n}) == factorial(n - 1));
  }
  CHECK_THROWS_AS(dihedral_ci(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_ci(0, 4), std::invalid_argument);
}

TEST_CASE("atom names") {
  CHECK(parse_atom_name("X")->kind == AtomKind::singleton);
  CHECK(parse_atom_name("E_3")->param == 3);
  CHECK(parse_atom_name("Dih_5")->kind == AtomKind::dihedral);
  CHECK(parse_atom_name("Kp")->kind == AtomKind::nonempty_sets);
  CHECK(!parse_atom_name("P").has_value());
  CHECK(!parse_atom_name("E_").has_value());
  CHECK(atom({AtomKind::zero, 0}, 4).is_zero());
  CHECK(atom({AtomKind::one, 0}, 4) == CycleIndex::constant(1, 1, 4));
}

TEST_CASE("connected graphs are the logarithm of graphs") {
  CycleIndex g = graphs_ci(6);
  CycleIndex gc = connected_graphs_ci(6);
  CHECK(compose(sets_ci(6), gc) == g);
  auto connected = [](const graphs::Graph& h) { return graphs::is_connected(h); };
  for (int n = 0; n <= 6; ++n) {
    CHECK(labeled_count(gc, std::vector<int>{n}) == graphs::count_labeled(connected, n));
    CHECK(ogf_series(gc).coefficient({n}) == Rational(graphs::count_unlabeled(connected, n)));
  }
}

TEST_CASE("bicolored graphs count 2^{mn} labeled") {
  CycleIndex g = bicolored_ci(6);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; m + n <= 6; ++n) {
      CHECK(labeled_count(g, std::vector<int>{m, n}) == pow2(static_cast<unsigned long>(m * n)));
    }
  }
}
