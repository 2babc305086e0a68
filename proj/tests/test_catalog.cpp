#include <doctest.h>

#include <numeric>
#include <vector>

#include "plethys/catalog.hpp"
#include "plethys/graph.hpp"
#include "plethys/oracle.hpp"
#include "plethys/species.hpp"

using namespace plethys;

namespace {

std::vector<BigInt> sequence(std::string_view name, bool labeled, int n_max) {
  catalog::CountTable t = catalog::counts(name, labeled, n_max);
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(t.at({n}));
  return out;
}

std::vector<BigInt> brute(const graphs::Predicate& pred, bool labeled, int n_max) {
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(labeled ? graphs::count_labeled(pred, n) : graphs::count_unlabeled(pred, n));
  }
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("every catalog entry evaluates") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    CycleIndex f = catalog::species_ci(e.name, 6);
    CHECK(f.sorts() == e.sorts);
    CHECK(f.maxdeg() == 6);
    CHECK(catalog::find_entry(e.name) == &e);
  }
  CHECK(catalog::find_entry("Nope") == nullptr);
  CHECK_THROWS_AS(catalog::species_ci("Nope", 4), std::invalid_argument);
}

TEST_CASE("point-determining counts") {
  auto pd = [](const graphs::Graph& g) { return graphs::is_pd(g); };
  CHECK(sequence("P", true, 5) == brute(pd, true, 5));
  CHECK(sequence("P", false, 5) == brute(pd, false, 5));
  CHECK(sequence("P", true, 5).back() == 588);
  CHECK(sequence("P", false, 5) == ints({1, 1, 1, 2, 5, 16}));
}

TEST_CASE("bi-point-determining counts") {
  auto bipd = [](const graphs::Graph& g) { return graphs::is_bipd(g); };
  CHECK(sequence("B", false, 5) == brute(bipd, false, 5));
  // none on 2 or 3 vertices, P_4 alone on 4, six on 5
  CHECK(sequence("B", false, 5) == ints({1, 1, 0, 0, 1, 6}));
}

TEST_CASE("cograph counts") {
  auto cograph = [](const graphs::Graph& g) { return g.size() >= 1 && graphs::is_p4_free(g); };
  CHECK(sequence("C", true, 4) == brute(cograph, true, 4));
  CHECK(sequence("C", true, 4) == ints({0, 1, 2, 8, 52}));
  CHECK(sequence("C", false, 6) == brute(cograph, false, 6));
}

TEST_CASE("trees") {
  auto tree = [](const graphs::Graph& g) { return graphs::is_connected(g) && graphs::is_acyclic(g); };
  CHECK(sequence("A", true, 6) == brute(tree, true, 6));
  CHECK(sequence("A", false, 6) == brute(tree, false, 6));
  // Cayley: n^{n-2} labeled trees
  CHECK(sequence("A", true, 6).back() == 1296);
  CycleIndex ar = catalog::rooted_trees_ci(7);
  CHECK(compose(ar, catalog::x_times_sets_of_minus_x(7)) == CycleIndex::power_sum(0, 1, 1, 7));
}

TEST_CASE("endpoint-free and point-determining graphs are equinumerous unlabeled") {
  MultiSeries m = ogf_series(catalog::species_ci("M", 7));
  MultiSeries p = ogf_series(catalog::species_ci("P", 7));
  CHECK(m.coeffs == p.coeffs);
  CHECK(catalog::species_ci("Mc", 7) == catalog::species_ci("McAlt", 7));
}

TEST_CASE("count tables") {
  catalog::CountTable t = catalog::counts("GXY", true, 4);
  CHECK(t.sorts == 2);
  CHECK(t.at({2, 2}) == 16);
  CHECK(t.at({1, 3}) == 8);
  CHECK_THROWS_AS(t.at({5, 0}), std::out_of_range);
  CHECK_THROWS_AS(catalog::counts(catalog::species_ci("P", 3), true, 4), std::out_of_range);
  CHECK_THROWS_AS(catalog::counts(make_rational(1, 3) * catalog::species_ci("P", 3), true, 3), std::domain_error);
}

TEST_CASE("edge generating polynomials") {
  auto all = [](const graphs::BicoloredGraph&) { return true; };
  CHECK(catalog::edge_gf(1, 1) == ints({1, 1}));
  CHECK(catalog::edge_gf(2, 3)[4] == 3);
  MultiSeries ogf = ogf_series(catalog::species_ci("GXY", 6));
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; m + n <= 6; ++n) {
      std::vector<BigInt> b = catalog::edge_gf(m, n);
      CHECK(b.size() == static_cast<std::size_t>(m * n + 1));
      CHECK(b == graphs::count_bicolored_by_edges(all, m, n));
      CHECK(Rational(std::accumulate(b.begin(), b.end(), BigInt(0))) == ogf.coefficient({m, n}));
    }
  }
}
