#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "plethys/catalog.hpp"
#include "plethys/graph.hpp"
#include "plethys/graph_io.hpp"
#include "plethys/kernel.hpp"
#include "plethys/oracle.hpp"

using namespace plethys;
using namespace plethys::graphs;

namespace {

// Induced P4 test by checking every ordered 4-tuple for the path pattern.
bool has_induced_p4(const Graph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) && !g.adjacent(a, d) &&
              !g.adjacent(b, d)) {
            return true;
          }
        }
  return false;
}

}  // namespace

TEST_CASE("superimposition") {
  Graph two = superimpose(Graph(2), {Graph(1), Graph(1)});
  CHECK(two == Graph(2));
  Graph tri = superimpose(Graph::complete(2), {Graph::complete(2), Graph(1)});
  CHECK(tri == Graph::complete(3));
  Graph blown = superimpose(Graph::path(3), {Graph(2), Graph(1), Graph::complete(2)});
  CHECK(blown.size() == 5);
  CHECK(blown.edge_count() == 2 + 2 + 1);
  CHECK_THROWS_AS(superimpose(Graph(2), {Graph(1)}), std::invalid_argument);
  CHECK_THROWS_AS(superimpose(Graph(1), {Graph(0)}), std::invalid_argument);
}

TEST_CASE("predicates") {
  Graph p3 = Graph::path(3);
  CHECK_FALSE(is_pd(p3));
  CHECK(is_co_pd(p3));
  Graph p4 = Graph::path(4);
  CHECK(is_pd(p4));
  CHECK(is_co_pd(p4));
  CHECK(is_bipd(p4));
  CHECK_FALSE(is_cograph(p4));
  CHECK_FALSE(is_p4_free(p4));
  Graph e2(2);
  CHECK_FALSE(is_pd(e2));
  // closed neighbourhoods {0} and {1} differ; the complement K2 is pd
  CHECK(is_co_pd(e2));
  CHECK(is_cograph(e2));
  CHECK(is_endpoint_free(Graph::cycle(5)));
  CHECK(is_endpoint_free(Graph(3)));
  CHECK_FALSE(is_endpoint_free(p3));
  CHECK(is_acyclic(p4));
  CHECK_FALSE(is_acyclic(Graph::cycle(3)));
  CHECK_FALSE(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
  Flags f = classify(p4);
  CHECK(f.pd);
  CHECK(f.bipd);
  CHECK(f.connected);
  CHECK_FALSE(f.cograph);
  CHECK_FALSE(f.endpoint_free);
}

TEST_CASE("P4-freeness agrees with a naive scan") {
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      Graph g = from_edge_code(n, code);
      if (is_p4_free(g) == has_induced_p4(g)) {
        FAIL("mismatch on " << graph_to_json(g));
      }
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(3)) == Graph(3));
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      Graph g = from_edge_code(n, code);
      REQUIRE(complement(complement(g)) == g);
      REQUIRE(is_pd(g) == is_co_pd(complement(g)));
    }
  }
}

TEST_CASE("edge codes and canonical forms") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(from_edge_code(4, edge_code(g)) == g);
  // pair (0,1) is the most significant bit of the 6-bit code
  CHECK(edge_code(Graph::from_edges(4, {{0, 1}})) == 32);
  Graph h = Graph::from_edges(4, {{0, 2}, {1, 3}});
  CHECK(canonical_code(g) == canonical_code(h));
  CHECK(canonical_code(Graph::path(4)) != canonical_code(Graph::cycle(4)));
  BicoloredGraph b(2, 2);
  b.add_edge(0, 1);
  BicoloredGraph c(2, 2);
  c.add_edge(1, 0);
  CHECK(canonical_code(b) == canonical_code(c));
  CHECK(from_edge_code(2, 2, edge_code(b)) == b);
  CHECK_THROWS(Graph(33));
  CHECK_THROWS(g.add_edge(1, 1));
}

TEST_CASE("oracle counts") {
  auto pd = [](const Graph& x) { return is_pd(x); };
  auto bipd = [](const Graph& x) { return is_bipd(x); };
  auto any = [](const Graph&) { return true; };
  CHECK(count_labeled(pd, 5) == labeled_count(catalog::species_ci("P", 5), std::vector<int>{5}));
  CHECK(count_labeled(pd, 5) == 588);
  // P4 is the only bi-pd graph on 4 vertices and has 4!/2 labelings
  CHECK(count_labeled(bipd, 4) == 12);
  CHECK(count_labeled(any, 3) == 8);
  for (int n = 0; n <= 7; ++n) CHECK(count_labeled(any, n) == pow2(static_cast<unsigned long>(n * (n - 1) / 2)));
  CHECK(unlabeled_graphs(4).size() == 11);
  CHECK_THROWS(count_labeled(any, 8));

  auto all = [](const BicoloredGraph&) { return true; };
  auto bpd = [](const BicoloredGraph& x) { return is_pd(x); };
  CHECK(count_bicolored_by_edges(all, 2, 3)[4] == 3);
  CHECK(count_bicolored_labeled(all, 2, 1) == 4);
  CHECK(count_bicolored_unlabeled(bpd, 2, 1) == 1);
}

TEST_CASE("point-determining kernels") {
  KernelResult open = pd_kernel(Graph::path(3), SiblingMode::open);
  CHECK(open.kernel == Graph::complete(2));
  CHECK(open.fibers == std::vector<std::vector<int>>{{0, 2}, {1}});
  KernelResult closed = pd_kernel(Graph::complete(3), SiblingMode::closed);
  CHECK(closed.kernel.size() == 1);
  CHECK(closed.fiber_graphs[0] == Graph::complete(3));
  Graph c5 = Graph::cycle(5);
  KernelResult fixed = pd_kernel(c5, SiblingMode::open);
  CHECK(fixed.kernel == c5);
  CHECK(fixed.fibers.size() == 5);
  KernelResult empty = pd_kernel(Graph(0), SiblingMode::open);
  CHECK(empty.kernel.size() == 0);
}

TEST_CASE("bi-point-determining kernels") {
  KernelResult p4 = bipd_kernel(Graph::path(4));
  CHECK(p4.kernel == Graph::path(4));
  CHECK(p4.fibers.size() == 4);
  KernelResult e3 = bipd_kernel(Graph(3));
  CHECK(e3.kernel.size() == 1);
  CHECK(e3.fiber_graphs[0] == Graph(3));
  KernelResult one = bipd_kernel(Graph(1));
  CHECK(one.kernel == Graph(1));
  // P4 blown up by cographs reduces back to P4 with those fibers
  Graph blown = superimpose(Graph::path(4), {Graph(2), Graph::complete(3), Graph(1), Graph::path(3)});
  KernelResult r = bipd_kernel(blown);
  CHECK(r.kernel == Graph::path(4));
  CHECK(r.fibers == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}, {5}, {6, 7, 8}});
  CHECK(reconstruct(r) == blown);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    KernelResult s = bipd_kernel(blown, seed);
    CHECK(s.fibers == r.fibers);
    CHECK(s.kernel == r.kernel);
  }
}

TEST_CASE("cographs collapse to one vertex") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : unlabeled_graphs(n)) {
      CHECK(is_cograph(g) == (bipd_kernel(g).kernel.size() == 1));
      CHECK(is_cograph(g) == !has_induced_p4(g));
    }
  }
}

TEST_CASE("graph files") {
  Graph g = parse_graph("# a path\n3\n0 1\n\n1 2  # second edge\n");
  CHECK(g == Graph::path(3));
  CHECK(parse_graph(format_graph(g)) == g);
  CHECK(graph_to_json(g) == R"({"edges":[[0,1],[1,2]],"n":3})");
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("3\n0 3\n") == 2);
  CHECK(line_of("3\n1 1\n") == 2);
  CHECK(line_of("3\n0\n") == 2);
  CHECK(line_of("2 2\n") == 1);
  CHECK(line_of("3\n0 -1\n") == 2);
  CHECK(line_of("40\n") == 1);
  BicoloredGraph b = parse_bicolored("2 3\n0 2\n1 0\n");
  CHECK(b.edge_count() == 2);
  CHECK(b.adjacent(0, 2));
  CHECK_THROWS_AS(parse_bicolored("2 3\n2 0\n"), FormatError);
  KernelResult r = pd_kernel(Graph::path(3), SiblingMode::open);
  CHECK(kernel_to_json(r) == R"({"fibers":[[0,2],[1]],"kernel":{"edges":[[0,1]],"n":2}})");
  CHECK(kernel_to_text(r) == "kernel: 2 vertices, edges: 0-1\nfiber 0: 0 2\nfiber 1: 1\n");
}
