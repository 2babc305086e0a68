#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plethys::verify {

struct Check {
  std::string suite;
  std::string name;
  /// The identity or property being checked, in words.
  std::string reference;
  bool passed = false;
  std::string detail;
};

struct Options {
  int degree = 8;
  int n_max = 6;
  std::uint64_t seed = 42;
  int random_graphs = 1000;
  int merge_orders = 20;
  int max_random_vertices = 10;
};

std::vector<Check> identities(const Options& opt);
/// Appendix tables, their flags and count checks, and molecular decompositions.
std::vector<Check> fixture_tables(const Options& opt);
/// Brute-force counts against series, one-sort and bicolored.
std::vector<Check> oracle(const Options& opt);
/// Kernel reductions: round trips, fiber classes, merge-order independence.
std::vector<Check> confluence(const Options& opt);

/// suite is one of identities, fixtures, oracle, confluence, all.
/// Throws std::invalid_argument for an unknown suite or bad options.
std::vector<Check> run(std::string_view suite, const Options& opt);

std::string format(const Check& c);

}  // namespace plethys::verify
