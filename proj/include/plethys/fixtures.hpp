#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/cycle_index.hpp"

namespace plethys::fixtures {

/// A place where the stored table departs from, or needs a reading of, the
/// printed one.
struct Flag {
  std::string kind;  // value, grouping, typesetting, omission
  std::string monomial;
  std::string printed;
  std::string stored;
  std::string reason;
};

struct CountCheck {
  std::vector<int> degrees;
  BigInt count;
};

struct Table {
  std::string name;
  std::string species;
  std::string file;
  std::string source;
  int sorts = 1;
  int top_degree = 0;
  /// Degrees at which the table lists every monomial, so unlisted ones are zero.
  std::vector<int> complete_degrees;
  std::vector<Flag> flags;
  std::vector<CountCheck> labeled;
  std::vector<CountCheck> unlabeled;
  CycleIndex terms{1, 0};
};

struct Decomposition {
  std::string name;
  std::string target;  // expression for the species it decomposes
  std::string expression;
  std::string printed;  // set when the stored expression corrects the printed one
  std::string reason;
  std::string source;
  int top_degree = 0;
};

struct Manifest {
  std::vector<Table> tables;
  std::vector<Decomposition> decompositions;
};

/// $PLETHYS_FIXTURE_DIR if set, else the source tree's fixtures directory.
std::filesystem::path default_directory();

/// Reads manifest.json and every table it lists. Throws std::runtime_error.
Manifest load(const std::filesystem::path& dir);
Manifest load();

/// "1" or a product of power-sum factors such as "p_1^2 p_3" or "p_2[x] p_1[y]".
PMonomial parse_monomial(std::string_view text, int sorts);

}  // namespace plethys::fixtures
