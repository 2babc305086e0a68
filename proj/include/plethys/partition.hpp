#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "plethys/rational.hpp"

namespace plethys {

/// Integer partition stored as weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  /// Parts may be given in any order; they are sorted. Throws on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// c_i: number of parts equal to i.
  int multiplicity(int i) const;
  /// (part, multiplicity) pairs, part ascending.
  std::vector<std::pair<int, int>> multiplicities() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n, in reverse lexicographic order starting at (n).
std::vector<Partition> partitions_of(int n);

/// Size of the centralizer of a permutation with cycle type `p`:
/// prod_i i^{c_i} c_i!.
BigInt partition_z(const Partition& p);

int mobius(int k);
int euler_phi(int k);
std::vector<int> divisors(int k);

}  // namespace plethys
