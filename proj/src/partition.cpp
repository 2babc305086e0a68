#include "plethys/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace plethys {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it) {
      ++out.back().second;
    } else {
      out.emplace_back(*it, 1);
    }
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

BigInt partition_z(const Partition& p) {
  BigInt z = 1;
  for (auto [part, count] : p.multiplicities()) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(count));
    z *= power * factorial(count);
  }
  return z;
}

int mobius(int k) {
  if (k < 1) throw std::invalid_argument("mobius: k must be positive");
  int result = 1;
  for (int prime = 2; prime * prime <= k; ++prime) {
    if (k % prime != 0) continue;
    k /= prime;
    if (k % prime == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

int euler_phi(int k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be positive");
  int result = k;
  for (int prime = 2; prime * prime <= k; ++prime) {
    if (k % prime != 0) continue;
    while (k % prime == 0) k /= prime;
    result -= result / prime;
  }
  if (k > 1) result -= result / k;
  return result;
}

std::vector<int> divisors(int k) {
  std::vector<int> out;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace plethys
