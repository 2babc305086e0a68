#include "plethys/species.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace plethys {

namespace {

// Per-degree memo. A racing fill computes the same value twice; whichever
// lands first is kept, which is indistinguishable from a single fill.
class DegreeCache {
 public:
  template <typename Build>
  CycleIndex get(int maxdeg, Build&& build) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(maxdeg); it != entries_.end()) return it->second;
    }
    CycleIndex value = build();
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(maxdeg, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, CycleIndex> entries_;
};

CycleIndex p1(int maxdeg) { return CycleIndex::power_sum(0, 1, 1, maxdeg); }

}  // namespace

CycleIndex sets_of_size_ci(int n, int maxdeg) {
  if (n < 0) throw std::invalid_argument("E_n needs n >= 0");
  CycleIndex f(1, maxdeg);
  if (n > maxdeg) return f;
  for (const auto& lambda : partitions_of(n)) {
    f.add_term(PMonomial::from_partition(lambda), make_rational(1, partition_z(lambda)));
  }
  return f;
}

CycleIndex sets_ci(int maxdeg) {
  CycleIndex f(1, maxdeg);
  for (int n = 0; n <= maxdeg; ++n) f += sets_of_size_ci(n, maxdeg);
  return f;
}

CycleIndex combinatorial_log_ci(int maxdeg) {
  static DegreeCache cache;
  return cache.get(maxdeg, [maxdeg] {
    CycleIndex log_one_plus_p1 = log1p(p1(maxdeg));
    CycleIndex f(1, maxdeg);
    for (int k = 1; k <= maxdeg; ++k) {
      int mu = mobius(k);
      if (mu == 0) continue;
      f += make_rational(mu, k) * plethysm_pk(k, log_one_plus_p1);
    }
    return f;
  });
}

CycleIndex cyclic_ci(int n, int maxdeg) {
  if (n < 1) throw std::invalid_argument("Cyc_n needs n >= 1");
  CycleIndex f(1, maxdeg);
  for (int d : divisors(n)) {
    f.add_term(PMonomial::power_sum(0, d, n / d), make_rational(euler_phi(d), n));
  }
  return f;
}

CycleIndex dihedral_ci(int n, int maxdeg) {
  if (n < 3) throw std::invalid_argument("Dih_n needs n >= 3");
  CycleIndex f(1, maxdeg);
  const Rational group_order(2 * n);
  for (int d : divisors(n)) {
    f.add_term(PMonomial::power_sum(0, d, n / d), Rational(euler_phi(d)) / group_order);
  }
  if (n % 2 == 1) {
    PMonomial reflection({{0, 1, 1}, {0, 2, (n - 1) / 2}});
    f.add_term(reflection, Rational(n) / group_order);
  } else {
    PMonomial through_vertices({{0, 1, 2}, {0, 2, (n - 2) / 2}});
    PMonomial through_edges = PMonomial::power_sum(0, 2, n / 2);
    f.add_term(through_vertices, Rational(n / 2) / group_order);
    f.add_term(through_edges, Rational(n / 2) / group_order);
  }
  return f;
}

BigInt graphs_fix(const Partition& cycle_type) {
  // Twice the exponent: sum over ordered pairs of cycle lengths of
  // gcd * c_i * c_j, minus one per odd cycle.
  long twice = 0;
  const auto mult = cycle_type.multiplicities();
  for (auto [i, ci] : mult) {
    for (auto [j, cj] : mult) twice += static_cast<long>(std::gcd(i, j)) * ci * cj;
    if (i % 2 == 1) twice -= ci;
  }
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error("graphs_fix: exponent is not a nonnegative integer");
  }
  return pow2(static_cast<unsigned long>(twice / 2));
}

CycleIndex graphs_ci(int maxdeg) {
  static DegreeCache cache;
  return cache.get(maxdeg, [maxdeg] {
    CycleIndex f(1, maxdeg);
    for (int n = 0; n <= maxdeg; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        f.add_term(PMonomial::from_partition(lambda), make_rational(graphs_fix(lambda), partition_z(lambda)));
      }
    }
    return f;
  });
}

CycleIndex connected_graphs_ci(int maxdeg) {
  CycleIndex nonempty = graphs_ci(maxdeg) - CycleIndex::constant(1, 1, maxdeg);
  return compose(combinatorial_log_ci(maxdeg), nonempty);
}

BigInt bicolored_fix(const Partition& white, const Partition& black) {
  unsigned long exponent = 0;
  for (int a : white.parts()) {
    for (int b : black.parts()) exponent += static_cast<unsigned long>(std::gcd(a, b));
  }
  return pow2(exponent);
}

CycleIndex bicolored_ci(int maxdeg) {
  static DegreeCache cache;
  return cache.get(maxdeg, [maxdeg] {
    CycleIndex f(2, maxdeg);
    for (int m = 0; m <= maxdeg; ++m) {
      for (int n = 0; m + n <= maxdeg; ++n) {
        for (const auto& lambda : partitions_of(m)) {
          for (const auto& mu : partitions_of(n)) {
            PMonomial mon = PMonomial::from_partition(lambda, 0) * PMonomial::from_partition(mu, 1);
            f.add_term(mon, make_rational(bicolored_fix(lambda, mu), partition_z(lambda) * partition_z(mu)));
          }
        }
      }
    }
    return f;
  });
}

CycleIndex connected_bicolored_ci(int maxdeg) {
  CycleIndex nonempty = bicolored_ci(maxdeg) - CycleIndex::constant(1, 2, maxdeg);
  return compose(combinatorial_log_ci(maxdeg), nonempty);
}

CycleIndex sort_inject(const CycleIndex& f, int sort, int sorts) {
  if (f.sorts() != 1) throw std::invalid_argument("sort_inject expects a one-sort series");
  if (sort < 0 || sort >= sorts) throw std::invalid_argument("sort_inject: unknown sort");
  CycleIndex out(sorts, f.maxdeg());
  for (const auto& [mon, c] : f.terms()) {
    std::vector<PowerSumFactor> factors = mon.factors();
    for (auto& fac : factors) fac.sort = sort;
    out.add_term(PMonomial(std::move(factors)), c);
  }
  return out;
}

CycleIndex sort_subst(const CycleIndex& f, int from, int to, int sign) {
  if (from < 0 || from >= f.sorts() || to < 0 || to >= f.sorts() || from == to) {
    throw std::invalid_argument("sort_subst: unknown sort");
  }
  if (f.sorts() < 2) throw std::invalid_argument("sort_subst needs at least two sorts");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sort_subst: sign must be +1 or -1");
  auto renumber = [from](int s) { return s > from ? s - 1 : s; };
  CycleIndex out(f.sorts() - 1, f.maxdeg());
  for (const auto& [mon, c] : f.terms()) {
    std::vector<PowerSumFactor> factors = mon.factors();
    int flips = 0;
    for (auto& fac : factors) {
      if (fac.sort == from) {
        fac.sort = to;
        flips += fac.exp;
      }
      fac.sort = renumber(fac.sort);
    }
    Rational coef = (sign < 0 && flips % 2 == 1) ? Rational(-c) : c;
    out.add_term(PMonomial(std::move(factors)), coef);
  }
  return out;
}

namespace {

std::optional<int> suffix_int(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view digits = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<AtomSpec> parse_atom_name(std::string_view name) {
  static const std::map<std::string_view, AtomKind> fixed = {
      {"0", AtomKind::zero},          {"1", AtomKind::one},
      {"X", AtomKind::singleton},     {"E", AtomKind::sets},
      {"K", AtomKind::sets},          {"Ep", AtomKind::nonempty_sets},
      {"Kp", AtomKind::nonempty_sets}, {"L", AtomKind::combinatorial_log},
      {"G", AtomKind::graphs},        {"Gc", AtomKind::connected_graphs},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return AtomSpec{it->second, 0};
  if (auto n = suffix_int(name, "E_")) return AtomSpec{AtomKind::sets_of_size, *n};
  if (auto n = suffix_int(name, "Cyc_")) return AtomSpec{AtomKind::cyclic, *n};
  if (auto n = suffix_int(name, "Dih_")) return AtomSpec{AtomKind::dihedral, *n};
  return std::nullopt;
}

CycleIndex atom(const AtomSpec& spec, int maxdeg) {
  switch (spec.kind) {
    case AtomKind::zero: return CycleIndex(1, maxdeg);
    case AtomKind::one: return CycleIndex::constant(1, 1, maxdeg);
    case AtomKind::singleton: return p1(maxdeg);
    case AtomKind::sets: return sets_ci(maxdeg);
    case AtomKind::sets_of_size: return sets_of_size_ci(spec.param, maxdeg);
    case AtomKind::nonempty_sets: return sets_ci(maxdeg) - CycleIndex::constant(1, 1, maxdeg);
    case AtomKind::combinatorial_log: return combinatorial_log_ci(maxdeg);
    case AtomKind::cyclic: return cyclic_ci(spec.param, maxdeg);
    case AtomKind::dihedral: return dihedral_ci(spec.param, maxdeg);
    case AtomKind::graphs: return graphs_ci(maxdeg);
    case AtomKind::connected_graphs: return connected_graphs_ci(maxdeg);
  }
  throw std::invalid_argument("unknown atom");
}

}  // namespace plethys
