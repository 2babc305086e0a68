#include "plethys/catalog.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "plethys/species.hpp"

namespace plethys::catalog {

namespace {

CycleIndex x1(int d) { return CycleIndex::power_sum(0, 1, 1, d); }
CycleIndex one(int sorts, int d) { return CycleIndex::constant(1, sorts, d); }
CycleIndex px(int d) { return CycleIndex::power_sum(0, 1, 2, d); }
CycleIndex py(int d) { return CycleIndex::power_sum(1, 1, 2, d); }

// (1+X)^c lifted into one sort of a two-sort series.
CycleIndex log_in_sort(int sort, int d) { return sort_inject(combinatorial_log_ci(d), sort, 2); }

CycleIndex two_log_minus_x(int d) { return Rational(2) * combinatorial_log_ci(d) - x1(d); }

using Builder = std::function<CycleIndex(int)>;

struct Entry {
  EntryInfo info;
  Builder build;
};

CycleIndex cached(std::string_view name, int d);

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {{"P", 1, "point-determining graphs", true},
       [](int d) { return compose(graphs_ci(d), combinatorial_log_ci(d)); }},
      {{"Q", 1, "co-point-determining graphs", true}, [](int d) { return cached("P", d); }},
      {{"Qc", 1, "connected co-point-determining graphs", true},
       [](int d) { return compose(connected_graphs_ci(d), combinatorial_log_ci(d)); }},
      {{"Pc", 1, "connected point-determining graphs", true},
       [](int d) { return x1(d) + cached("Qc", d) - combinatorial_log_ci(d); }},
      {{"Mc", 1, "connected graphs without endpoints", true},
       [](int d) {
         CycleIndex minus_x = -x1(d);
         return compose(connected_graphs_ci(d), x_times_sets_of_minus_x(d)) +
                compose(sets_of_size_ci(2, d), minus_x);
       }},
      {{"McAlt", 1, "connected graphs without endpoints, via trees", true},
       [](int d) {
         return x1(d) + compose(connected_graphs_ci(d) - cached("A", d), x_times_sets_of_minus_x(d));
       }},
      {{"M", 1, "graphs without endpoints", true},
       [](int d) { return compose(sets_ci(d), cached("Mc", d)); }},
      {{"Ar", 1, "rooted trees", true}, [](int d) { return rooted_trees_ci(d); }},
      {{"A", 1, "trees", true},
       [](int d) {
         CycleIndex ar = cached("Ar", d);
         return ar + compose(sets_of_size_ci(2, d), ar) - ar * ar;
       }},
      {{"C", 1, "cographs", true}, [](int d) { return cographs_ci(d); }},
      {{"Cc", 1, "connected cographs", true},
       [](int d) { return make_rational(1, 2) * (cached("C", d) + x1(d)); }},
      {{"B", 1, "bi-point-determining graphs", true},
       [](int d) { return compose(graphs_ci(d), two_log_minus_x(d)); }},
      {{"Bc", 1, "connected bi-point-determining graphs", true},
       [](int d) {
         return compose(connected_graphs_ci(d), two_log_minus_x(d)) - combinatorial_log_ci(d) + x1(d);
       }},
      {{"GXY", 2, "bicolored graphs", true}, [](int d) { return bicolored_ci(d); }},
      {{"GcXY", 2, "connected bicolored graphs", true}, [](int d) { return connected_bicolored_ci(d); }},
      {{"PsXY", 2, "semi-point-determining bicolored graphs", true},
       [](int d) {
         std::vector<CycleIndex> inners = {log_in_sort(0, d), log_in_sort(1, d)};
         return compose(bicolored_ci(d), inners);
       }},
      {{"Pc2XY", 2, "connected point-determining bicolored graphs on >= 2 vertices", true},
       [](int d) {
         CycleIndex isolated = (one(2, d) + px(d)) * (one(2, d) + py(d));
         CycleIndex sets_of_components = cached("PsXY", d) * invert1(isolated);
         return compose(combinatorial_log_ci(d), sets_of_components - one(2, d));
       }},
      {{"PcXY", 2, "connected point-determining bicolored graphs", true},
       [](int d) { return px(d) + py(d) + cached("Pc2XY", d); }},
      {{"PXY", 2, "point-determining bicolored graphs", true},
       [](int d) {
         return (one(2, d) + px(d) + py(d)) * compose(sets_ci(d), cached("Pc2XY", d));
       }},
      {{"HXXY", 2, "H(X, X+Y): connected graphs, endpoints of either sort", true},
       [](int d) {
         CycleIndex e_y = compose(sets_ci(d), py(d));
         return compose(connected_graphs_ci(d), px(d) * e_y) + compose(sets_of_size_ci(2, d), py(d));
       }},
  };
  return t;
}

const Entry* find(std::string_view name) {
  for (const auto& e : table()) {
    if (e.info.name == name) return &e;
  }
  return nullptr;
}

CycleIndex cached(std::string_view name, int d) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, CycleIndex> memo;
  const Entry* entry = find(name);
  if (entry == nullptr) throw std::invalid_argument("unknown species '" + std::string(name) + "'");
  std::pair<std::string, int> key{std::string(name), d};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  CycleIndex value = entry->build(d);
  std::lock_guard lock(mutex);
  return memo.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

const std::vector<EntryInfo>& entries() {
  static const std::vector<EntryInfo> infos = [] {
    std::vector<EntryInfo> out;
    for (const auto& e : table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const EntryInfo* find_entry(std::string_view name) {
  for (const auto& info : entries()) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

CycleIndex species_ci(std::string_view name, int maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  return cached(name, maxdeg);
}

CycleIndex rooted_trees_ci(int maxdeg) {
  CycleIndex ar(1, maxdeg);
  for (int n = 1; n <= maxdeg; ++n) {
    // The degree-n part of X E(A^r) only sees parts of A^r below degree n.
    CycleIndex rhs = x1(n) * compose(sets_ci(n), ar.truncated(n));
    const CycleIndex part = rhs.degree_part(n);
    for (const auto& [mon, c] : part.terms()) ar.add_term(mon, c);
  }
  return ar;
}

CycleIndex cographs_ci(int maxdeg) {
  CycleIndex c(1, maxdeg);
  CycleIndex nonempty_sets = sets_ci(maxdeg) - one(1, maxdeg);
  for (int n = 1; n <= maxdeg; ++n) {
    // C_n = C_n / 2 + K_n, with K_n the degree-n part of E_+((C_{<n} + X) / 2).
    CycleIndex inner = make_rational(1, 2) * (c.truncated(n) + x1(n));
    CycleIndex k = compose(nonempty_sets.truncated(n), inner).degree_part(n);
    for (const auto& [mon, coef] : k.terms()) c.add_term(mon, 2 * coef);
  }
  return c;
}

CycleIndex x_times_sets_of_minus_x(int maxdeg) {
  CycleIndex minus_x = -x1(maxdeg);
  return x1(maxdeg) * compose(sets_ci(maxdeg), minus_x);
}

BigInt CountTable::at(const std::vector<int>& degrees) const {
  auto it = entries.find(degrees);
  if (it == entries.end()) throw std::out_of_range("count table has no such entry");
  return it->second;
}

CountTable counts(const CycleIndex& f, bool labeled, int n_max) {
  if (n_max > f.maxdeg()) {
    throw std::out_of_range("n_max " + std::to_string(n_max) + " exceeds truncation degree " +
                            std::to_string(f.maxdeg()));
  }
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (f.sorts() > 2) throw std::invalid_argument("counts supports one or two sorts");
  CountTable table;
  table.sorts = f.sorts();
  table.n_max = n_max;
  MultiSeries ogf = ogf_series(f);
  auto record = [&](const std::vector<int>& degrees) {
    if (labeled) {
      table.entries[degrees] = labeled_count(f, degrees);
    } else {
      Rational c = ogf.coefficient(degrees);
      if (!is_integer(c)) throw std::domain_error("unlabeled count is not an integer: " + to_string(c));
      table.entries[degrees] = c.get_num();
    }
  };
  if (f.sorts() == 1) {
    for (int n = 0; n <= n_max; ++n) record({n});
  } else {
    for (int m = 0; m <= n_max; ++m) {
      for (int n = 0; m + n <= n_max; ++n) record({m, n});
    }
  }
  return table;
}

CountTable counts(std::string_view name, bool labeled, int n_max) {
  return counts(species_ci(name, n_max), labeled, n_max);
}

namespace {

using RationalPoly = std::vector<Rational>;

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<BigInt> edge_gf(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("edge_gf needs m, n >= 0");
  RationalPoly total(static_cast<std::size_t>(m * n + 1), Rational(0));
  for (const auto& lambda : partitions_of(m)) {
    for (const auto& mu : partitions_of(n)) {
      RationalPoly term = {make_rational(1, partition_z(lambda) * partition_z(mu))};
      for (auto [k, ck] : lambda.multiplicities()) {
        for (auto [l, cl] : mu.multiplicities()) {
          const int orbit = std::lcm(k, l);
          RationalPoly factor(static_cast<std::size_t>(orbit + 1), Rational(0));
          factor[0] = 1;
          factor[static_cast<std::size_t>(orbit)] = 1;
          for (int r = 0; r < ck * cl * std::gcd(k, l); ++r) term = poly_mul(term, factor);
        }
      }
      for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
    }
  }
  std::vector<BigInt> out;
  out.reserve(total.size());
  for (const auto& c : total) {
    if (!is_integer(c)) throw std::logic_error("edge_gf: non-integer coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace plethys::catalog
