#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "plethys/cycle_index.hpp"

namespace plethys {

enum class AtomKind {
  zero,
  one,
  singleton,         // X
  sets,              // E (also K)
  sets_of_size,      // E_n
  nonempty_sets,     // E_+ (also K_+)
  combinatorial_log, // (1+X)^c
  cyclic,            // Cyc_n
  dihedral,          // Dih_n, regular n-gons
  graphs,            // G
  connected_graphs,  // G^c
};

struct AtomSpec {
  AtomKind kind = AtomKind::singleton;
  int param = 0;
};

/// One-sort cycle index of an atom, truncated at `maxdeg`.
/// Throws std::invalid_argument for out-of-range parameters.
CycleIndex atom(const AtomSpec& spec, int maxdeg);

CycleIndex sets_ci(int maxdeg);
CycleIndex sets_of_size_ci(int n, int maxdeg);
/// sum_k mu(k)/k log(1 + p_k). Cached per degree.
CycleIndex combinatorial_log_ci(int maxdeg);
CycleIndex cyclic_ci(int n, int maxdeg);
CycleIndex dihedral_ci(int n, int maxdeg);

/// Number of graphs on n labeled vertices fixed by a permutation of the given
/// cycle type.
BigInt graphs_fix(const Partition& cycle_type);
/// Cached per degree.
CycleIndex graphs_ci(int maxdeg);
CycleIndex connected_graphs_ci(int maxdeg);

/// 2^{sum_{i,j} gcd(lambda_i, mu_j)}
BigInt bicolored_fix(const Partition& white, const Partition& black);
/// Two sorts, x = white, y = black; total degree m + n <= maxdeg.
CycleIndex bicolored_ci(int maxdeg);
CycleIndex connected_bicolored_ci(int maxdeg);

/// Moves a one-sort series into sort `sort` of a `sorts`-sort series.
CycleIndex sort_inject(const CycleIndex& f, int sort, int sorts);

/// Substitutes sort `from` by `sign` times sort `to` (p_k[from] -> sign p_k[to])
/// and drops `from`; sorts above `from` shift down by one.
CycleIndex sort_subst(const CycleIndex& f, int from, int to, int sign);

/// DSL/CLI atom names: X, 1, 0, E, Ep, E_n, K, Kp, L, Cyc_n, Dih_n, G, Gc.
std::optional<AtomSpec> parse_atom_name(std::string_view name);

}  // namespace plethys
