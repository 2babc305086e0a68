#include "plethys/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "plethys/catalog.hpp"
#include "plethys/expr.hpp"
#include "plethys/fixtures.hpp"
#include "plethys/graph_io.hpp"
#include "plethys/kernel.hpp"
#include "plethys/oracle.hpp"
#include "plethys/species.hpp"

namespace plethys::verify {

namespace {

using graphs::Graph;
using Outcome = std::pair<bool, std::string>;

Check make_check(std::string suite, std::string name, std::string reference, bool passed, std::string detail = "") {
  return {std::move(suite), std::move(name), std::move(reference), passed, std::move(detail)};
}

// Runs `body`, turning an exception into a failed check.
Check guarded(const std::string& suite, const std::string& name, const std::string& reference,
              const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    return make_check(suite, name, reference, ok, detail);
  } catch (const std::exception& e) {
    return make_check(suite, name, reference, false, std::string("error: ") + e.what());
  }
}

std::string monomial_text(const PMonomial& m, int sorts) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += ' ';
    out += "p_" + std::to_string(f.part);
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
    if (sorts > 1) out += "[" + sort_name(f.sort) + "]";
  }
  return out;
}

// First differing term of a and b, or "" when equal.
std::string first_difference(const CycleIndex& a, const CycleIndex& b) {
  if (a.sorts() != b.sorts()) return "sort counts differ";
  CycleIndex d = a - b;
  if (d.is_zero()) return "";
  const PMonomial& mon = d.terms().begin()->first;
  return "first difference at " + monomial_text(mon, a.sorts()) + ": " + to_string(a.coefficient(mon)) + " vs " +
         to_string(b.coefficient(mon));
}

std::pair<bool, std::string> equal_series(const CycleIndex& a, const CycleIndex& b) {
  std::string diff = first_difference(a, b);
  return {diff.empty(), diff.empty() ? std::to_string(a.size()) + " terms agree" : diff};
}

std::pair<bool, std::string> equal_expressions(std::string_view lhs, std::string_view rhs, int degree) {
  return equal_series(expr::eval(lhs, degree), expr::eval(rhs, degree));
}

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i == 0 ? "" : " ") + to_string(v[i]);
  return out;
}

struct ExpressionIdentity {
  std::string name;
  std::string reference;
  std::string lhs;
  std::string rhs;
};

const std::vector<ExpressionIdentity>& expression_identities() {
  static const std::vector<ExpressionIdentity> table = {
      {"inverse pair", "nonempty sets and the combinatorial logarithm are compositional inverses", "Ep o L", "X"},
      {"inverse pair, reversed", "nonempty sets and the combinatorial logarithm are compositional inverses",
       "L o Ep", "X"},
      {"graphs over point-determining", "every graph is a point-determining graph superimposed on nonempty sets: G = P o E+", "G",
       "P o Ep"},
      {"point-determining product form", "P = (1 + X) E(P^c restricted to at least two vertices)", "P",
       "(1 + X) * (E o Pc[>=2])"},
      {"point-determining from co-connected", "P = E(Q^c)", "P", "E o Qc"},
      {"logarithm split", "(1+X)^c = Q^c - P^c restricted to at least two vertices", "L", "Qc - Pc[>=2]"},
      {"endpoint-free via trees", "M^c from connected graphs over X E(-X) equals M^c via trees, X + (G^c - A)(X E(-X))", "Mc",
       "X + (Gc - A) o (X * (E o (-X)))"},
      {"cograph inverse", "cographs invert 2(1+X)^c - X: C(2L - X) = X", "C o (2*L - X)", "X"},
      {"cograph inverse, reversed", "cographs invert 2(1+X)^c - X: (2L - X)(C) = X", "(2*L - X) o C", "X"},
      {"graphs over bi-point-determining", "every graph is a bi-point-determining graph superimposed on cographs: G = B o C", "G", "B o C"},
      {"bi-point-determining product form", "B = (1 + X) E(B^c - X)", "B", "(1 + X) * (E o (Bc - X))"},
      {"bicolored connected components", "bicolored graphs are sets of connected ones: G(X,Y) = E(G^c(X,Y))", "GXY", "E o GcXY"},
      {"semi-point-determining product form", "P^s(X,Y) = (1 + X)(1 + Y) E(P^c_{>=2}(X,Y))", "PsXY", "(1 + X) * (1 + Y) * (E o Pc2XY)"},
      {"bicolored point-determining product form", "P(X,Y) = (1 + X + Y) E(P^c_{>=2}(X,Y))", "PXY", "(1 + X + Y) * (E o Pc2XY)"},
      {"bicolored graphs over semi-point-determining", "G(X,Y) = P^s(E+(X), E+(Y))", "GXY", "PsXY(Ep o X, Ep o Y)"},
      {"trees over the rooted-tree inverse", "trees composed with the rooted-tree inverse: A(X E(-X)) = X - E_2(-X)", "A o (X * (E o (-X)))",
       "X - E_2 o (-X)"},
  };
  return table;
}

Rational series_coefficient(const MultiSeries& s, int n) { return s.coefficient({n}); }

std::vector<Check> positivity(int degree) {
  std::vector<Check> out;
  for (const auto& entry : catalog::entries()) {
    if (!entry.genuine) continue;
    out.push_back(guarded("identities", "positivity " + entry.name,
                          "a genuine species has nonnegative integer labeled and unlabeled counts", [&] {
                            CycleIndex f = catalog::species_ci(entry.name, degree);
                            for (bool labeled : {true, false}) {
                              const catalog::CountTable table = catalog::counts(f, labeled, degree);
                              for (const auto& [degs, c] : table.entries) {
                                if (c < 0) return Outcome{false, "negative count " + to_string(c)};
                              }
                            }
                            return Outcome{true, std::string("counts nonnegative through degree ") +
                                                       std::to_string(degree)};
                          }));
  }
  return out;
}

}  // namespace

std::vector<Check> identities(const Options& opt) {
  const int d = opt.degree;
  if (d < 2) throw std::invalid_argument("identity battery needs degree >= 2");
  std::vector<Check> out;
  for (const auto& id : expression_identities()) {
    out.push_back(guarded("identities", id.name, id.reference + "  [" + id.lhs + " == " + id.rhs + "]",
                          [&] { return equal_expressions(id.lhs, id.rhs, d); }));
  }
  out.push_back(guarded("identities", "type series difference", "type series of Q^c minus that of P^c is exactly -x^2", [&] {
    MultiSeries q = ogf_series(catalog::species_ci("Qc", d));
    MultiSeries p = ogf_series(catalog::species_ci("Pc", d));
    for (int n = 0; n <= d; ++n) {
      Rational diff = series_coefficient(q, n) - series_coefficient(p, n);
      Rational want = n == 2 ? -1 : 0;
      if (diff != want) return Outcome{false, "degree " + std::to_string(n) + ": " + to_string(diff)};
    }
    return Outcome{true, "all coefficients through degree " + std::to_string(d) + " match"};
  }));
  out.push_back(guarded("identities", "exponential series difference", "exponential series of Q^c minus that of P^c is log(1+x) - x", [&] {
    MultiSeries q = egf_series(catalog::species_ci("Qc", d));
    MultiSeries p = egf_series(catalog::species_ci("Pc", d));
    for (int n = 0; n <= d; ++n) {
      Rational diff = series_coefficient(q, n) - series_coefficient(p, n);
      Rational want = n >= 2 ? make_rational(n % 2 == 1 ? 1 : -1, n) : Rational(0);
      if (diff != want) return Outcome{false, "degree " + std::to_string(n) + ": " + to_string(diff)};
    }
    return Outcome{true, "all coefficients through degree " + std::to_string(d) + " match"};
  }));
  for (const auto& [left, right] : {std::pair{"M", "Q"}, std::pair{"Mc", "Qc"}}) {
    const std::string lhs = left;
    const std::string rhs = right;
    out.push_back(guarded("identities", "equinumerous " + lhs,
                          "unlabeled " + lhs + " and " + rhs + " are equinumerous", [&] {
                            MultiSeries a = ogf_series(catalog::species_ci(lhs, d));
                            MultiSeries b = ogf_series(catalog::species_ci(rhs, d));
                            return std::pair{a.coeffs == b.coeffs, a.to_text()};
                          }));
  }
  out.push_back(guarded("identities", "endpoint-free via two sorts",
                        "H(X, X+Y) = G^c(X E(Y)) + E_2(Y) with Y replaced by -X gives M^c", [&] {
                          CycleIndex h = catalog::species_ci("HXXY", d);
                          return equal_series(sort_subst(h, 1, 0, -1), catalog::species_ci("Mc", d));
                        }));
  out.push_back(guarded("identities", "bi-point-determining forbidden monomials",
                        "Z_B has no monomial p_1^a p_2, p_1^a p_3 or p_1^a p_4", [&] {
                          const CycleIndex b = catalog::species_ci("B", d);
                          for (const auto& [mon, c] : b.terms()) {
                            int other_parts = 0;
                            int other = 0;
                            for (const auto& f : mon.factors()) {
                              if (f.part == 1) continue;
                              other_parts += f.exp;
                              other = f.part;
                            }
                            if (other_parts == 1 && other <= 4) {
                              return Outcome{false, "found a term of degree " + std::to_string(mon.degree())};
                            }
                          }
                          return Outcome{true, std::string("none through degree ") + std::to_string(d)};
                        }));
  for (auto& c : positivity(d)) out.push_back(std::move(c));
  return out;
}

std::vector<Check> fixture_tables(const Options& opt) {
  (void)opt;
  std::vector<Check> out;
  fixtures::Manifest manifest;
  try {
    manifest = fixtures::load();
  } catch (const std::exception& e) {
    out.push_back(make_check("fixtures", "manifest", "fixture manifest loads", false, e.what()));
    return out;
  }
  auto oracle_for = [](const std::string& species, int degree) -> CycleIndex {
    for (const auto& p : graphs::oracle_pairs()) {
      if (p.species == species) return graphs::fixed_point_cycle_index(p.predicate, degree);
    }
    for (const auto& p : graphs::bicolored_oracle_pairs()) {
      if (p.species == species) return graphs::bicolored_fixed_point_cycle_index(p.predicate, degree);
    }
    throw std::invalid_argument("no oracle for " + species);
  };

  for (const auto& t : manifest.tables) {
    int degree = t.top_degree;
    for (const auto* checks : {&t.labeled, &t.unlabeled}) {
      for (const auto& c : *checks) degree = std::max(degree, std::accumulate(c.degrees.begin(), c.degrees.end(), 0));
    }
    const std::string tag = t.name + ": ";
    const std::string ref = t.source;
    CycleIndex computed(t.sorts, 0);
    try {
      computed = catalog::species_ci(t.species, degree);
    } catch (const std::exception& e) {
      out.push_back(make_check("fixtures", tag + "species", ref, false, e.what()));
      continue;
    }
    out.push_back(guarded("fixtures", tag + "listed terms", ref, [&] {
      for (const auto& [mon, c] : t.terms.terms()) {
        if (computed.coefficient(mon) != c) {
          return Outcome{false, first_difference(t.terms, computed.truncated(t.top_degree))};
        }
      }
      return Outcome{true, std::to_string(t.terms.size()) + " listed terms agree exactly"};
    }));
    out.push_back(guarded("fixtures", tag + "complete degrees", ref + ", degrees listed in full", [&] {
      for (int n : t.complete_degrees) {
        CycleIndex a = restrict_degree(t.terms, DegreeFilter::exactly, n);
        CycleIndex b = restrict_degree(computed.truncated(t.top_degree), DegreeFilter::exactly, n);
        if (!(a == b)) return Outcome{false, "degree " + std::to_string(n) + ": " + first_difference(a, b)};
      }
      return Outcome{true, std::to_string(t.complete_degrees.size()) + " degrees agree term by term"};
    }));
    out.push_back(guarded("fixtures", tag + "oracle", ref + ", against brute-force fixed-point counts", [&] {
      CycleIndex fix = oracle_for(t.species, t.top_degree);
      for (const auto& [mon, c] : t.terms.terms()) {
        if (fix.coefficient(mon) != c) return Outcome{false, first_difference(t.terms, fix)};
      }
      return Outcome{true, "every listed term matches the oracle"};
    }));
    for (const auto& f : t.flags) {
      out.push_back(guarded("fixtures", tag + "flag " + f.kind + " " + f.monomial, f.reason, [&] {
        if (f.kind == "omission") return Outcome{true, std::string("noted, nothing to compare")};
        PMonomial mon = fixtures::parse_monomial(f.monomial, t.sorts);
        Rational stored = parse_rational(f.stored);
        if (t.terms.coefficient(mon) != stored) return Outcome{false, std::string("table disagrees with flag")};
        if (f.kind != "value") return Outcome{true, "stored " + f.stored};
        Rational oracle_value = oracle_for(t.species, mon.degree()).coefficient(mon);
        if (oracle_value != stored) return Outcome{false, "oracle gives " + to_string(oracle_value)};
        if (oracle_value == parse_rational(f.printed)) {
          return Outcome{false, std::string("oracle agrees with the printed value")};
        }
        return Outcome{true, "printed " + f.printed + ", oracle and series give " + f.stored};
      }));
    }
    for (bool labeled : {true, false}) {
      const auto& checks = labeled ? t.labeled : t.unlabeled;
      if (checks.empty()) continue;
      out.push_back(guarded("fixtures", tag + (labeled ? "labeled counts" : "unlabeled counts"),
                            ref + (labeled ? ", exponential series" : ", type series"), [&] {
                              catalog::CountTable table = catalog::counts(computed, labeled, degree);
                              for (const auto& c : checks) {
                                if (table.at(c.degrees) != c.count) {
                                  return Outcome{false, "count " + to_string(table.at(c.degrees)) +
                                                              " where the table has " + to_string(c.count)};
                                }
                              }
                              return Outcome{true, std::to_string(checks.size()) + " counts agree"};
                            }));
    }
  }

  for (const auto& dec : manifest.decompositions) {
    out.push_back(guarded("fixtures", "decomposition " + dec.name,
                          dec.source + " up to degree " + std::to_string(dec.top_degree), [&] {
                            auto result = equal_expressions(dec.expression, dec.target, dec.top_degree);
                            if (!result.first || dec.printed.empty()) return result;
                            auto printed = equal_expressions(dec.printed, dec.target, dec.top_degree);
                            if (printed.first) return Outcome{false, std::string("printed form also matches")};
                            return Outcome{true, "corrected form matches; printed form: " + printed.second};
                          }));
  }
  return out;
}

std::vector<Check> oracle(const Options& opt) {
  const int n_max = opt.n_max;
  if (n_max < 0 || n_max > graphs::unlabeled_limit) {
    throw std::invalid_argument("oracle n_max must be between 0 and " + std::to_string(graphs::unlabeled_limit));
  }
  std::vector<Check> out;
  for (const auto& p : graphs::oracle_pairs()) {
    CycleIndex series(1, 0);
    try {
      series = catalog::species_ci(p.species, n_max);
    } catch (const std::exception& e) {
      out.push_back(make_check("oracle", p.species, p.label, false, e.what()));
      continue;
    }
    for (bool labeled : {true, false}) {
      out.push_back(guarded("oracle", p.species + (labeled ? " labeled" : " unlabeled"),
                            p.label + " graphs counted by brute force against the series", [&] {
                              std::vector<BigInt> brute;
                              std::vector<BigInt> from_series;
                              catalog::CountTable table = catalog::counts(series, labeled, n_max);
                              for (int n = 0; n <= n_max; ++n) {
                                brute.push_back(labeled ? graphs::count_labeled(p.predicate, n)
                                                        : graphs::count_unlabeled(p.predicate, n));
                                from_series.push_back(table.at({n}));
                              }
                              if (brute != from_series) {
                                return Outcome{false, "oracle " + join(brute) + ", series " + join(from_series)};
                              }
                              return Outcome{true, join(brute)};
                            }));
    }
    out.push_back(guarded("oracle", p.species + " cycle index",
                          p.label + " graphs: fixed points per cycle type against the cycle index",
                          [&] { return equal_series(graphs::fixed_point_cycle_index(p.predicate, n_max), series); }));
  }

  for (const auto& p : graphs::bicolored_oracle_pairs()) {
    CycleIndex series = catalog::species_ci(p.species, n_max);
    for (bool labeled : {true, false}) {
      out.push_back(guarded("oracle", p.species + (labeled ? " labeled" : " unlabeled"),
                            p.label + " graphs counted by brute force against the series", [&] {
                              catalog::CountTable table = catalog::counts(series, labeled, n_max);
                              for (int m = 0; m <= n_max; ++m) {
                                for (int n = 0; m + n <= n_max; ++n) {
                                  BigInt brute = labeled ? graphs::count_bicolored_labeled(p.predicate, m, n)
                                                         : graphs::count_bicolored_unlabeled(p.predicate, m, n);
                                  if (brute != table.at({m, n})) {
                                    return Outcome{false, "(" + std::to_string(m) + "," + std::to_string(n) +
                                                                "): oracle " + to_string(brute) + ", series " +
                                                                to_string(table.at({m, n}))};
                                  }
                                }
                              }
                              return Outcome{true, "all m + n <= " + std::to_string(n_max) + " agree"};
                            }));
    }
    out.push_back(guarded("oracle", p.species + " cycle index",
                          p.label + " graphs: fixed points per pair of cycle types against the cycle index", [&] {
                            return equal_series(graphs::bicolored_fixed_point_cycle_index(p.predicate, n_max),
                                                series);
                          }));
  }

  auto everything = [](const graphs::BicoloredGraph&) { return true; };
  out.push_back(guarded("oracle", "bicolored labeled 2^{mn}", "there are 2^{mn} labeled bicolored graphs", [&] {
    CycleIndex g = catalog::species_ci("GXY", 8);
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const BigInt want = pow2(static_cast<unsigned long>(m * n));
        const std::vector<int> degs = {m, n};
        if (labeled_count(g, degs) != want || graphs::count_bicolored_labeled(everything, m, n) != want) {
          return Outcome{false, "(" + std::to_string(m) + "," + std::to_string(n) + ")"};
        }
      }
    }
    return Outcome{true, std::string("series and oracle give 2^{mn} for m, n <= 4")};
  }));
  out.push_back(guarded("oracle", "edge polynomial b_{2,3}",
                        "three unlabeled bicolored graphs on 2 + 3 vertices have four edges", [&] {
                          std::vector<BigInt> b = catalog::edge_gf(2, 3);
                          std::vector<BigInt> brute = graphs::count_bicolored_by_edges(everything, 2, 3);
                          return std::pair{b[4] == 3 && brute[4] == 3 && b == brute, join(b)};
                        }));
  out.push_back(guarded("oracle", "edge polynomials", "b_{m,n} against edge counts of the oracle and b_{m,n}(1) "
                                                      "against the unlabeled bicolored count", [&] {
                          MultiSeries ogf = ogf_series(catalog::species_ci("GXY", n_max));
                          for (int m = 0; m <= n_max; ++m) {
                            for (int n = 0; m + n <= n_max; ++n) {
                              std::vector<BigInt> b = catalog::edge_gf(m, n);
                              BigInt total = std::accumulate(b.begin(), b.end(), BigInt(0));
                              if (b != graphs::count_bicolored_by_edges(everything, m, n) ||
                                  Rational(total) != ogf.coefficient({m, n})) {
                                return Outcome{false, "(" + std::to_string(m) + "," + std::to_string(n) + ")"};
                              }
                            }
                          }
                          return Outcome{true, "all m + n <= " + std::to_string(n_max) + " agree"};
                        }));
  out.push_back(guarded("oracle", "complement", "complementation is an involution exchanging point-determining "
                                                "and co-point-determining graphs", [&] {
                          for (int n = 0; n <= std::min(n_max, 6); ++n) {
                            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
                              Graph g = graphs::from_edge_code(n, code);
                              Graph h = graphs::complement(g);
                              if (!(graphs::complement(h) == g) || graphs::is_pd(g) != graphs::is_co_pd(h)) {
                                return Outcome{false, "fails on " + graphs::graph_to_json(g)};
                              }
                            }
                          }
                          return Outcome{true, "all graphs with n <= " + std::to_string(std::min(n_max, 6))};
                        }));
  return out;
}

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.size());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph random_cograph(int k, std::mt19937_64& rng) {
  if (k == 1) return Graph(1);
  const int a = std::uniform_int_distribution<int>(1, k - 1)(rng);
  const bool join = std::bernoulli_distribution(0.5)(rng);
  Graph outer(2);
  if (join) outer.add_edge(0, 1);
  return graphs::superimpose(outer, {random_cograph(a, rng), random_cograph(k - a, rng)});
}

Graph random_graph(int n, std::mt19937_64& rng) {
  const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::bernoulli_distribution(p)(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// A random graph blown up by random cographs, then shuffled, so that
// sibling merges are plentiful.
Graph random_blown_up(int n, std::mt19937_64& rng) {
  const int k = std::uniform_int_distribution<int>(1, std::min(n, 6))(rng);
  std::vector<int> sizes(static_cast<std::size_t>(k), 1);
  for (int extra = n - k; extra > 0; --extra) ++sizes[std::uniform_int_distribution<int>(0, k - 1)(rng)];
  std::vector<Graph> fibers;
  for (int s : sizes) fibers.push_back(random_cograph(s, rng));
  Graph g = graphs::superimpose(random_graph(k, rng), fibers);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

bool fibers_all(const graphs::KernelResult& r, const std::function<bool(const Graph&)>& pred) {
  return std::all_of(r.fiber_graphs.begin(), r.fiber_graphs.end(), pred);
}

struct Tally {
  long passed = 0;
  long failed = 0;
  std::string first_failure;

  void record(bool ok, const Graph& g) {
    if (ok) {
      ++passed;
    } else if (failed++ == 0) {
      first_failure = graphs::graph_to_json(g);
    }
  }
  std::pair<bool, std::string> result() const {
    if (failed == 0) return {true, std::to_string(passed) + " graphs"};
    return {false, std::to_string(failed) + " failures, first " + first_failure};
  }
};

}  // namespace

std::vector<Check> confluence(const Options& opt) {
  if (opt.max_random_vertices < 1 || opt.max_random_vertices > graphs::max_vertices) {
    throw std::invalid_argument("random graph size must be between 1 and 32");
  }
  if (opt.random_graphs < 0 || opt.merge_orders < 1) throw std::invalid_argument("bad confluence sample sizes");
  std::mt19937_64 rng(opt.seed);
  std::vector<Graph> sample;
  for (int i = 0; i < opt.random_graphs; ++i) {
    const int n = std::uniform_int_distribution<int>(1, opt.max_random_vertices)(rng);
    sample.push_back(i % 2 == 0 ? random_blown_up(n, rng) : random_graph(n, rng));
  }

  enum Property {
    open_round_trip, open_fibers, open_kernel,
    closed_round_trip, closed_fibers, closed_kernel,
    bipd_round_trip, bipd_fibers, bipd_kernel_ok, bipd_orders, sibling_disjoint, property_count
  };
  std::vector<Tally> tallies(property_count);
  long reduced = 0;
  auto edgeless = [](const Graph& f) { return f.edge_count() == 0; };
  auto complete = [](const Graph& f) { return f.edge_count() == f.size() * (f.size() - 1) / 2; };
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Graph& g = sample[i];
    auto open = graphs::pd_kernel(g, graphs::SiblingMode::open);
    tallies[open_round_trip].record(graphs::reconstruct(open) == g, g);
    tallies[open_fibers].record(fibers_all(open, edgeless), g);
    tallies[open_kernel].record(graphs::is_pd(open.kernel), g);
    auto closed = graphs::pd_kernel(g, graphs::SiblingMode::closed);
    tallies[closed_round_trip].record(graphs::reconstruct(closed) == g, g);
    tallies[closed_fibers].record(fibers_all(closed, complete), g);
    tallies[closed_kernel].record(graphs::is_co_pd(closed.kernel), g);
    try {
      auto base = graphs::bipd_kernel(g);
      tallies[bipd_round_trip].record(graphs::reconstruct(base) == g, g);
      tallies[bipd_fibers].record(fibers_all(base, [](const Graph& f) { return graphs::is_p4_free(f); }), g);
      tallies[bipd_kernel_ok].record(graphs::is_bipd(base.kernel), g);
      const std::string reference = graphs::kernel_to_json(base);
      bool same = true;
      for (int k = 0; k < opt.merge_orders; ++k) {
        const std::uint64_t seed = opt.seed * 1000003ULL + i * 7919ULL + static_cast<std::uint64_t>(k);
        auto other = graphs::bipd_kernel(g, seed);
        same = same && graphs::kernel_to_json(other) == reference && other.fiber_graphs == base.fiber_graphs;
      }
      tallies[bipd_orders].record(same, g);
      if (base.kernel.size() < g.size()) ++reduced;
      tallies[sibling_disjoint].record(true, g);
    } catch (const std::logic_error&) {
      tallies[sibling_disjoint].record(false, g);
    }
  }

  const std::string sample_desc = std::to_string(opt.random_graphs) + " seeded random graphs, n <= " +
                                  std::to_string(opt.max_random_vertices);
  const std::vector<std::pair<std::string, std::string>> names = {
      {"open kernel round trip", "superimposing the fibers on the open-neighbourhood kernel restores the graph"},
      {"open kernel fibers", "fibers of the open-neighbourhood kernel are edgeless"},
      {"open kernel is point-determining", "the open-neighbourhood quotient is point-determining"},
      {"closed kernel round trip", "superimposing the fibers on the closed-neighbourhood kernel restores the graph"},
      {"closed kernel fibers", "fibers of the closed-neighbourhood kernel are complete"},
      {"closed kernel is co-point-determining", "the closed-neighbourhood quotient is co-point-determining"},
      {"bi-pd kernel round trip", "superimposing the fibers on the bi-point-determining kernel restores the graph"},
      {"bi-pd kernel fibers", "fibers of the bi-point-determining kernel are cographs (induced-P4-free)"},
      {"bi-pd kernel is bi-point-determining", "no sibling pair survives the reduction"},
      {"bi-pd merge order", "the reduction is confluent: " + std::to_string(opt.merge_orders) +
                                " random merge orders give byte-identical kernels and fibers"},
      {"sibling disjointness", "no vertex is in both a weak and a strong sibling pair"},
  };
  std::vector<Check> out;
  for (int p = 0; p < property_count; ++p) {
    auto [ok, detail] = tallies[p].result();
    if (p == bipd_orders) detail += ", " + std::to_string(reduced) + " with at least one merge";
    out.push_back(make_check("confluence", names[p].first, names[p].second + "; " + sample_desc, ok, detail));
  }

  out.push_back(guarded("confluence", "cograph recognition",
                        "kernel collapse to at most one vertex agrees with induced-P4-freeness", [&] {
                          long graphs_seen = 0;
                          for (int n = 0; n <= 6; ++n) {
                            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
                              Graph g = graphs::from_edge_code(n, code);
                              ++graphs_seen;
                              if (graphs::is_cograph(g) != graphs::is_p4_free(g)) {
                                return Outcome{false, "disagree on " + graphs::graph_to_json(g)};
                              }
                            }
                          }
                          return Outcome{true, "all " + std::to_string(graphs_seen) + " labeled graphs with n <= 6"};
                        }));
  return out;
}

std::vector<Check> run(std::string_view suite, const Options& opt) {
  if (opt.degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (suite == "identities") return identities(opt);
  if (suite == "fixtures") return fixture_tables(opt);
  if (suite == "oracle") return oracle(opt);
  if (suite == "confluence") return confluence(opt);
  if (suite == "all") {
    std::vector<Check> out;
    for (auto* part : {&identities, &fixture_tables, &oracle, &confluence}) {
      for (auto& c : (*part)(opt)) out.push_back(std::move(c));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::string format(const Check& c) {
  std::ostringstream out;
  out << (c.passed ? "PASS" : "FAIL") << "  " << c.suite << "  " << c.name << "  (" << c.reference << ")";
  if (!c.detail.empty()) out << ": " << c.detail;
  return out.str();
}

}  // namespace plethys::verify
