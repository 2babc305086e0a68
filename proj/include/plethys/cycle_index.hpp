#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/partition.hpp"
#include "plethys/rational.hpp"

namespace plethys {

/// One factor p_part[sort]^exp of a power-sum monomial.
struct PowerSumFactor {
  int sort = 0;
  int part = 1;
  int exp = 1;

  auto operator<=>(const PowerSumFactor&) const = default;
};

/// Multisort power-sum monomial. Factors are kept sorted by (sort, part) with
/// no zero exponents, so equal monomials compare equal.
///
/// Ordering is by total degree first, then lexicographically on the factor
/// list; this is the order in which cycle index terms are stored and printed.
class PMonomial {
 public:
  PMonomial() = default;
  explicit PMonomial(std::vector<PowerSumFactor> factors);

  static PMonomial power_sum(int sort, int part, int exp = 1);
  static PMonomial from_partition(const Partition& p, int sort = 0);

  const std::vector<PowerSumFactor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int degree_in(int sort) const;
  int exponent(int sort, int part) const;
  bool is_one() const { return factors_.empty(); }
  /// Largest sort index used, or -1 for the unit monomial.
  int max_sort() const;
  /// The one-sort cycle type in `sort`, ignoring other sorts.
  Partition partition_in(int sort) const;

  PMonomial operator*(const PMonomial& other) const;

  std::strong_ordering operator<=>(const PMonomial& other) const;
  bool operator==(const PMonomial& other) const = default;

 private:
  std::vector<PowerSumFactor> factors_;
  int degree_ = 0;
};

/// Name used for a sort in text output: x, y, z, w, u, v, then s6, s7, ...
std::string sort_name(int sort);

/// Truncated multisort cycle index series with exact rational coefficients.
///
/// Every stored monomial has degree <= maxdeg and a nonzero coefficient.
/// Binary operations truncate at the smaller of the two degrees, so the
/// degree-m part of a result only depends on degree <= m parts of its inputs.
class CycleIndex {
 public:
  using TermMap = std::map<PMonomial, Rational>;

  CycleIndex(int sorts, int maxdeg);

  static CycleIndex constant(const Rational& c, int sorts, int maxdeg);
  /// p_part[sort]
  static CycleIndex power_sum(int sort, int part, int sorts, int maxdeg);
  static CycleIndex monomial(const PMonomial& m, const Rational& c, int sorts, int maxdeg);

  int sorts() const { return sorts_; }
  int maxdeg() const { return maxdeg_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const PMonomial& m) const;
  Rational constant_term() const;
  /// Lowest degree with a nonzero term, or maxdeg + 1 for the zero series.
  int valuation() const;

  /// Adds c * m. Terms above maxdeg are dropped; cancelled terms are erased.
  void add_term(const PMonomial& m, const Rational& c);

  CycleIndex truncated(int m) const;
  CycleIndex degree_part(int n) const;

  CycleIndex& operator+=(const CycleIndex& other);
  CycleIndex& operator-=(const CycleIndex& other);
  CycleIndex& operator*=(const Rational& c);

  /// Same sort count, same truncation degree, same terms.
  bool operator==(const CycleIndex& other) const = default;

 private:
  int sorts_;
  int maxdeg_;
  TermMap terms_;
};

CycleIndex operator+(const CycleIndex& a, const CycleIndex& b);
CycleIndex operator-(const CycleIndex& a, const CycleIndex& b);
CycleIndex operator-(const CycleIndex& a);
CycleIndex operator*(const CycleIndex& a, const CycleIndex& b);
CycleIndex operator*(const Rational& c, const CycleIndex& f);

CycleIndex pow(const CycleIndex& f, int e);

/// Compares terms of degree <= `degree` only.
bool equal_up_to(const CycleIndex& a, const CycleIndex& b, int degree);

/// Plethysm by p_k: every p_j[s] becomes p_{jk}[s].
CycleIndex plethysm_pk(int k, const CycleIndex& f);

/// Plethystic substitution p_k[s] -> p_k o inners[s]. Every inner must have
/// zero constant term; all inners share a sort count, which the result has.
CycleIndex compose(const CycleIndex& outer, std::span<const CycleIndex> inners);
/// One-sort outer.
CycleIndex compose(const CycleIndex& outer, const CycleIndex& inner);

/// log(1 + f) for f with zero constant term.
CycleIndex log1p(const CycleIndex& f);
/// exp(f) for f with zero constant term.
CycleIndex exp_series(const CycleIndex& f);
/// Multiplicative inverse of f, which must have constant term 1.
CycleIndex invert1(const CycleIndex& f);

enum class DegreeFilter { exactly, at_least };
CycleIndex restrict_degree(const CycleIndex& f, DegreeFilter filter, int n);

/// Coefficient of prod_s p_1[s]^{degrees[s]}.
Rational egf_coeff(const CycleIndex& f, std::span<const int> degrees);
/// egf_coeff times prod_s degrees[s]!. Throws std::domain_error when the
/// result is not an integer.
BigInt labeled_count(const CycleIndex& f, std::span<const int> degrees);

/// Multivariate series in one indeterminate per sort, keyed by exponent
/// vectors; used for type (OGF) and exponential generating series.
struct MultiSeries {
  int vars = 1;
  int maxdeg = 0;
  std::map<std::vector<int>, Rational> coeffs;

  Rational coefficient(const std::vector<int>& exps) const;
  bool all_integral() const;
  std::string to_text() const;
};

/// p_k[s] -> t_s^k.
MultiSeries ogf_series(const CycleIndex& f);
/// p_1[s] -> t_s, p_k[s] -> 0 for k >= 2.
MultiSeries egf_series(const CycleIndex& f);

/// Canonical text: terms by (degree, monomial order), e.g.
/// "1 + 1 * p_1 + 1/2 * p_1^2 + 1/2 * p_2"; multisort factors carry [x], [y].
std::string to_text(const CycleIndex& f);
/// Inverse of to_text. Also accepts terms without an explicit coefficient.
CycleIndex parse_cycle_index(std::string_view text, int sorts, int maxdeg);

/// {"sorts":S,"maxdeg":D,"terms":[{"mon":[[s,k,e],...],"num":"..","den":".."}]}
std::string to_json(const CycleIndex& f);
CycleIndex from_json(std::string_view text);

}  // namespace plethys
