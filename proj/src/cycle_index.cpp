#include "plethys/cycle_index.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

namespace plethys {

// ---------------------------------------------------------------- PMonomial

PMonomial::PMonomial(std::vector<PowerSumFactor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    if (f.sort < 0 || f.part < 1 || f.exp < 0) {
      throw std::invalid_argument("invalid power-sum factor");
    }
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().sort == f.sort && factors_.back().part == f.part) {
      factors_.back().exp += f.exp;
    } else {
      factors_.push_back(f);
    }
    degree_ += f.part * f.exp;
  }
}

PMonomial PMonomial::power_sum(int sort, int part, int exp) {
  return PMonomial({PowerSumFactor{sort, part, exp}});
}

PMonomial PMonomial::from_partition(const Partition& p, int sort) {
  std::vector<PowerSumFactor> factors;
  for (auto [part, count] : p.multiplicities()) factors.push_back({sort, part, count});
  return PMonomial(std::move(factors));
}

int PMonomial::degree_in(int sort) const {
  int d = 0;
  for (const auto& f : factors_) {
    if (f.sort == sort) d += f.part * f.exp;
  }
  return d;
}

int PMonomial::exponent(int sort, int part) const {
  for (const auto& f : factors_) {
    if (f.sort == sort && f.part == part) return f.exp;
  }
  return 0;
}

int PMonomial::max_sort() const { return factors_.empty() ? -1 : factors_.back().sort; }

Partition PMonomial::partition_in(int sort) const {
  std::vector<int> parts;
  for (const auto& f : factors_) {
    if (f.sort == sort) parts.insert(parts.end(), static_cast<std::size_t>(f.exp), f.part);
  }
  return Partition(std::move(parts));
}

PMonomial PMonomial::operator*(const PMonomial& other) const {
  PMonomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() ||
        (a != factors_.end() && std::tie(a->sort, a->part) < std::tie(b->sort, b->part))) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() ||
               std::tie(b->sort, b->part) < std::tie(a->sort, a->part)) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->sort, a->part, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::strong_ordering PMonomial::operator<=>(const PMonomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  return factors_ <=> other.factors_;
}

std::string sort_name(int sort) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  if (sort >= 0 && sort < 6) return names[sort];
  return "s" + std::to_string(sort);
}

// --------------------------------------------------------------- CycleIndex

CycleIndex::CycleIndex(int sorts, int maxdeg) : sorts_(sorts), maxdeg_(maxdeg) {
  if (sorts < 1) throw std::invalid_argument("cycle index needs at least one sort");
  if (maxdeg < 0) throw std::invalid_argument("truncation degree must be nonnegative");
}

CycleIndex CycleIndex::constant(const Rational& c, int sorts, int maxdeg) {
  CycleIndex f(sorts, maxdeg);
  f.add_term(PMonomial(), c);
  return f;
}

CycleIndex CycleIndex::power_sum(int sort, int part, int sorts, int maxdeg) {
  return monomial(PMonomial::power_sum(sort, part), 1, sorts, maxdeg);
}

CycleIndex CycleIndex::monomial(const PMonomial& m, const Rational& c, int sorts, int maxdeg) {
  CycleIndex f(sorts, maxdeg);
  f.add_term(m, c);
  return f;
}

Rational CycleIndex::coefficient(const PMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CycleIndex::constant_term() const { return coefficient(PMonomial()); }

int CycleIndex::valuation() const {
  return terms_.empty() ? maxdeg_ + 1 : terms_.begin()->first.degree();
}

void CycleIndex::add_term(const PMonomial& m, const Rational& c) {
  if (m.degree() > maxdeg_ || c == 0) return;
  if (m.max_sort() >= sorts_) throw std::invalid_argument("monomial uses a sort outside the series");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

CycleIndex CycleIndex::truncated(int m) const {
  CycleIndex out(sorts_, std::min(m, maxdeg_));
  for (const auto& [mon, c] : terms_) {
    if (mon.degree() > out.maxdeg_) break;
    out.terms_.emplace_hint(out.terms_.end(), mon, c);
  }
  return out;
}

CycleIndex CycleIndex::degree_part(int n) const { return restrict_degree(*this, DegreeFilter::exactly, n); }

namespace {

void require_same_sorts(const CycleIndex& a, const CycleIndex& b) {
  if (a.sorts() != b.sorts()) {
    throw std::invalid_argument("sort count mismatch: " + std::to_string(a.sorts()) + " vs " +
                                std::to_string(b.sorts()));
  }
}

}  // namespace

CycleIndex& CycleIndex::operator+=(const CycleIndex& other) {
  require_same_sorts(*this, other);
  if (other.maxdeg_ < maxdeg_) *this = truncated(other.maxdeg_);
  for (const auto& [mon, c] : other.terms_) add_term(mon, c);
  return *this;
}

CycleIndex& CycleIndex::operator-=(const CycleIndex& other) {
  require_same_sorts(*this, other);
  if (other.maxdeg_ < maxdeg_) *this = truncated(other.maxdeg_);
  for (const auto& [mon, c] : other.terms_) add_term(mon, -c);
  return *this;
}

CycleIndex& CycleIndex::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mon, coef] : terms_) coef *= c;
  return *this;
}

CycleIndex operator+(const CycleIndex& a, const CycleIndex& b) {
  CycleIndex out = a;
  out += b;
  return out;
}

CycleIndex operator-(const CycleIndex& a, const CycleIndex& b) {
  CycleIndex out = a;
  out -= b;
  return out;
}

CycleIndex operator-(const CycleIndex& a) {
  CycleIndex out = a;
  out *= Rational(-1);
  return out;
}

CycleIndex operator*(const Rational& c, const CycleIndex& f) {
  CycleIndex out = f;
  out *= c;
  return out;
}

CycleIndex operator*(const CycleIndex& a, const CycleIndex& b) {
  require_same_sorts(a, b);
  const int d = std::min(a.maxdeg(), b.maxdeg());
  CycleIndex out(a.sorts(), d);
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() + b.valuation() > d) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > d) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

CycleIndex pow(const CycleIndex& f, int e) {
  if (e < 0) throw std::invalid_argument("negative power of a cycle index");
  CycleIndex result = CycleIndex::constant(1, f.sorts(), f.maxdeg());
  CycleIndex base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool equal_up_to(const CycleIndex& a, const CycleIndex& b, int degree) {
  if (a.sorts() != b.sorts()) return false;
  if (degree > a.maxdeg() || degree > b.maxdeg()) return false;
  return a.truncated(degree).terms() == b.truncated(degree).terms();
}

CycleIndex plethysm_pk(int k, const CycleIndex& f) {
  if (k < 1) throw std::invalid_argument("plethysm_pk: k must be positive");
  if (k == 1) return f;
  CycleIndex out(f.sorts(), f.maxdeg());
  for (const auto& [mon, c] : f.terms()) {
    if (mon.degree() * k > f.maxdeg()) break;
    std::vector<PowerSumFactor> factors = mon.factors();
    for (auto& fac : factors) fac.part *= k;
    out.add_term(PMonomial(std::move(factors)), c);
  }
  return out;
}

CycleIndex compose(const CycleIndex& outer, std::span<const CycleIndex> inners) {
  if (static_cast<int>(inners.size()) != outer.sorts()) {
    throw std::invalid_argument("compose: outer has " + std::to_string(outer.sorts()) +
                                " sorts but " + std::to_string(inners.size()) + " inner series given");
  }
  const int sorts = inners.front().sorts();
  int d = outer.maxdeg();
  for (const auto& inner : inners) {
    if (inner.sorts() != sorts) throw std::invalid_argument("compose: inner series differ in sort count");
    if (inner.constant_term() != 0) {
      throw std::invalid_argument("compose: inner series has a nonzero constant term");
    }
    d = std::min(d, inner.maxdeg());
  }

  // powers[(s, k)][e] = (p_k o inners[s])^e, filled lazily.
  std::map<std::pair<int, int>, std::vector<CycleIndex>> powers;
  auto power = [&](int s, int k, int e) -> const CycleIndex& {
    auto& list = powers[{s, k}];
    if (list.empty()) {
      list.push_back(CycleIndex::constant(1, sorts, d));
      list.push_back(plethysm_pk(k, inners[s].truncated(d)));
    }
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * list[1]);
    return list[e];
  };

  CycleIndex out(sorts, d);
  for (const auto& [mon, c] : outer.terms()) {
    if (mon.degree() > d) break;
    CycleIndex term = CycleIndex::constant(c, sorts, d);
    for (const auto& fac : mon.factors()) {
      term = term * power(fac.sort, fac.part, fac.exp);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

CycleIndex compose(const CycleIndex& outer, const CycleIndex& inner) {
  return compose(outer, std::span<const CycleIndex>(&inner, 1));
}

CycleIndex log1p(const CycleIndex& f) {
  if (f.constant_term() != 0) throw std::invalid_argument("log1p: series has a nonzero constant term");
  CycleIndex result(f.sorts(), f.maxdeg());
  CycleIndex power = f;
  for (int m = 1; m <= f.maxdeg() && !power.is_zero(); ++m) {
    result += make_rational(m % 2 == 1 ? 1 : -1, m) * power;
    power = power * f;
  }
  return result;
}

CycleIndex exp_series(const CycleIndex& f) {
  if (f.constant_term() != 0) throw std::invalid_argument("exp_series: series has a nonzero constant term");
  CycleIndex result = CycleIndex::constant(1, f.sorts(), f.maxdeg());
  CycleIndex term = result;
  for (int m = 1; m <= f.maxdeg(); ++m) {
    term = make_rational(1, m) * (term * f);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

CycleIndex invert1(const CycleIndex& f) {
  if (f.constant_term() != 1) throw std::invalid_argument("invert1: constant term must be 1");
  CycleIndex h = CycleIndex::constant(1, f.sorts(), f.maxdeg()) - f;  // f = 1 - h
  CycleIndex result = CycleIndex::constant(1, f.sorts(), f.maxdeg());
  CycleIndex power = result;
  for (int m = 1; m <= f.maxdeg(); ++m) {
    power = power * h;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

CycleIndex restrict_degree(const CycleIndex& f, DegreeFilter filter, int n) {
  if (n < 0) throw std::invalid_argument("restriction bound must be nonnegative");
  CycleIndex out(f.sorts(), f.maxdeg());
  for (const auto& [mon, c] : f.terms()) {
    bool keep = filter == DegreeFilter::exactly ? mon.degree() == n : mon.degree() >= n;
    if (keep) out.add_term(mon, c);
  }
  return out;
}

Rational egf_coeff(const CycleIndex& f, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != f.sorts()) {
    throw std::invalid_argument("egf_coeff: need one degree per sort");
  }
  std::vector<PowerSumFactor> factors;
  int total = 0;
  for (int s = 0; s < f.sorts(); ++s) {
    if (degrees[s] < 0) throw std::invalid_argument("egf_coeff: negative degree");
    total += degrees[s];
    if (degrees[s] > 0) factors.push_back({s, 1, degrees[s]});
  }
  if (total > f.maxdeg()) {
    throw std::out_of_range("degree " + std::to_string(total) + " exceeds truncation " +
                            std::to_string(f.maxdeg()));
  }
  return f.coefficient(PMonomial(std::move(factors)));
}

BigInt labeled_count(const CycleIndex& f, std::span<const int> degrees) {
  Rational c = egf_coeff(f, degrees);
  for (int d : degrees) c *= Rational(factorial(d));
  if (!is_integer(c)) throw std::domain_error("labeled count is not an integer: " + to_string(c));
  return c.get_num();
}

// ------------------------------------------------------------ MultiSeries

Rational MultiSeries::coefficient(const std::vector<int>& exps) const {
  auto it = coeffs.find(exps);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool MultiSeries::all_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return is_integer(kv.second); });
}

namespace {

int total_degree(const std::vector<int>& exps) {
  int t = 0;
  for (int e : exps) t += e;
  return t;
}

}  // namespace

std::string MultiSeries::to_text() const {
  std::vector<std::pair<std::vector<int>, Rational>> items(coeffs.begin(), coeffs.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [exps, c] : items) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t s = 0; s < exps.size(); ++s) {
      if (exps[s] == 0) continue;
      std::string name = sort_name(static_cast<int>(s));
      vars += name;
      if (exps[s] > 1) vars += "^" + std::to_string(exps[s]);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else if (is_integer(mag)) {
      out += to_string(mag) + vars;
    } else {
      out += "(" + to_string(mag) + ")" + vars;
    }
  }
  return out.empty() ? "0" : out;
}

MultiSeries ogf_series(const CycleIndex& f) {
  MultiSeries out;
  out.vars = f.sorts();
  out.maxdeg = f.maxdeg();
  for (const auto& [mon, c] : f.terms()) {
    std::vector<int> exps(static_cast<std::size_t>(f.sorts()), 0);
    for (const auto& fac : mon.factors()) exps[fac.sort] += fac.part * fac.exp;
    auto& slot = out.coeffs[exps];
    slot += c;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MultiSeries egf_series(const CycleIndex& f) {
  MultiSeries out;
  out.vars = f.sorts();
  out.maxdeg = f.maxdeg();
  for (const auto& [mon, c] : f.terms()) {
    bool only_p1 = std::all_of(mon.factors().begin(), mon.factors().end(),
                               [](const PowerSumFactor& fac) { return fac.part == 1; });
    if (!only_p1) continue;
    std::vector<int> exps(static_cast<std::size_t>(f.sorts()), 0);
    for (const auto& fac : mon.factors()) exps[fac.sort] = fac.exp;
    out.coeffs[exps] = c;
  }
  return out;
}

// ------------------------------------------------------------- text / json

namespace {

std::string factor_text(const PowerSumFactor& fac, int sorts) {
  std::string s = "p_" + std::to_string(fac.part);
  if (sorts > 1) s += "[" + sort_name(fac.sort) + "]";
  if (fac.exp > 1) s += "^" + std::to_string(fac.exp);
  return s;
}

}  // namespace

std::string to_text(const CycleIndex& f) {
  std::string out;
  for (const auto& [mon, c] : f.terms()) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += to_string(mag);
    if (!mon.is_one()) {
      out += " *";
      for (const auto& fac : mon.factors()) out += " " + factor_text(fac, f.sorts());
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class TextScanner {
 public:
  TextScanner(std::string_view text, int sorts) : text_(text), sorts_(sorts) {}

  CycleIndex parse(int maxdeg) {
    CycleIndex out(sorts_, maxdeg);
    skip_space();
    if (peek() == '0' && rest_is_zero()) return out;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [mon, coef] = parse_term();
      if (mon.degree() > maxdeg) fail("term exceeds truncation degree");
      out.add_term(mon, sign * coef);
    }
    return out;
  }

 private:
  std::pair<PMonomial, Rational> parse_term() {
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coef = parse_rational(text_.substr(start, pos_ - start));
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      } else {
        return {PMonomial(), coef};
      }
    }
    std::vector<PowerSumFactor> factors;
    while (!at_end() && peek() == 'p') {
      factors.push_back(parse_factor());
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    if (factors.empty()) fail("expected a power-sum factor");
    return {PMonomial(std::move(factors)), coef};
  }

  PowerSumFactor parse_factor() {
    expect('p');
    expect('_');
    PowerSumFactor fac;
    fac.part = parse_int();
    if (peek() == '[') {
      ++pos_;
      std::size_t start = pos_;
      while (!at_end() && peek() != ']') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      expect(']');
      fac.sort = -1;
      for (int s = 0; s < sorts_; ++s) {
        if (sort_name(s) == name) fac.sort = s;
      }
      if (fac.sort < 0) fail("unknown sort '" + name + "'");
    } else if (sorts_ > 1) {
      fail("multisort factor needs a sort tag");
    }
    if (peek() == '^') {
      ++pos_;
      fac.exp = parse_int();
    }
    return fac;
  }

  int parse_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  bool rest_is_zero() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("cycle index text, offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  int sorts_;
  std::size_t pos_ = 0;
};

}  // namespace

CycleIndex parse_cycle_index(std::string_view text, int sorts, int maxdeg) {
  return TextScanner(text, sorts).parse(maxdeg);
}

std::string to_json(const CycleIndex& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mon, c] : f.terms()) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& fac : mon.factors()) m.push_back({fac.sort, fac.part, fac.exp});
    terms.push_back({{"mon", m}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  nlohmann::json j = {{"sorts", f.sorts()}, {"maxdeg", f.maxdeg()}, {"terms", terms}};
  return j.dump();
}

CycleIndex from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    CycleIndex out(j.at("sorts").get<int>(), j.at("maxdeg").get<int>());
    for (const auto& t : j.at("terms")) {
      std::vector<PowerSumFactor> factors;
      for (const auto& fac : t.at("mon")) {
        factors.push_back({fac.at(0).get<int>(), fac.at(1).get<int>(), fac.at(2).get<int>()});
      }
      BigInt num(t.at("num").get<std::string>());
      BigInt den(t.at("den").get<std::string>());
      out.add_term(PMonomial(std::move(factors)), make_rational(num, den));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cycle index json: ") + e.what());
  }
}

}  // namespace plethys
