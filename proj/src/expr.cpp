#include "plethys/expr.hpp"

#include <cctype>
#include <optional>

#include "plethys/catalog.hpp"
#include "plethys/species.hpp"

namespace plethys::expr {

bool Expr::operator==(const Expr& other) const {
  return kind == other.kind && name == other.name && number == other.number && filter == other.filter &&
         bound == other.bound && args == other.args;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

enum class Tok { ident, number, plus, minus, star, compose, lparen, rparen, lbracket, rbracket, geq, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      out.push_back({word == "o" ? Tok::compose : Tok::ident, word, start});
      continue;
    }
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i + 1 < s.size() && s[i] == '/' && is_digit(s[i + 1])) {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '>' && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({Tok::geq, ">=", start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

Expr make(NodeKind kind, std::vector<Expr> args) {
  Expr e;
  e.kind = kind;
  e.args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parse_all() {
    Expr e = sum();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().kind == Tok::end && msg.empty() ? "unexpected end of input" : msg, peek().pos);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what + (peek().kind == Tok::end ? " before end of input" : ""));
  }

  Expr sum() {
    Expr lhs = product();
    while (true) {
      if (accept(Tok::plus)) {
        lhs = make(NodeKind::sum, {std::move(lhs), product()});
      } else if (accept(Tok::minus)) {
        lhs = make(NodeKind::difference, {std::move(lhs), product()});
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = composition();
    while (accept(Tok::star)) lhs = make(NodeKind::product, {std::move(lhs), composition()});
    return lhs;
  }

  Expr composition() {
    Expr lhs = unary();
    if (accept(Tok::compose)) return make(NodeKind::compose, {std::move(lhs), composition()});
    return lhs;
  }

  Expr unary() {
    if (accept(Tok::minus)) return make(NodeKind::negate, {unary()});
    return postfix();
  }

  Expr postfix() {
    Expr e = primary();
    while (accept(Tok::lbracket)) {
      Expr r = make(NodeKind::restrict, {std::move(e)});
      r.filter = accept(Tok::geq) ? DegreeFilter::at_least : DegreeFilter::exactly;
      if (peek().kind != Tok::number || peek().text.find('/') != std::string::npos) fail("expected a degree");
      const std::string digits = next().text;
      if (digits.size() > 6) fail("degree bound too large");
      r.bound = std::stoi(digits);
      expect(Tok::rbracket, "']'");
      e = std::move(r);
    }
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        ++pos_;
        Expr e;
        e.kind = NodeKind::number;
        try {
          e.number = parse_rational(t.text);
        } catch (const std::invalid_argument& err) {
          throw ParseError(err.what(), t.pos);
        }
        return e;
      }
      case Tok::ident: {
        ++pos_;
        Expr e;
        e.name = t.text;
        if (!accept(Tok::lparen)) {
          e.kind = NodeKind::name;
          return e;
        }
        e.kind = NodeKind::apply;
        e.args.push_back(sum());
        while (accept(Tok::comma)) e.args.push_back(sum());
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::lparen: {
        ++pos_;
        Expr e = sum();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::end: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

const char* infix(NodeKind k) {
  switch (k) {
    case NodeKind::sum: return " + ";
    case NodeKind::difference: return " - ";
    case NodeKind::product: return " * ";
    case NodeKind::compose: return " o ";
    default: return "";
  }
}

// Brings a and b to the same sort count; one-sort series go into sort x.
void unify(CycleIndex& a, CycleIndex& b) {
  if (a.sorts() == b.sorts()) return;
  if (a.sorts() == 1) {
    a = sort_inject(a, 0, b.sorts());
  } else if (b.sorts() == 1) {
    b = sort_inject(b, 0, a.sorts());
  } else {
    throw EvalError("cannot combine species with " + std::to_string(a.sorts()) + " and " +
                    std::to_string(b.sorts()) + " sorts");
  }
}

CycleIndex resolve(const std::string& name, int maxdeg) {
  if (name == "Y") return CycleIndex::power_sum(1, 1, 2, maxdeg);
  if (auto spec = parse_atom_name(name)) {
    try {
      return atom(*spec, maxdeg);
    } catch (const std::invalid_argument& err) {
      throw EvalError(name + ": " + err.what());
    }
  }
  if (catalog::find_entry(name) != nullptr) return catalog::species_ci(name, maxdeg);
  throw EvalError("unknown identifier '" + name + "'");
}

CycleIndex substitute(const std::string& what, const CycleIndex& outer, std::vector<CycleIndex> inners) {
  if (static_cast<int>(inners.size()) != outer.sorts()) {
    throw EvalError(what + " has " + std::to_string(outer.sorts()) + " sort(s) but is given " +
                    std::to_string(inners.size()) + " argument(s)");
  }
  for (std::size_t i = 1; i < inners.size(); ++i) unify(inners[0], inners[i]);
  for (std::size_t i = 1; i < inners.size(); ++i) unify(inners[i], inners[0]);
  try {
    return compose(outer, inners);
  } catch (const std::invalid_argument& err) {
    throw EvalError(what + ": " + err.what());
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case NodeKind::name: return e.name;
    case NodeKind::number: return to_string(e.number);
    case NodeKind::sum:
    case NodeKind::difference:
    case NodeKind::product:
    case NodeKind::compose: return "(" + print(e.args[0]) + infix(e.kind) + print(e.args[1]) + ")";
    case NodeKind::negate: return "(-" + print(e.args[0]) + ")";
    case NodeKind::restrict:
      return print(e.args[0]) + (e.filter == DegreeFilter::at_least ? "[>=" : "[") + std::to_string(e.bound) + "]";
    case NodeKind::apply: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i == 0 ? "" : ", ") + print(e.args[i]);
      return out + ")";
    }
  }
  return "";
}

CycleIndex eval(const Expr& e, int maxdeg) {
  if (maxdeg < 0) throw EvalError("truncation degree must be nonnegative");
  switch (e.kind) {
    case NodeKind::name: return resolve(e.name, maxdeg);
    case NodeKind::number: return CycleIndex::constant(e.number, 1, maxdeg);
    case NodeKind::sum:
    case NodeKind::difference:
    case NodeKind::product: {
      CycleIndex a = eval(e.args[0], maxdeg);
      CycleIndex b = eval(e.args[1], maxdeg);
      unify(a, b);
      if (e.kind == NodeKind::sum) return a + b;
      if (e.kind == NodeKind::difference) return a - b;
      return a * b;
    }
    case NodeKind::compose: {
      CycleIndex outer = eval(e.args[0], maxdeg);
      if (outer.sorts() != 1) {
        throw EvalError("composition needs a one-sort outer species; write " + print(e.args[0]) + "(a, b)");
      }
      return substitute(print(e.args[0]), outer, {eval(e.args[1], maxdeg)});
    }
    case NodeKind::negate: return -eval(e.args[0], maxdeg);
    case NodeKind::restrict: return restrict_degree(eval(e.args[0], maxdeg), e.filter, e.bound);
    case NodeKind::apply: {
      CycleIndex outer = resolve(e.name, maxdeg);
      std::vector<CycleIndex> inners;
      for (const auto& a : e.args) inners.push_back(eval(a, maxdeg));
      return substitute(e.name, outer, std::move(inners));
    }
  }
  throw EvalError("malformed expression");
}

CycleIndex eval(std::string_view text, int maxdeg) { return eval(parse(text), maxdeg); }

}  // namespace plethys::expr
