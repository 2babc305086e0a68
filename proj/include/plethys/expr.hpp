#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/cycle_index.hpp"

namespace plethys::expr {

enum class NodeKind {
  name,        // atom or catalog identifier
  number,      // nonnegative rational literal
  sum,
  difference,
  product,
  compose,     // args[0] o args[1]
  negate,
  restrict,    // args[0][n] or args[0][>=n]
  apply,       // name(args...)
};

/// Species expression tree. Value type; children are owned.
struct Expr {
  NodeKind kind = NodeKind::number;
  std::string name;
  Rational number = 0;
  DegreeFilter filter = DegreeFilter::exactly;
  int bound = 0;
  std::vector<Expr> args;

  bool operator==(const Expr& other) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precedence, loosest first: + and -, *, o (right-associative), unary -,
/// postfix [n] / [>=n], F(a, ...), parentheses.
Expr parse(std::string_view text);

/// Fully parenthesized; parse(print(e)) == e for every parsed e.
std::string print(const Expr& e);

/// Identifiers resolve to atoms first (X, Y, 0, 1, E, Ep, E_n, K, Kp, L,
/// Cyc_n, Dih_n, G, Gc), then to catalog names. One-sort operands mixed with
/// two-sort ones are read in sort x. Throws EvalError.
CycleIndex eval(const Expr& e, int maxdeg);
CycleIndex eval(std::string_view text, int maxdeg);

}  // namespace plethys::expr
