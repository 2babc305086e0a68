#include <doctest.h>

#include <string>
#include <vector>

#include "plethys/catalog.hpp"
#include "plethys/expr.hpp"
#include "plethys/species.hpp"

using namespace plethys;
using expr::NodeKind;

TEST_CASE("parse structure") {
  expr::Expr e = expr::parse("G o (2*L - X)");
  REQUIRE(e.kind == NodeKind::compose);
  CHECK(e.args[0].name == "G");
  REQUIRE(e.args[1].kind == NodeKind::difference);
  CHECK(e.args[1].args[0].kind == NodeKind::product);
  CHECK(e.args[1].args[0].args[0].number == 2);

  expr::Expr app = expr::parse("E(Pc[>=2])");
  REQUIRE(app.kind == NodeKind::apply);
  CHECK(app.name == "E");
  REQUIRE(app.args.size() == 1);
  CHECK(app.args[0].kind == NodeKind::restrict);
  CHECK(app.args[0].filter == DegreeFilter::at_least);
  CHECK(app.args[0].bound == 2);

  CHECK(expr::parse("3/4").number == make_rational(3, 4));
}

TEST_CASE("precedence") {
  // composition binds tighter than difference
  expr::Expr e = expr::parse("Gc - A o B");
  REQUIRE(e.kind == NodeKind::difference);
  CHECK(e.args[1].kind == NodeKind::compose);
  // composition is right-associative
  expr::Expr r = expr::parse("E o Ep o L");
  REQUIRE(r.kind == NodeKind::compose);
  CHECK(r.args[0].name == "E");
  CHECK(r.args[1].kind == NodeKind::compose);
  // composition binds tighter than product
  expr::Expr p = expr::parse("X*E_2 o E_2");
  REQUIRE(p.kind == NodeKind::product);
  CHECK(p.args[1].kind == NodeKind::compose);
  // unary minus binds tighter than composition
  expr::Expr n = expr::parse("-X o E");
  REQUIRE(n.kind == NodeKind::compose);
  CHECK(n.args[0].kind == NodeKind::negate);
  CHECK(expr::parse("A - B - C").args[0].kind == NodeKind::difference);
}

TEST_CASE("print reparses to the same tree") {
  const std::vector<std::string> samples = {
      "G o (2*L - X)", "E(Pc[>=2])", "X + (Gc - A) o (X * (E o (-X)))", "1/2*(C + X)", "-X o E o -Y",
      "PsXY(Ep o X, Ep o Y)", "E_2 o (X*X) + Dih_5[5] - 0", "((P))[3]", "-(-(X))"};
  for (const auto& s : samples) {
    CAPTURE(s);
    expr::Expr e = expr::parse(s);
    CHECK(expr::parse(expr::print(e)) == e);
  }
}

TEST_CASE("syntax errors carry a position") {
  auto position_of = [](const std::string& text) {
    try {
      expr::parse(text);
    } catch (const expr::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("X +") == 3);
  CHECK(position_of("(X") == 2);
  CHECK(position_of("X $ Y") == 2);
  CHECK(position_of("X[>=") == 4);
  CHECK(position_of("1/0") >= 0);
  CHECK(position_of("X Y") == 2);
  CHECK(position_of("") == 0);
  // unknown identifiers parse and fail at evaluation
  CHECK(position_of("Nope") == -1);
  CHECK_THROWS_AS(expr::eval("Nope", 3), expr::EvalError);
}

TEST_CASE("evaluation") {
  CHECK(expr::eval("G o (2*L - X)", 5) == catalog::species_ci("B", 5));
  CHECK(expr::eval("1 + X + E_2 + (X*E_2 + E_3)", 3) == catalog::species_ci("P", 3));
  for (int d = 0; d <= 12; ++d) CHECK(expr::eval("Ep o L", d) == CycleIndex::power_sum(0, 1, 1, d));
  CHECK(expr::eval("0", 4).is_zero());
  CHECK(expr::eval("1/2*(C + X)", 6) == catalog::species_ci("Cc", 6));
  CHECK(expr::eval("E(Pc[>=2])", 6) == expr::eval("E o Pc[>=2]", 6));
  CHECK(expr::eval("P[3]", 5) == restrict_degree(catalog::species_ci("P", 5), DegreeFilter::exactly, 3));
}

TEST_CASE("evaluation is a homomorphism") {
  const int d = 6;
  CycleIndex a = expr::eval("Pc", d);
  CycleIndex b = expr::eval("E_2 o (X*X)", d);
  CHECK(expr::eval("Pc + E_2 o (X*X)", d) == a + b);
  CHECK(expr::eval("Pc - E_2 o (X*X)", d) == a - b);
  CHECK(expr::eval("Pc * E_2 o (X*X)", d) == a * b);
  CHECK(expr::eval("-Pc", d) == -a);
  CHECK(expr::eval("Pc o E_2 o (X*X)", d) == compose(a, b));
  CHECK(expr::eval("3/2 * Pc", d) == make_rational(3, 2) * a);
}

TEST_CASE("two sorts") {
  CycleIndex y = expr::eval("Y", 3);
  CHECK(y.sorts() == 2);
  CHECK(y.coefficient(PMonomial::power_sum(1, 1)) == 1);
  // one-sort operands are read in sort x
  CHECK(expr::eval("X + Y", 3) == expr::eval("Y + X", 3));
  CHECK(expr::eval("E(X) * E(Y)", 4) == expr::eval("E o (X + Y)", 4));
  CHECK(expr::eval("GXY(X, Y)", 4) == catalog::species_ci("GXY", 4));
  CHECK(expr::eval("GXY(X, X)", 4).sorts() == 1);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(expr::eval("GXY o X", 4), expr::EvalError);
  CHECK_THROWS_AS(expr::eval("GXY(X)", 4), expr::EvalError);
  CHECK_THROWS_AS(expr::eval("E o E", 4), expr::EvalError);
  CHECK_THROWS_AS(expr::eval("Dih_2", 4), expr::EvalError);
  CHECK_THROWS_AS(expr::eval("E(X, Y)", 4), expr::EvalError);
}
