#include "catalytic/equation.hpp"

#include "catalytic/errors.hpp"
#include "doctest.h"
#include <random>

#include "test_util.hpp"

using catalytic::BigRational;
using catalytic::EquationFile;
using catalytic::ExprTree;
using catalytic::make_equation;
using catalytic::MultiPoly;
using catalytic::parse_equation_file;
using catalytic::parse_equation_text;
using catalytic::parse_expression;
using catalytic::parse_polynomial;
using catalytic::to_polynomial_form;
using catalytic::Var;

TEST_CASE("parsing basics") {
  const ExprTree e = parse_expression("1/(1-x*t)");
  CHECK(e.kind == ExprTree::Kind::Quotient);
  CHECK(e.kids[0].kind == ExprTree::Kind::Literal);
  CHECK(e.kids[0].literal == BigRational(1));
  CHECK(e.kids[1].kind == ExprTree::Kind::Difference);

  // Precedence: ^ over unary minus over * / over + -.
  CHECK(parse_expression("-x^2").to_string() == "-x^2");
  CHECK(parse_expression("1 - 2*x").to_string() == "1 - 2*x");
  CHECK(parse_expression("(1-t)^2").to_string() == "(1 - t)^2");

  // Left associativity.
  const ExprTree chain = parse_expression("1 - x - t");
  CHECK(chain.kind == ExprTree::Kind::Difference);
  CHECK(chain.kids[0].kind == ExprTree::Kind::Difference);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_expression("x +"), catalytic::SyntaxError);
  try {
    parse_expression("x +");
  } catch (const catalytic::SyntaxError& e) {
    CHECK(e.position == 3);
  }
  CHECK_THROWS_AS(parse_expression("1 + y"), catalytic::UnknownSymbol);
  try {
    parse_expression("1 + foo");
  } catch (const catalytic::UnknownSymbol& e) {
    CHECK(e.symbol == "foo");
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_expression(""), catalytic::SyntaxError);
  CHECK_THROWS_AS(parse_expression("(x"), catalytic::SyntaxError);
  CHECK_THROWS_AS(parse_expression("x ^ t"), catalytic::SyntaxError);
  CHECK_THROWS_AS(parse_expression("x * * t"), catalytic::SyntaxError);
}

TEST_CASE("print-parse fixed point") {
  for (const char* s :
       {"1/(1-x*t)", "P - 1 - x*t*P*Q", "1/(1-x*t) + x*t*(Q-t*P)*(Q-P)/(1-t)^2 - P",
        "-(x+t)^3*Q", "1 - 2/3", "-x^2 - -t", "((P))", "x^2^3"}) {
    const ExprTree t1 = parse_expression(s);
    const std::string p1 = t1.to_string();
    const std::string p2 = parse_expression(p1).to_string();
    CHECK(p1 == p2);
  }
}

TEST_CASE("fixed-point form") {
  const auto pe = parse_equation_text("P = 1 + x*t*P*Q");
  REQUIRE(pe.phi.has_value());
  CHECK(pe.phi->to_string() == "1 + x*t*P*Q");
  const auto plain = parse_equation_text("P - 1 - x*t*P*Q");
  CHECK(!plain.phi.has_value());
  CHECK_THROWS_AS(parse_equation_text("Q = 1 + x"), catalytic::SyntaxError);
}

TEST_CASE("polynomial clearing: already-polynomial input") {
  const auto pf = to_polynomial_form(parse_expression("P - 1 - x*t*P*Q"));
  // Canonical form flips the sign so the leading term is positive.
  CHECK(pf.poly == parse_polynomial("P*Q*x*t - P + 1"));
  CHECK(pf.loci.empty());
}

TEST_CASE("polynomial clearing: the two-stack equation") {
  const auto pf = to_polynomial_form(
      parse_expression("1/(1-x*t) + x*t*(Q-t*P)*(Q-P)/(1-t)^2 - P"));
  // Cleared by hand: (1-t)^2 (1-xt) P - (1-t)^2 - xt(1-xt)(Q-tP)(Q-P) = 0.
  const MultiPoly P = MultiPoly::variable(Var::P);
  const MultiPoly Q = MultiPoly::variable(Var::Q);
  const MultiPoly x = MultiPoly::variable(Var::X);
  const MultiPoly t = MultiPoly::variable(Var::T);
  const MultiPoly one(1);
  const MultiPoly omt2 = (one - t) * (one - t);
  const MultiPoly omxt = one - x * t;
  const MultiPoly cleared = omt2 * omxt * P - omt2 - x * t * omxt * (Q - t * P) * (Q - P);
  CHECK(pf.poly == cleared.primitive_part());
  CHECK(pf.loci.empty());

  // At t = 1 the whole polynomial collapses to -x(1-x)(Q-P)^2 up to sign.
  const MultiPoly at1 = cleared.substitute(Var::T, BigRational(1));
  CHECK(at1 == -(x * (one - x) * (Q - P) * (Q - P)));
}

TEST_CASE("polynomial clearing: denominators containing P are recorded") {
  const auto pf = to_polynomial_form(parse_expression("1/P - x"));
  CHECK(pf.poly == parse_polynomial("P*x - 1"));
  REQUIRE(pf.loci.size() == 1);
  CHECK(pf.loci[0] == parse_polynomial("P"));
}

TEST_CASE("clearing rejects zero denominators") {
  CHECK_THROWS_AS(to_polynomial_form(parse_expression("1/(x - x)")),
                  catalytic::NonPolynomialDenominator);
}

TEST_CASE("repeated denominators are cleared once") {
  const auto pf = to_polynomial_form(parse_expression("1/(1-t) + 1/(1-t) - P"));
  CHECK(pf.poly == parse_polynomial("P*t - P + 2"));
}

TEST_CASE("make_equation validates the cleared polynomial") {
  const auto eq = make_equation("catalan", "P = 1 + x*t*P*Q", BigRational(1));
  CHECK(eq.F == parse_polynomial("P*Q*x*t - P + 1"));
  CHECK(eq.phi.has_value());
  CHECK(eq.initial_term == BigRational(1));
  CHECK_THROWS_AS(make_equation("bad", "P - P", BigRational(1)), catalytic::EquationError);
  CHECK_THROWS_AS(make_equation("noP", "Q - 1", BigRational(1)), catalytic::EquationError);
}

TEST_CASE("hostile inputs are rejected, not crashed on") {
  // Deep nesting trips the depth cap instead of blowing the stack.
  std::string deep(5000, '(');
  deep += "x";
  deep += std::string(5000, ')');
  CHECK_THROWS_AS(parse_expression(deep), catalytic::SyntaxError);
  CHECK_THROWS_AS(parse_expression(std::string(5000, '-') + "x"), catalytic::SyntaxError);

  // Oversized exponents: at the literal level and via nesting.
  CHECK_THROWS_AS(parse_expression("x^99999999999999999999"), catalytic::SyntaxError);
  CHECK_THROWS_AS(parse_expression("x^1000001"), catalytic::SyntaxError);
  CHECK_THROWS_AS(to_polynomial_form(parse_expression("((x^9999)^9999)^9999")),
                  catalytic::DegreeOverflow);

  // Random garbage must always produce a clean error or a valid tree.
  std::mt19937 gen(4242);
  const std::string alphabet = "PQxt0123456789+-*/^() .";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    const int n = len(gen);
    for (int i = 0; i < n; ++i) s += alphabet[pick(gen)];
    try {
      const ExprTree t = parse_expression(s);
      (void)t.to_string();
    } catch (const catalytic::SyntaxError&) {
    } catch (const catalytic::EquationError&) {
    }
  }
}

TEST_CASE("equation files") {
  const EquationFile f = parse_equation_file(
      "# two-stack-sortable\n"
      "name: west\n"
      "equation: P = 1/(1-x*t) + x*t*(Q-t*P)*(Q-P)/(1-t)^2\n"
      "initial: 1\n"
      "order: 60\n"
      "max_deg_Q: 8\n"
      "max_deg_x: 8\n");
  CHECK(f.name == "west");
  CHECK(f.order == 60);
  CHECK(f.max_deg_q == 8);
  CHECK(f.max_deg_x == 8);
  CHECK(f.initial == BigRational(1));

  const EquationFile defaults = parse_equation_file("equation: P = 1 + x*P\n");
  CHECK(defaults.order == 60);
  CHECK(defaults.max_deg_q == 8);
  CHECK(defaults.initial == BigRational(1));
  CHECK(defaults.name == "unnamed");

  CHECK_THROWS_AS(parse_equation_file("equation: P = 1\nbogus_key: 3\n"),
                  catalytic::EquationError);
  CHECK_THROWS_AS(parse_equation_file("name: empty\n"), catalytic::EquationError);
  CHECK_THROWS_AS(parse_equation_file("equation: P = 1 + x*P\norder: -5\n"),
                  catalytic::EquationError);
}
