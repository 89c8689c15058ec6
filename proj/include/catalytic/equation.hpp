// The functional-equation DSL: expression trees, the parser, polynomial
// clearing, and the plain-text equation file format. Variable names are
// fixed: P is the two-variable series, Q its specialization at t = 1,
// x the counting variable, t the catalytic variable.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catalytic/multipoly.hpp"
#include "catalytic/rational.hpp"

namespace catalytic {

struct ExprTree {
  enum class Kind { Literal, Variable, Sum, Difference, Product, Quotient, Power, Negate };

  Kind kind = Kind::Literal;
  BigRational literal;
  Var variable = Var::P;
  long exponent = 0;
  std::vector<ExprTree> kids;

  static ExprTree lit(BigRational v);
  static ExprTree var(Var v);
  static ExprTree sum(ExprTree a, ExprTree b);
  static ExprTree difference(ExprTree a, ExprTree b);
  static ExprTree product(ExprTree a, ExprTree b);
  static ExprTree quotient(ExprTree a, ExprTree b);
  static ExprTree power(ExprTree base, long e);
  static ExprTree negate(ExprTree a);

  std::string to_string() const;
};

ExprTree parse_expression(const std::string& text);

struct ParsedEquation {
  std::optional<ExprTree> phi;  // present for "P = expr" inputs
  ExprTree zero_form;           // expression equivalent to "... = 0"
};
// Accepts either "expr" (meaning expr = 0) or "P = expr".
ParsedEquation parse_equation_text(const std::string& text);

struct PolynomialForm {
  MultiPoly poly;                // primitive, sign-normalized
  std::vector<MultiPoly> loci;   // cleared denominators containing P or Q
};
PolynomialForm to_polynomial_form(const ExprTree& e);

// Exact evaluation of a polynomial-valued expression; no normalization.
// Used for the canonical-text round trip of serialized polynomials.
MultiPoly parse_polynomial(const std::string& text);

struct FunctionalEquation {
  std::string name;
  std::string dsl;
  std::optional<ExprTree> phi;
  MultiPoly F;
  BigRational initial_term;
  std::vector<MultiPoly> denominator_loci;
};

FunctionalEquation make_equation(const std::string& name, const std::string& dsl_text,
                                 const BigRational& initial_term);

// Equation file: "key: value" lines, '#' comments. Keys: name, equation,
// initial (default 1), order (default 60), max_deg_Q, max_deg_x (default 8).
// Unknown keys are an error.
struct EquationFile {
  std::string name;
  std::string equation;
  BigRational initial{1};
  long order = 60;
  int max_deg_q = 8;
  int max_deg_x = 8;
};

EquationFile parse_equation_file(const std::string& content);
EquationFile load_equation_file(const std::string& path);

}  // namespace catalytic
