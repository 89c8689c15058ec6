#include "catalytic/equation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "catalytic/errors.hpp"

namespace catalytic {

ExprTree ExprTree::lit(BigRational v) {
  ExprTree e;
  e.kind = Kind::Literal;
  e.literal = std::move(v);
  return e;
}

ExprTree ExprTree::var(Var v) {
  ExprTree e;
  e.kind = Kind::Variable;
  e.variable = v;
  return e;
}

namespace {

ExprTree binary(ExprTree::Kind k, ExprTree a, ExprTree b) {
  ExprTree e;
  e.kind = k;
  e.kids.push_back(std::move(a));
  e.kids.push_back(std::move(b));
  return e;
}

}  // namespace

ExprTree ExprTree::sum(ExprTree a, ExprTree b) {
  return binary(Kind::Sum, std::move(a), std::move(b));
}
ExprTree ExprTree::difference(ExprTree a, ExprTree b) {
  return binary(Kind::Difference, std::move(a), std::move(b));
}
ExprTree ExprTree::product(ExprTree a, ExprTree b) {
  return binary(Kind::Product, std::move(a), std::move(b));
}
ExprTree ExprTree::quotient(ExprTree a, ExprTree b) {
  return binary(Kind::Quotient, std::move(a), std::move(b));
}

ExprTree ExprTree::power(ExprTree base, long e) {
  if (e < 0) throw EquationError("power: exponent must be nonnegative");
  ExprTree p;
  p.kind = Kind::Power;
  p.exponent = e;
  p.kids.push_back(std::move(base));
  return p;
}

ExprTree ExprTree::negate(ExprTree a) {
  ExprTree e;
  e.kind = Kind::Negate;
  e.kids.push_back(std::move(a));
  return e;
}

namespace {

bool is_atom(const ExprTree& e) {
  return e.kind == ExprTree::Kind::Variable ||
         (e.kind == ExprTree::Kind::Literal && e.literal.is_integer() &&
          e.literal.sign() >= 0);
}

std::string print_child(const ExprTree& e, bool parens) {
  const std::string s = e.to_string();
  return parens ? "(" + s + ")" : s;
}

bool is_additive(const ExprTree& e) {
  return e.kind == ExprTree::Kind::Sum || e.kind == ExprTree::Kind::Difference;
}

bool is_multiplicative(const ExprTree& e) {
  return e.kind == ExprTree::Kind::Product || e.kind == ExprTree::Kind::Quotient;
}

}  // namespace

std::string ExprTree::to_string() const {
  switch (kind) {
    case Kind::Literal:
      return literal.sign() < 0 ? "(" + literal.to_string() + ")" : literal.to_string();
    case Kind::Variable:
      return var_name(variable);
    case Kind::Sum:
      return print_child(kids[0], false) + " + " + print_child(kids[1], is_additive(kids[1]));
    case Kind::Difference:
      return print_child(kids[0], false) + " - " + print_child(kids[1], is_additive(kids[1]));
    case Kind::Product:
      return print_child(kids[0], is_additive(kids[0])) + "*" +
             print_child(kids[1], is_additive(kids[1]) || is_multiplicative(kids[1]));
    case Kind::Quotient:
      return print_child(kids[0], is_additive(kids[0])) + "/" +
             print_child(kids[1], !is_atom(kids[1]));
    case Kind::Power:
      return print_child(kids[0], !is_atom(kids[0])) + "^" + std::to_string(exponent);
    case Kind::Negate:
      return "-" + print_child(kids[0], kids[0].kind != Kind::Power && !is_atom(kids[0]));
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Tokenizer and precedence-climbing parser.
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '/': k = Token::Kind::Slash; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case '=': k = Token::Kind::Equals; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

Var var_from_name(const std::string& name, std::size_t pos) {
  if (name == "P") return Var::P;
  if (name == "Q") return Var::Q;
  if (name == "x") return Var::X;
  if (name == "t") return Var::T;
  throw UnknownSymbol(name, pos);
}

constexpr int kMaxParseDepth = 256;
constexpr long kMaxLiteralExponent = 100000;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprTree parse_full() {
    ExprTree e = expression();
    expect_end();
    return e;
  }

  ExprTree expression() {
    const DepthGuard guard(*this);
    ExprTree lhs = term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const bool plus = take().kind == Token::Kind::Plus;
      ExprTree rhs = term();
      lhs = plus ? ExprTree::sum(std::move(lhs), std::move(rhs))
                 : ExprTree::difference(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::End)
      throw SyntaxError("unexpected token '" + peek().text + "'", peek().pos);
  }

 private:
  ExprTree term() {
    ExprTree lhs = unary();
    while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
      const bool star = take().kind == Token::Kind::Star;
      ExprTree rhs = unary();
      lhs = star ? ExprTree::product(std::move(lhs), std::move(rhs))
                 : ExprTree::quotient(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprTree unary() {
    const DepthGuard guard(*this);
    if (peek().kind == Token::Kind::Minus) {
      take();
      return ExprTree::negate(unary());
    }
    return power();
  }

  ExprTree power() {
    ExprTree base = primary();
    while (peek().kind == Token::Kind::Caret) {
      take();
      const Token& e = peek();
      if (e.kind != Token::Kind::Number)
        throw SyntaxError("exponent must be a nonnegative integer", e.pos);
      take();
      long value = 0;
      try {
        value = std::stol(e.text);
      } catch (const std::out_of_range&) {
        value = kMaxLiteralExponent + 1;
      }
      if (value > kMaxLiteralExponent)
        throw SyntaxError("exponent too large (limit " +
                              std::to_string(kMaxLiteralExponent) + ")",
                          e.pos);
      base = ExprTree::power(std::move(base), value);
    }
    return base;
  }

  ExprTree primary() {
    const Token& tk = peek();
    switch (tk.kind) {
      case Token::Kind::Number:
        take();
        return ExprTree::lit(BigRational(BigInt(tk.text)));
      case Token::Kind::Ident:
        take();
        return ExprTree::var(var_from_name(tk.text, tk.pos));
      case Token::Kind::LParen: {
        take();
        ExprTree e = expression();
        if (peek().kind != Token::Kind::RParen)
          throw SyntaxError("expected ')'", peek().pos);
        take();
        return e;
      }
      default:
        throw SyntaxError("expected a number, variable, or '('", tk.pos);
    }
  }

  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxParseDepth)
        throw SyntaxError("expression nesting too deep", parser.peek().pos);
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int depth_ = 0;
};

}  // namespace

ExprTree parse_expression(const std::string& text) {
  if (text.empty()) throw SyntaxError("empty expression", 0);
  return Parser(tokenize(text)).parse_full();
}

ParsedEquation parse_equation_text(const std::string& text) {
  if (text.empty()) throw SyntaxError("empty equation", 0);
  auto toks = tokenize(text);
  ParsedEquation out;
  if (toks.size() >= 2 && toks[0].kind == Token::Kind::Ident && toks[0].text == "P" &&
      toks[1].kind == Token::Kind::Equals) {
    Parser p(std::vector<Token>(toks.begin() + 2, toks.end()));
    ExprTree rhs = p.parse_full();
    out.phi = rhs;
    out.zero_form = ExprTree::difference(std::move(rhs), ExprTree::var(Var::P));
    return out;
  }
  for (const auto& tk : toks) {
    if (tk.kind == Token::Kind::Equals)
      throw SyntaxError("'=' is only allowed in the form 'P = expr'", tk.pos);
  }
  out.zero_form = Parser(std::move(toks)).parse_full();
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial clearing.
// ---------------------------------------------------------------------------

namespace {

struct Frac {
  MultiPoly num;
  MultiPoly den;
};

void note_locus(const MultiPoly& den, std::vector<MultiPoly>& loci, std::set<std::string>& seen) {
  if (!den.contains(Var::P) && !den.contains(Var::Q)) return;
  MultiPoly canon = den.primitive_part();
  if (seen.insert(canon.to_string()).second) loci.push_back(std::move(canon));
}

Frac clear_expr(const ExprTree& e, std::vector<MultiPoly>& loci, std::set<std::string>& seen) {
  using K = ExprTree::Kind;
  switch (e.kind) {
    case K::Literal:
      return {MultiPoly(e.literal), MultiPoly(BigRational(1))};
    case K::Variable:
      return {MultiPoly::variable(e.variable), MultiPoly(BigRational(1))};
    case K::Negate: {
      Frac a = clear_expr(e.kids[0], loci, seen);
      return {-a.num, std::move(a.den)};
    }
    case K::Sum:
    case K::Difference: {
      Frac a = clear_expr(e.kids[0], loci, seen);
      Frac b = clear_expr(e.kids[1], loci, seen);
      const MultiPoly bn = e.kind == K::Sum ? b.num : -b.num;
      if (a.den == b.den) return {a.num + bn, a.den};
      return {a.num * b.den + bn * a.den, a.den * b.den};
    }
    case K::Product: {
      Frac a = clear_expr(e.kids[0], loci, seen);
      Frac b = clear_expr(e.kids[1], loci, seen);
      return {a.num * b.num, a.den * b.den};
    }
    case K::Quotient: {
      Frac a = clear_expr(e.kids[0], loci, seen);
      Frac b = clear_expr(e.kids[1], loci, seen);
      if (b.num.is_zero()) throw NonPolynomialDenominator("denominator is identically zero");
      note_locus(b.num, loci, seen);
      return {a.num * b.den, a.den * b.num};
    }
    case K::Power: {
      Frac a = clear_expr(e.kids[0], loci, seen);
      const unsigned long ee = static_cast<unsigned long>(e.exponent);
      return {a.num.pow(ee), a.den.pow(ee)};
    }
  }
  throw EquationError("unreachable expression kind");
}

}  // namespace

PolynomialForm to_polynomial_form(const ExprTree& e) {
  PolynomialForm out;
  std::set<std::string> seen;
  Frac f = clear_expr(e, out.loci, seen);
  out.poly = f.num.primitive_part();
  return out;
}

MultiPoly parse_polynomial(const std::string& text) {
  ExprTree e = parse_expression(text);
  std::vector<MultiPoly> loci;
  std::set<std::string> seen;
  Frac f = clear_expr(e, loci, seen);
  if (!f.den.is_constant())
    throw NonPolynomialDenominator("expression is not a polynomial: " + text);
  return f.den.constant_term().inverse() * f.num;
}

FunctionalEquation make_equation(const std::string& name, const std::string& dsl_text,
                                 const BigRational& initial_term) {
  ParsedEquation pe = parse_equation_text(dsl_text);
  PolynomialForm pf = to_polynomial_form(pe.zero_form);
  if (pf.poly.is_zero()) throw EquationError("equation clears to the zero polynomial");
  if (pf.poly.degree(Var::P) < 1)
    throw EquationError("cleared equation has no dependence on P");
  FunctionalEquation eq;
  eq.name = name;
  eq.dsl = dsl_text;
  eq.phi = std::move(pe.phi);
  eq.F = std::move(pf.poly);
  eq.initial_term = initial_term;
  eq.denominator_loci = std::move(pf.loci);
  return eq;
}

// ---------------------------------------------------------------------------
// Equation files.
// ---------------------------------------------------------------------------

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

long parse_positive_long(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const long n = std::stol(v, &used);
    if (used != v.size() || n < 1) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw EquationError("equation file: bad value for '" + key + "': " + v);
  }
}

}  // namespace

EquationFile parse_equation_file(const std::string& content) {
  EquationFile f;
  bool have_equation = false;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const std::string s = trimmed(line);
    if (s.empty() || s[0] == '#') continue;
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos)
      throw EquationError("equation file: expected 'key: value', got: " + s);
    const std::string key = trimmed(s.substr(0, colon));
    const std::string val = trimmed(s.substr(colon + 1));
    if (key == "name") {
      f.name = val;
    } else if (key == "equation") {
      f.equation = val;
      have_equation = true;
    } else if (key == "initial") {
      f.initial = BigRational(val);
    } else if (key == "order") {
      f.order = parse_positive_long(val, key);
    } else if (key == "max_deg_Q") {
      f.max_deg_q = static_cast<int>(parse_positive_long(val, key));
    } else if (key == "max_deg_x") {
      f.max_deg_x = static_cast<int>(parse_positive_long(val, key));
    } else {
      throw EquationError("equation file: unknown key '" + key + "'");
    }
  }
  if (!have_equation) throw EquationError("equation file: missing 'equation:' line");
  if (f.name.empty()) f.name = "unnamed";
  return f;
}

EquationFile load_equation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EquationError("cannot open equation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_equation_file(buf.str());
}

}  // namespace catalytic
