// Sparse exact multivariate polynomials over Q in the fixed variable set
// {P, Q, x, t}, with the global order P < Q < x < t. Term maps are canonical,
// so equality is structural and printing is deterministic.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalytic/rational.hpp"

namespace catalytic {

enum class Var : int { P = 0, Q = 1, X = 2, T = 3 };

constexpr int kNumVars = 4;
const char* var_name(Var v);

// Exponent vector, one slot per variable in global order.
using Exponents = std::array<int, kNumVars>;

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigRational>;

  MultiPoly() = default;
  MultiPoly(const BigRational& c);  // NOLINT: constant polynomial
  MultiPoly(long c) : MultiPoly(BigRational(c)) {}
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponents& e, const BigRational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the all-zero monomial).
  BigRational constant_term() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int degree(Var v) const;       // -1 for the zero polynomial
  int total_degree() const;      // -1 for the zero polynomial
  bool contains(Var v) const { return degree(v) > 0; }
  std::vector<Var> used_vars() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator*(const BigRational& c, const MultiPoly& p);
  MultiPoly pow(unsigned long e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Coefficient of v^k, a polynomial in the remaining variables.
  MultiPoly coefficient_of(Var v, int k) const;
  // All coefficients by v-degree, index i = coefficient of v^i.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  MultiPoly substitute(Var v, const MultiPoly& value) const;
  MultiPoly substitute(Var v, const BigRational& value) const;
  MultiPoly derivative(Var v) const;

  // Exact division: returns q with *this == q * d, or nullopt if no
  // polynomial quotient exists. d must be nonzero.
  std::optional<MultiPoly> exact_divide(const MultiPoly& d) const;

  // Rational content: the positive rational c such that (*this)/c has
  // coprime integer coefficients. Zero polynomial has content 0.
  BigRational content() const;
  // Content-free, sign-normalized so the lexicographically leading term is
  // positive. Zero polynomial is returned unchanged.
  MultiPoly primitive_part() const;

  // Leading term w.r.t. the lexicographic order on exponent vectors.
  std::pair<Exponents, BigRational> leading_term() const;

  // Canonical text form: terms in descending lexicographic order, variables
  // in global order inside each monomial, '*' products, '^' exponents.
  std::string to_string() const;

 private:
  void insert_term(const Exponents& e, const BigRational& c);
  TermMap terms_;
};

// Resultant of p and q with respect to v: the determinant of the Sylvester
// matrix, computed by exact fraction-free (Bareiss) elimination.
// Both inputs must be nonzero and have positive degree in v.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);

// Internal cross-check: resultant up to sign via a subresultant-style
// pseudo-remainder sequence. Not the production contract.
MultiPoly resultant_prs(const MultiPoly& p, const MultiPoly& q, Var v);

// Determinant of a dense MultiPoly matrix by Bareiss elimination.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace catalytic
