// Dense exact univariate polynomials over Q. The variable is anonymous;
// printing takes its name. Serves three roles: coefficients c_n(t) of the
// two-variable series, ODE coefficients q_i(x), recurrence coefficients p_i(n).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalytic/rational.hpp"

namespace catalytic {

class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const BigRational& c);  // NOLINT: constant
  UniPoly(long c) : UniPoly(BigRational(c)) {}
  static UniPoly from_coeffs(std::vector<BigRational> coeffs);
  static UniPoly variable();
  static UniPoly monomial(int k, const BigRational& c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigRational coeff(int k) const;
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational leading() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const BigRational& s, const UniPoly& p);
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(unsigned long e) const;
  UniPoly derivative() const;
  BigRational eval(const BigRational& v) const;
  // p(v + s)
  UniPoly shift(const BigRational& s) const;

  // Field division: returns (quotient, remainder) with deg r < deg d.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& d);
  std::optional<UniPoly> exact_divide(const UniPoly& d) const;

  // Canonical gcd: primitive integer coefficients, positive leading.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  BigRational content() const;
  UniPoly primitive_part() const;

  // All rational roots, each listed once (multiplicity ignored).
  std::vector<BigRational> rational_roots() const;
  // Largest root that is a nonnegative integer, or -1 if none.
  long largest_nonneg_integer_root() const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<BigRational> c_;  // c_[k] = coefficient of v^k; no trailing zeros
};

}  // namespace catalytic
