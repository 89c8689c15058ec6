// Truncated formal power series in x: RationalSeries over Q for f(x,1) and
// PolySeries over Q[t] for f(x,t). Truncation orders are tracked honestly:
// binary operations cut to the smaller order, never inflate.
#pragma once

#include <string>
#include <vector>

#include "catalytic/rational.hpp"
#include "catalytic/unipoly.hpp"

namespace catalytic {

class RationalSeries {
 public:
  explicit RationalSeries(long order) : c_(static_cast<std::size_t>(order) + 1, BigRational(0)) {}
  static RationalSeries from_coeffs(std::vector<BigRational> coeffs);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const BigRational& coeff(long n) const { return c_[static_cast<std::size_t>(n)]; }
  void set_coeff(long n, const BigRational& v) { c_[static_cast<std::size_t>(n)] = v; }
  const std::vector<BigRational>& coeffs() const { return c_; }

  RationalSeries truncated(long order) const;
  bool is_zero() const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

  std::vector<std::string> coeff_strings() const;

 private:
  std::vector<BigRational> c_;
};

class PolySeries {
 public:
  explicit PolySeries(long order) : c_(static_cast<std::size_t>(order) + 1) {}
  static PolySeries from_coeffs(std::vector<UniPoly> coeffs);
  // Embed a t-free series.
  static PolySeries lift(const RationalSeries& s);
  // The series "x" at a given truncation order.
  static PolySeries x_series(long order);
  // The constant series c0(t) at a given truncation order.
  static PolySeries constant(const UniPoly& c0, long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const UniPoly& coeff(long n) const { return c_[static_cast<std::size_t>(n)]; }
  void set_coeff(long n, UniPoly v) { c_[static_cast<std::size_t>(n)] = std::move(v); }

  PolySeries truncated(long order) const;
  bool is_zero() const;
  // Smallest n with a nonzero coefficient, or order()+1 when zero throughout.
  long x_valuation() const;
  int max_t_degree() const;

  friend PolySeries operator+(const PolySeries& a, const PolySeries& b);
  friend PolySeries operator-(const PolySeries& a, const PolySeries& b);
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
  friend bool operator==(const PolySeries& a, const PolySeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolySeries& a, const PolySeries& b) { return !(a == b); }

  PolySeries scaled(const UniPoly& s) const;
  // this += scalar * src * x^shift, truncated to this->order().
  void add_scaled_shifted(const PolySeries& src, const UniPoly& scalar, long shift);

  std::vector<std::string> coeff_strings() const;

 private:
  std::vector<UniPoly> c_;
};

// Largest m <= min(orders) with equal coefficients through m; -1 if the
// constant terms already differ.
long agreement_order(const PolySeries& a, const PolySeries& b);

PolySeries series_multiply(const PolySeries& a, const PolySeries& b);

// Inverse of a series whose constant coefficient is a nonzero rational
// constant. Throws NotAUnit otherwise.
PolySeries series_invert(const PolySeries& a);

// Divide every coefficient exactly by factor^multiplicity in Q[t].
// Throws DividedDifferenceFailure at the first order with a remainder.
PolySeries divide_by_t_factor(const PolySeries& a, const UniPoly& factor, int multiplicity);
PolySeries multiply_by_t_factor(const PolySeries& a, const UniPoly& factor, int multiplicity);

// Evaluate every coefficient at t = 1.
RationalSeries specialize_t1(const PolySeries& a);

}  // namespace catalytic
