#include "catalytic/series.hpp"

#include <algorithm>

#include "catalytic/errors.hpp"

namespace catalytic {

RationalSeries RationalSeries::from_coeffs(std::vector<BigRational> coeffs) {
  if (coeffs.empty()) throw ZeroInput("RationalSeries: empty coefficient list");
  RationalSeries s(0);
  s.c_ = std::move(coeffs);
  return s;
}

RationalSeries RationalSeries::truncated(long order) const {
  RationalSeries s(std::min(order, this->order()));
  for (long n = 0; n <= s.order(); ++n) s.c_[static_cast<std::size_t>(n)] = coeff(n);
  return s;
}

bool RationalSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return v.is_zero(); });
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
  return r;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
  return r;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) {
    BigRational acc(0);
    for (long i = 0; i <= n; ++i) acc += a.coeff(i) * b.coeff(n - i);
    r.set_coeff(n, acc);
  }
  return r;
}

std::vector<std::string> RationalSeries::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

PolySeries PolySeries::from_coeffs(std::vector<UniPoly> coeffs) {
  if (coeffs.empty()) throw ZeroInput("PolySeries: empty coefficient list");
  PolySeries s(0);
  s.c_ = std::move(coeffs);
  return s;
}

PolySeries PolySeries::lift(const RationalSeries& s) {
  PolySeries r(s.order());
  for (long n = 0; n <= s.order(); ++n) r.set_coeff(n, UniPoly(s.coeff(n)));
  return r;
}

PolySeries PolySeries::x_series(long order) {
  PolySeries r(order);
  if (order >= 1) r.set_coeff(1, UniPoly(BigRational(1)));
  return r;
}

PolySeries PolySeries::constant(const UniPoly& c0, long order) {
  PolySeries r(order);
  r.set_coeff(0, c0);
  return r;
}

PolySeries PolySeries::truncated(long order) const {
  PolySeries s(std::min(order, this->order()));
  for (long n = 0; n <= s.order(); ++n) s.c_[static_cast<std::size_t>(n)] = coeff(n);
  return s;
}

bool PolySeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const UniPoly& v) { return v.is_zero(); });
}

long PolySeries::x_valuation() const {
  for (long n = 0; n <= order(); ++n) {
    if (!coeff(n).is_zero()) return n;
  }
  return order() + 1;
}

int PolySeries::max_t_degree() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

PolySeries operator+(const PolySeries& a, const PolySeries& b) {
  PolySeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
  return r;
}

PolySeries operator-(const PolySeries& a, const PolySeries& b) {
  PolySeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
  return r;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  return series_multiply(a, b);
}

PolySeries series_multiply(const PolySeries& a, const PolySeries& b) {
  PolySeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) {
    UniPoly acc;
    for (long i = 0; i <= n; ++i) {
      if (a.coeff(i).is_zero() || b.coeff(n - i).is_zero()) continue;
      acc += a.coeff(i) * b.coeff(n - i);
    }
    r.set_coeff(n, std::move(acc));
  }
  return r;
}

PolySeries PolySeries::scaled(const UniPoly& s) const {
  PolySeries r(order());
  if (s.is_zero()) return r;
  for (long n = 0; n <= order(); ++n) {
    if (!coeff(n).is_zero()) r.set_coeff(n, s * coeff(n));
  }
  return r;
}

void PolySeries::add_scaled_shifted(const PolySeries& src, const UniPoly& scalar, long shift) {
  if (scalar.is_zero()) return;
  for (long n = 0; n + shift <= order() && n <= src.order(); ++n) {
    if (src.coeff(n).is_zero()) continue;
    c_[static_cast<std::size_t>(n + shift)] += scalar * src.coeff(n);
  }
}

std::vector<std::string> PolySeries::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string("t"));
  return out;
}

long agreement_order(const PolySeries& a, const PolySeries& b) {
  const long top = std::min(a.order(), b.order());
  for (long n = 0; n <= top; ++n) {
    if (a.coeff(n) != b.coeff(n)) return n - 1;
  }
  return top;
}

PolySeries series_invert(const PolySeries& a) {
  const UniPoly& a0 = a.coeff(0);
  if (a0.is_zero() || !a0.is_constant())
    throw NotAUnit("series_invert: constant coefficient must be a nonzero rational constant");
  const BigRational inv0 = a0.coeff(0).inverse();
  PolySeries b(a.order());
  b.set_coeff(0, UniPoly(inv0));
  for (long n = 1; n <= a.order(); ++n) {
    UniPoly acc;
    for (long i = 1; i <= n; ++i) {
      if (a.coeff(i).is_zero() || b.coeff(n - i).is_zero()) continue;
      acc += a.coeff(i) * b.coeff(n - i);
    }
    b.set_coeff(n, inv0 * (-acc));
  }
  return b;
}

PolySeries divide_by_t_factor(const PolySeries& a, const UniPoly& factor, int multiplicity) {
  if (factor.is_zero()) throw ZeroInput("divide_by_t_factor: zero factor");
  if (multiplicity < 1) throw ZeroInput("divide_by_t_factor: multiplicity must be >= 1");
  const UniPoly g = factor.pow(static_cast<unsigned long>(multiplicity));
  PolySeries r(a.order());
  for (long n = 0; n <= a.order(); ++n) {
    if (a.coeff(n).is_zero()) continue;
    auto q = a.coeff(n).exact_divide(g);
    if (!q) throw DividedDifferenceFailure(static_cast<std::size_t>(n));
    r.set_coeff(n, std::move(*q));
  }
  return r;
}

PolySeries multiply_by_t_factor(const PolySeries& a, const UniPoly& factor, int multiplicity) {
  const UniPoly g = factor.pow(static_cast<unsigned long>(multiplicity));
  return a.scaled(g);
}

RationalSeries specialize_t1(const PolySeries& a) {
  RationalSeries r(a.order());
  const BigRational one(1);
  for (long n = 0; n <= a.order(); ++n) r.set_coeff(n, a.coeff(n).eval(one));
  return r;
}

}  // namespace catalytic
