#include "catalytic/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalytic/errors.hpp"

namespace catalytic {

UniPoly::UniPoly(const BigRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::from_coeffs(std::vector<BigRational> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

UniPoly UniPoly::variable() { return monomial(1, BigRational(1)); }

UniPoly UniPoly::monomial(int k, const BigRational& c) {
  UniPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, BigRational(0));
  p.c_.back() = c;
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigRational(0);
  return c_[static_cast<std::size_t>(k)];
}

BigRational UniPoly::leading() const {
  if (c_.empty()) throw ZeroInput("UniPoly::leading of zero");
  return c_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a);
  r += b;
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a);
  r -= b;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

UniPoly operator*(const BigRational& s, const UniPoly& p) {
  if (s.is_zero()) return UniPoly();
  UniPoly r(p);
  for (auto& c : r.c_) c *= s;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
  UniPoly r(BigRational(1));
  UniPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    r.c_[k - 1] = BigRational(static_cast<long>(k)) * c_[k];
  r.trim();
  return r;
}

BigRational UniPoly::eval(const BigRational& v) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UniPoly UniPoly::shift(const BigRational& s) const {
  UniPoly acc;
  const UniPoly lin = UniPoly::from_coeffs({s, BigRational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& d) {
  if (d.is_zero()) throw ZeroInput("UniPoly::divmod by zero");
  UniPoly q;
  UniPoly r(a);
  const int dd = d.degree();
  const BigRational lead_inv = d.leading().inverse();
  if (r.degree() >= dd) q.c_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, BigRational(0));
  while (!r.is_zero() && r.degree() >= dd) {
    const int k = r.degree() - dd;
    const BigRational f = r.leading() * lead_inv;
    q.c_[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= dd; ++i)
      r.c_[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

std::optional<UniPoly> UniPoly::exact_divide(const UniPoly& d) const {
  auto [q, r] = divmod(*this, d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a.is_zero() ? a : a.primitive_part();
  UniPoly v = b.is_zero() ? b : b.primitive_part();
  while (!v.is_zero()) {
    auto [q, r] = divmod(u, v);
    u = v;
    v = r.is_zero() ? r : r.primitive_part();
  }
  if (u.is_zero()) return u;
  return u.primitive_part();
}

BigRational UniPoly::content() const {
  if (c_.empty()) return BigRational(0);
  BigInt num_gcd(0);
  BigInt den_lcm(1);
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    num_gcd = BigInt::gcd(num_gcd, c.numerator());
    den_lcm = BigInt::lcm(den_lcm, c.denominator());
  }
  return BigRational(num_gcd.abs(), den_lcm);
}

UniPoly UniPoly::primitive_part() const {
  if (c_.empty()) return *this;
  BigRational c = content();
  if (leading().sign() < 0) c = -c;
  return c.inverse() * (*this);
}

namespace {

// Divisors of |n| from trial division; the unfactored tail (if any) is kept
// as a single pseudo-prime, which is enough for the small coefficients that
// reach this code.
std::vector<BigInt> divisors(const BigInt& n_in) {
  std::vector<BigInt> primes;
  std::vector<unsigned> mult;
  BigInt n = n_in.abs();
  if (n.is_zero()) return {};
  for (long p = 2; p <= 1000000; p == 2 ? p = 3 : p += 2) {
    BigInt bp(p);
    if (bp * bp > n) break;
    if (n.divisible_by(bp)) {
      primes.push_back(bp);
      mult.push_back(0);
      while (n.divisible_by(bp)) {
        n = BigInt::exact_quotient(n, bp);
        ++mult.back();
      }
    }
  }
  if (!n.is_one()) {
    primes.push_back(n);
    mult.push_back(1);
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t before = divs.size();
    BigInt pk(1);
    for (unsigned k = 1; k <= mult[i]; ++k) {
      pk *= primes[i];
      for (std::size_t j = 0; j < before; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<BigRational> UniPoly::rational_roots() const {
  std::vector<BigRational> roots;
  if (is_zero() || is_constant()) return roots;
  UniPoly p = primitive_part();
  // Strip v^s; zero is then a root.
  std::size_t s = 0;
  while (s < p.c_.size() && p.c_[s].is_zero()) ++s;
  if (s > 0) {
    roots.push_back(BigRational(0));
    p.c_.erase(p.c_.begin(), p.c_.begin() + static_cast<long>(s));
  }
  if (p.is_constant()) return roots;
  const BigInt a0 = p.c_.front().numerator();
  const BigInt ad = p.c_.back().numerator();
  for (const BigInt& num : divisors(a0)) {
    for (const BigInt& den : divisors(ad)) {
      for (int sgn = 0; sgn < 2; ++sgn) {
        BigRational cand(sgn == 0 ? num : -num, den);
        if (p.eval(cand).is_zero()) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

long UniPoly::largest_nonneg_integer_root() const {
  long best = -1;
  for (const auto& r : rational_roots()) {
    if (r.sign() >= 0 && r.is_integer() && r.numerator().fits_long())
      best = std::max(best, r.numerator().to_long());
  }
  return best;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const BigRational mag = c.abs();
    if (k == 0) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace catalytic
