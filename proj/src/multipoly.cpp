#include "catalytic/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalytic/errors.hpp"

namespace catalytic {

const char* var_name(Var v) {
  switch (v) {
    case Var::P: return "P";
    case Var::Q: return "Q";
    case Var::X: return "x";
    case Var::T: return "t";
  }
  return "?";
}

MultiPoly::MultiPoly(const BigRational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0, 0}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return monomial(e, BigRational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const BigRational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0};
}

BigRational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{0, 0, 0, 0});
  return it == terms_.end() ? BigRational(0) : it->second;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  const int i = static_cast<int>(v);
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

std::vector<Var> MultiPoly::used_vars() const {
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(static_cast<Var>(i));
        break;
      }
    }
  }
  return out;
}

void MultiPoly::insert_term(const Exponents& e, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a);
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a);
  r -= b;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {
// Exponents stay well below INT_MAX so sums can never wrap.
constexpr int kMaxExponent = 1 << 20;
}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kNumVars; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > kMaxExponent)
          throw DegreeOverflow("polynomial degree exceeds the supported bound");
      }
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const BigRational& c, const MultiPoly& p) {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly r(BigRational(1));
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::coefficient_of(Var v, int k) const {
  const int i = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == k) {
      Exponents e2 = e;
      e2[i] = 0;
      r.terms_.emplace(e2, c);
    }
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const int d = std::max(degree(v), 0);
  std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1);
  const int i = static_cast<int>(v);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2[i] = 0;
    out[static_cast<std::size_t>(e[i])].insert_term(e2, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  auto coeffs = coefficients_in(v);
  MultiPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + *it;
  return acc;
}

MultiPoly MultiPoly::substitute(Var v, const BigRational& value) const {
  return substitute(v, MultiPoly(value));
}

MultiPoly MultiPoly::derivative(Var v) const {
  const int i = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents e2 = e;
    e2[i] -= 1;
    r.insert_term(e2, BigRational(e[i]) * c);
  }
  return r;
}

namespace {

// True if each exponent of b is <= the matching exponent of a.
bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (b[i] > a[i]) return false;
  }
  return true;
}

}  // namespace

std::pair<Exponents, BigRational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw ZeroInput("leading_term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& d) const {
  if (d.is_zero()) throw ZeroInput("exact_divide: zero divisor");
  MultiPoly rem(*this);
  MultiPoly quot;
  const auto [lmD, lcD] = d.leading_term();
  while (!rem.is_zero()) {
    const auto [lmR, lcR] = rem.leading_term();
    if (!monomial_divides(lmR, lmD)) return std::nullopt;
    Exponents e;
    for (int i = 0; i < kNumVars; ++i) e[i] = lmR[i] - lmD[i];
    const MultiPoly piece = MultiPoly::monomial(e, lcR / lcD);
    quot += piece;
    rem -= piece * d;
  }
  return quot;
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return BigRational(0);
  BigInt num_gcd(0);
  BigInt den_lcm(1);
  for (const auto& [e, c] : terms_) {
    num_gcd = BigInt::gcd(num_gcd, c.numerator());
    den_lcm = BigInt::lcm(den_lcm, c.denominator());
  }
  return BigRational(num_gcd.abs(), den_lcm);
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  BigRational c = content();
  if (leading_term().second.sign() < 0) c = -c;
  return c.inverse() * (*this);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool first = out.empty();
    const int sgn = c.sign();
    if (first) {
      if (sgn < 0) out += "-";
    } else {
      out += sgn < 0 ? " - " : " + ";
    }
    const BigRational mag = c.abs();
    std::string vars;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += var_name(static_cast<Var>(i));
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += vars;
    } else {
      out += mag.to_string() + "*" + vars;
    }
  }
  return out;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(BigRational(1));
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: not square");
  }
  int sign = 1;
  MultiPoly prev(BigRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return MultiPoly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = num.exact_divide(prev);
        if (!q) throw std::logic_error("bareiss_determinant: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw ZeroInput("resultant: zero input");
  const int m = p.degree(v);
  const int l = q.degree(v);
  if (m < 1 || l < 1) throw ZeroInput("resultant: inputs must have positive degree in the variable");
  const auto pc = p.coefficients_in(v);
  const auto qc = q.coefficients_in(v);
  const std::size_t n = static_cast<std::size_t>(m + l);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j <= m; ++j) s[i][i + j] = pc[static_cast<std::size_t>(m - j)];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= l; ++j) s[l + i][i + j] = qc[static_cast<std::size_t>(l - j)];
  }
  return bareiss_determinant(std::move(s));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  const int db = b.degree(v);
  const MultiPoly lcb = b.coefficient_of(v, db);
  MultiPoly r = a;
  int e = a.degree(v) - db + 1;
  while (!r.is_zero() && r.degree(v) >= db) {
    const int dr = r.degree(v);
    const MultiPoly lcr = r.coefficient_of(v, dr);
    Exponents shift{0, 0, 0, 0};
    shift[static_cast<int>(v)] = dr - db;
    r = lcb * r - lcr * MultiPoly::monomial(shift, BigRational(1)) * b;
    --e;
  }
  for (; e > 0; --e) r = lcb * r;
  return r;
}

MultiPoly exact_or_throw(const MultiPoly& num, const MultiPoly& den) {
  auto q = num.exact_divide(den);
  if (!q) throw std::logic_error("resultant_prs: inexact division in PRS");
  return *q;
}

}  // namespace

MultiPoly resultant_prs(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw ZeroInput("resultant_prs: zero input");
  MultiPoly a = p;
  MultiPoly b = q;
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  if (b.degree(v) < 1)
    throw ZeroInput("resultant_prs: inputs must have positive degree in the variable");

  MultiPoly g(BigRational(1));
  MultiPoly h(BigRational(1));
  while (true) {
    const int delta = a.degree(v) - b.degree(v);
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      // A vanishing remainder with deg b > 0 means a common factor.
      return MultiPoly();
    }
    a = b;
    MultiPoly hd = h;
    for (int i = 1; i < delta; ++i) hd = hd * h;
    if (delta == 0) hd = MultiPoly(BigRational(1));
    b = exact_or_throw(r, g * hd);
    g = a.coefficient_of(v, a.degree(v));
    if (delta > 0) {
      MultiPoly gd = g;
      for (int i = 1; i < delta; ++i) gd = gd * g;
      if (delta == 1) {
        h = gd;
      } else {
        // h = g^delta / h^(delta-1)
        MultiPoly hprev = h;
        for (int i = 2; i < delta; ++i) hprev = hprev * h;
        h = exact_or_throw(gd, hprev);
      }
    }
    if (b.degree(v) <= 0) break;
  }
  // b is now v-free; the resultant (up to sign) is h^(1-d) * b^d, d = deg a.
  const int d = a.degree(v);
  MultiPoly bd = b.pow(static_cast<unsigned long>(d));
  if (d <= 1) return bd;
  MultiPoly hd = h.pow(static_cast<unsigned long>(d - 1));
  return exact_or_throw(bd, hd);
}

}  // namespace catalytic
