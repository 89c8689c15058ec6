#include "catalytic/holonomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "catalytic/errors.hpp"

namespace catalytic {

namespace {

// ---- rational functions of x, reduced, denominator primitive with positive
// leading coefficient ----

struct RatFn {
  UniPoly num;
  UniPoly den{BigRational(1)};

  bool is_zero() const { return num.is_zero(); }
};

RatFn reduce(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::logic_error("RatFn: zero denominator");
  if (num.is_zero()) return {UniPoly(), UniPoly(BigRational(1))};
  const UniPoly g = UniPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = *num.exact_divide(g);
    den = *den.exact_divide(g);
  }
  // Normalize: denominator primitive, positive leading coefficient.
  const BigRational dc = den.leading().sign() < 0 ? -den.content() : den.content();
  const BigRational inv = dc.inverse();
  return {inv * num, inv * den};
}

RatFn rf_add(const RatFn& a, const RatFn& b) {
  return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFn rf_sub(const RatFn& a, const RatFn& b) {
  return reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFn rf_mul(const RatFn& a, const RatFn& b) { return reduce(a.num * b.num, a.den * b.den); }
RatFn rf_div(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw std::logic_error("RatFn: division by zero");
  return reduce(a.num * b.den, a.den * b.num);
}
RatFn rf_neg(const RatFn& a) { return {-a.num, a.den}; }
RatFn rf_derivative(const RatFn& a) {
  // (n/d)' = (n'd - nd')/d^2
  return reduce(a.num.derivative() * a.den - a.num * a.den.derivative(), a.den * a.den);
}

// ---- polynomials in Q over Q(x), used for the one extended-Euclid step ----

using QPoly = std::vector<RatFn>;  // index = Q-degree; may carry zero leads

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), RatFn{});
  for (std::size_t i = 0; i < r.size(); ++i) {
    const RatFn av = i < a.size() ? a[i] : RatFn{};
    const RatFn bv = i < b.size() ? b[i] : RatFn{};
    r[i] = rf_sub(av, bv);
  }
  return r;
}

QPoly q_shift_mul(const QPoly& p, int k, const RatFn& s) {
  QPoly r(p.size() + static_cast<std::size_t>(k), RatFn{});
  for (std::size_t i = 0; i < p.size(); ++i) r[i + static_cast<std::size_t>(k)] = rf_mul(p[i], s);
  return r;
}

UniPoly xpoly_from_multipoly(const MultiPoly& p) {
  std::vector<BigRational> c(static_cast<std::size_t>(std::max(p.degree(Var::X), 0)) + 1,
                             BigRational(0));
  for (const auto& [e, v] : p.terms()) {
    if (e[static_cast<int>(Var::P)] != 0 || e[static_cast<int>(Var::Q)] != 0 ||
        e[static_cast<int>(Var::T)] != 0)
      throw std::logic_error("xpoly_from_multipoly: polynomial not univariate in x");
    c[static_cast<std::size_t>(e[static_cast<int>(Var::X)])] = v;
  }
  return UniPoly::from_coeffs(std::move(c));
}

// Element of Q(x)[Q]/(I) in the basis 1, Q, ..., Q^(d-1).
using Elem = std::vector<RatFn>;

struct QuotientRing {
  int d;
  std::vector<UniPoly> icoef;  // I's coefficients by Q-degree, 0..d
  Elem qprime;                 // derivative of the algebraic function Q(x)

  // Reduce a raw Q-polynomial of degree <= 2(d-1) modulo I.
  Elem reduce_mod(QPoly raw) const {
    const RatFn lead{icoef[static_cast<std::size_t>(d)], UniPoly(BigRational(1))};
    for (int k = qdeg(raw); k >= d; --k) {
      const RatFn f = rf_div(raw[static_cast<std::size_t>(k)], lead);
      if (f.is_zero()) continue;
      // raw -= f * Q^(k-d) * I
      for (int j = 0; j <= d; ++j) {
        const RatFn piece = rf_mul(f, RatFn{icoef[static_cast<std::size_t>(j)],
                                            UniPoly(BigRational(1))});
        raw[static_cast<std::size_t>(k - d + j)] =
            rf_sub(raw[static_cast<std::size_t>(k - d + j)], piece);
      }
      raw[static_cast<std::size_t>(k)] = RatFn{};
    }
    Elem out(static_cast<std::size_t>(d), RatFn{});
    for (int i = 0; i < d && i < static_cast<int>(raw.size()); ++i)
      out[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)];
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    QPoly raw(static_cast<std::size_t>(2 * d - 1), RatFn{});
    for (int i = 0; i < d; ++i) {
      if (a[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (b[static_cast<std::size_t>(j)].is_zero()) continue;
        raw[static_cast<std::size_t>(i + j)] =
            rf_add(raw[static_cast<std::size_t>(i + j)],
                   rf_mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
      }
    }
    return reduce_mod(std::move(raw));
  }

  // d/dx of an element: coefficientwise derivative plus the chain-rule term
  // through Q'(x).
  Elem derivative(const Elem& v) const {
    Elem out(static_cast<std::size_t>(d), RatFn{});
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = rf_derivative(v[static_cast<std::size_t>(i)]);
    // (sum i v_i Q^(i-1)) * Q'
    Elem dv(static_cast<std::size_t>(d), RatFn{});
    for (int i = 1; i < d; ++i)
      dv[static_cast<std::size_t>(i - 1)] =
          rf_mul(v[static_cast<std::size_t>(i)],
                 RatFn{UniPoly(BigRational(i)), UniPoly(BigRational(1))});
    const Elem chain = mul(dv, qprime);
    for (int i = 0; i < d; ++i)
      out[static_cast<std::size_t>(i)] =
          rf_add(out[static_cast<std::size_t>(i)], chain[static_cast<std::size_t>(i)]);
    return out;
  }
};

}  // namespace

std::string LinearODE::to_string() const {
  std::string out;
  for (int i = order; i >= 0; --i) {
    const UniPoly& qi = q[static_cast<std::size_t>(i)];
    if (qi.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + qi.to_string("x") + ")*Q";
    for (int k = 0; k < i; ++k) out += "'";
    out += "(x)";
  }
  return out + " = 0";
}

LinearODE alg_to_ode(const MultiPoly& I) {
  const int d = I.degree(Var::Q);
  if (d < 1) throw DegenerateDerivative("alg_to_ode: I has no dependence on Q");
  const MultiPoly iq = I.derivative(Var::Q);
  if (iq.is_zero()) throw DegenerateDerivative("alg_to_ode: dI/dQ is the zero polynomial");

  QuotientRing ring;
  ring.d = d;
  for (const MultiPoly& c : I.coefficients_in(Var::Q)) ring.icoef.push_back(xpoly_from_multipoly(c));

  // Invert dI/dQ modulo I by extended Euclid over Q(x).
  const UniPoly one(BigRational(1));
  auto lift = [&](const std::vector<UniPoly>& coefs) {
    QPoly p(coefs.size());
    for (std::size_t i = 0; i < coefs.size(); ++i) p[i] = RatFn{coefs[i], one};
    return p;
  };
  QPoly r0 = lift(ring.icoef);
  std::vector<UniPoly> iqc;
  for (const MultiPoly& c : iq.coefficients_in(Var::Q)) iqc.push_back(xpoly_from_multipoly(c));
  QPoly r1 = lift(iqc);
  QPoly s0(1, RatFn{});                      // coefficients of I in the combination
  QPoly s1{RatFn{one, one}};                 // tracks the dI/dQ multiplier
  // Maintain r_i = u_i*I + s_i*(dI/dQ); only s is needed.
  while (true) {
    const int d1 = qdeg(r1);
    if (d1 < 0) throw NonSimpleRoot("alg_to_ode: dI/dQ and I share a common factor");
    if (d1 == 0) break;
    // r0 = q*r1 + r2
    QPoly q(static_cast<std::size_t>(std::max(qdeg(r0) - d1, 0)) + 1, RatFn{});
    QPoly rem = r0;
    const RatFn lead = r1[static_cast<std::size_t>(d1)];
    while (qdeg(rem) >= d1) {
      const int dr = qdeg(rem);
      const RatFn f = rf_div(rem[static_cast<std::size_t>(dr)], lead);
      q[static_cast<std::size_t>(dr - d1)] = f;
      rem = q_sub(rem, q_shift_mul(r1, dr - d1, f));
      rem[static_cast<std::size_t>(dr)] = RatFn{};
    }
    // s2 = s0 - q*s1
    QPoly qs(s1.size() + q.size(), RatFn{});
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = rf_add(qs[i + j], rf_mul(q[i], s1[j]));
    }
    QPoly s2 = q_sub(s0, qs);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero scalar g in Q(x): inverse of dI/dQ mod I is s1/g.
  const RatFn g = r1[0];
  Elem inv(static_cast<std::size_t>(d), RatFn{});
  for (int i = 0; i < d && i < static_cast<int>(s1.size()); ++i)
    inv[static_cast<std::size_t>(i)] = rf_div(s1[static_cast<std::size_t>(i)], g);

  // Q' = -(dI/dx) * inv mod I. dI/dx can still have Q-degree d, so reduce it.
  std::vector<UniPoly> ixc;
  for (const MultiPoly& c : I.derivative(Var::X).coefficients_in(Var::Q))
    ixc.push_back(xpoly_from_multipoly(c));
  QPoly ixraw(ixc.size());
  for (std::size_t i = 0; i < ixc.size(); ++i) ixraw[i] = RatFn{-ixc[i], one};
  const Elem ix = ring.reduce_mod(std::move(ixraw));
  ring.qprime = ring.mul(ix, inv);

  // Derivatives of Q as vectors; stop at the first linear dependence.
  std::vector<Elem> derivs;
  Elem qelem(static_cast<std::size_t>(d), RatFn{});
  if (d == 1) {
    // Q is rational: Q = -icoef[0]/icoef[1]; represent in the basis {1}.
    qelem[0] = reduce(-ring.icoef[0], ring.icoef[1]);
  } else {
    qelem[1] = RatFn{one, one};
  }
  derivs.push_back(qelem);
  for (int m = 1; m <= d; ++m) {
    derivs.push_back(ring.derivative(derivs.back()));
    // Solve sum_i lambda_i derivs[i] = 0 by elimination over Q(x).
    const std::size_t cols = derivs.size();
    std::vector<std::vector<RatFn>> mat(static_cast<std::size_t>(d),
                                        std::vector<RatFn>(cols, RatFn{}));
    for (std::size_t c = 0; c < cols; ++c)
      for (int rrow = 0; rrow < d; ++rrow) mat[static_cast<std::size_t>(rrow)][c] = derivs[c][static_cast<std::size_t>(rrow)];
    // Gauss-Jordan.
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < mat.size(); ++col) {
      std::size_t sel = rank;
      while (sel < mat.size() && mat[sel][col].is_zero()) ++sel;
      if (sel == mat.size()) continue;
      std::swap(mat[sel], mat[rank]);
      const RatFn piv = mat[rank][col];
      for (std::size_t j = col; j < cols; ++j) mat[rank][j] = rf_div(mat[rank][j], piv);
      for (std::size_t i = 0; i < mat.size(); ++i) {
        if (i == rank || mat[i][col].is_zero()) continue;
        const RatFn f = mat[i][col];
        for (std::size_t j = col; j < cols; ++j)
          mat[i][j] = rf_sub(mat[i][j], rf_mul(f, mat[rank][j]));
      }
      pivot_cols.push_back(col);
      ++rank;
    }
    if (rank == cols) continue;  // still independent
    // Free column must be the last (earlier dependence would have returned).
    std::vector<RatFn> lambda(cols, RatFn{});
    const std::size_t free_col = cols - 1;
    lambda[free_col] = RatFn{one, one};
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      lambda[pivot_cols[k]] = rf_neg(mat[k][free_col]);
    // Clear denominators and integer content.
    UniPoly common_den(BigRational(1));
    for (const auto& l : lambda)
      if (!l.is_zero()) common_den = *(common_den * l.den).exact_divide(UniPoly::gcd(common_den, l.den));
    LinearODE ode;
    ode.order = m;
    for (std::size_t i = 0; i < cols; ++i) {
      if (lambda[i].is_zero()) {
        ode.q.push_back(UniPoly());
      } else {
        ode.q.push_back(lambda[i].num * *common_den.exact_divide(lambda[i].den));
      }
    }
    // Content normalization across all coefficients.
    BigRational content(0);
    for (const auto& qi : ode.q) {
      for (const auto& c : qi.coeffs()) {
        if (c.is_zero()) continue;
        content = content.is_zero()
                      ? c.abs()
                      : BigRational(BigInt::gcd(content.numerator(), c.numerator()),
                                    BigInt::lcm(content.denominator(), c.denominator()));
      }
    }
    if (ode.q.back().leading().sign() < 0) content = -content;
    const BigRational invc = content.inverse();
    for (auto& qi : ode.q) qi = invc * qi;
    return ode;
  }
  throw std::logic_error("alg_to_ode: no dependence found within the degree bound");
}

RationalSeries apply_ode(const LinearODE& ode, const RationalSeries& s) {
  const long out_order = s.order() - ode.order;
  if (out_order < 0) throw ZeroInput("apply_ode: series too short for the ODE order");
  RationalSeries acc(out_order);
  for (int i = 0; i <= ode.order; ++i) {
    const UniPoly& qi = ode.q[static_cast<std::size_t>(i)];
    if (qi.is_zero()) continue;
    // s^(i) coefficients: a_{n+i} * (n+i)(n+i-1)...(n+1)
    RationalSeries deriv(out_order);
    for (long n = 0; n <= out_order; ++n) {
      BigRational v = s.coeff(n + i);
      for (long u = 1; u <= i; ++u) v *= BigRational(n + u);
      deriv.set_coeff(n, v);
    }
    for (int j = 0; j <= qi.degree(); ++j) {
      const BigRational& cj = qi.coeff(j);
      if (cj.is_zero()) continue;
      for (long n = j; n <= out_order; ++n)
        acc.set_coeff(n, acc.coeff(n) + cj * deriv.coeff(n - j));
    }
  }
  return acc;
}

Recurrence ode_to_recurrence(const LinearODE& ode) {
  const int m = ode.order;
  int jmax = 0;
  for (const auto& qi : ode.q) jmax = std::max(jmax, qi.degree());
  const int r = m + jmax;

  Recurrence rec;
  rec.order = r;
  rec.p.assign(static_cast<std::size_t>(r) + 1, UniPoly());
  // x^j D^i applied to sum a_n x^n contributes q_ij * ff(n+k, i) * a(n+k)
  // at shift k = jmax + i - j.
  long nu0 = 0;  // identities are complete from this x-power on
  for (int i = 0; i <= m; ++i) {
    const UniPoly& qi = ode.q[static_cast<std::size_t>(i)];
    for (int j = 0; j <= qi.degree(); ++j) {
      const BigRational& c = qi.coeff(j);
      if (c.is_zero()) continue;
      nu0 = std::max(nu0, static_cast<long>(j - i));
      const int k = jmax + i - j;
      // falling factorial (n+k)(n+k-1)...(n+k-i+1) as a polynomial in n
      UniPoly ff(BigRational(1));
      for (int u = 0; u < i; ++u)
        ff = ff * UniPoly::from_coeffs({BigRational(k - u), BigRational(1)});
      rec.p[static_cast<std::size_t>(k)] += c * ff;
    }
  }
  rec.offset = nu0 - jmax;
  return normalize_recurrence(std::move(rec));
}

BigRational ClosedForm::eval(long n) const {
  if (n < n0) throw ZeroInput("ClosedForm::eval: n below the anchor index");
  BigRational acc = a_n0;
  for (long k = n0; k < n; ++k) {
    const BigRational kk(k);
    acc = acc * ratio_num.eval(kk) / ratio_den.eval(kk);
  }
  return acc;
}

namespace {

// ---- factorial-form rendering ----

struct LinearFactor {
  long a;  // modulus, >= 1
  long b;  // offset; factor is (a*k + b)
};

// Complete factorization into rational-rooted linear factors, or nullopt.
std::optional<std::pair<BigRational, std::vector<LinearFactor>>> linear_factors(UniPoly p) {
  std::vector<LinearFactor> out;
  if (p.is_zero()) return std::nullopt;
  BigRational lead(1);
  while (p.degree() > 0) {
    bool found = false;
    for (const BigRational& root : p.rational_roots()) {
      // factor (a*k + b) with a = den(root), b = -num(root)
      if (!root.denominator().fits_long() || !root.numerator().fits_long()) continue;
      const long a = root.denominator().to_long();
      const long b = -root.numerator().to_long();
      const UniPoly lin = UniPoly::from_coeffs({BigRational(b), BigRational(a)});
      auto q = p.exact_divide(lin);
      if (!q) continue;
      out.push_back({a, b});
      p = *q;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  lead = p.coeff(0);
  return std::make_pair(lead, out);
}

struct FactorialAtom {
  long a;
  long s;  // the atom is (a*(n+s))!
  friend bool operator<(const FactorialAtom& p, const FactorialAtom& q) {
    return p.a != q.a ? p.a < q.a : p.s < q.s;
  }
};

std::string atom_string(const FactorialAtom& f) {
  std::string arg;
  if (f.a == 1) {
    arg = "n";
    if (f.s != 0) arg = "(n" + std::string(f.s > 0 ? "+" : "") + std::to_string(f.s) + ")";
  } else {
    std::string inner = std::to_string(f.a) + "*n";
    const long c = f.a * f.s;
    if (c != 0) inner += (c > 0 ? " + " : " - ") + std::to_string(std::labs(c));
    arg = "(" + inner + ")";
  }
  return arg + "!";
}

BigRational atom_value(const FactorialAtom& f, long n) {
  const long v = f.a * (n + f.s);
  if (v < 0) throw std::logic_error("factorial of a negative argument");
  return BigRational(BigInt::factorial(static_cast<unsigned long>(v)));
}

// Try to express a(n) = A * C^(n-n0) * prod(num atoms) / prod(den atoms).
std::string render_factorial_form(const UniPoly& num, const UniPoly& den, long n0,
                                  const BigRational& a_n0) {
  auto fn = linear_factors(num);
  auto fd = linear_factors(den);
  if (!fn || !fd) return "";
  BigRational cn = fn->first;
  BigRational cd = fd->first;
  std::vector<LinearFactor> lhs = fn->second;
  std::vector<LinearFactor> rhs = fd->second;

  // Cancel identical factors.
  for (auto it = lhs.begin(); it != lhs.end();) {
    auto match = std::find_if(rhs.begin(), rhs.end(), [&](const LinearFactor& f) {
      return f.a == it->a && f.b == it->b;
    });
    if (match != rhs.end()) {
      rhs.erase(match);
      it = lhs.erase(it);
    } else {
      ++it;
    }
  }

  // Group by (a, s) with residue r in [1..a].
  auto split = [](const LinearFactor& f) {
    long r = ((f.b % f.a) + f.a) % f.a;
    if (r == 0) r = f.a;
    const long s = (f.b - r) / f.a;
    return std::pair<long, long>(s, r);
  };
  struct Group {
    std::map<long, int> residue_count;
  };
  auto build_groups = [&](const std::vector<LinearFactor>& fs) {
    std::map<std::pair<long, long>, Group> g;  // key (a, s)
    for (const auto& f : fs) {
      const auto [s, r] = split(f);
      g[{f.a, s}].residue_count[r] += 1;
    }
    return g;
  };

  // Complete groups whose only missing residue is the multiple of a:
  // multiplying both sides by (a*k + a*(s+1)) keeps the ratio, fills the
  // progression on this side, and lands on the other side decomposed as
  // a * (k + s + 1). Borrowed a=1 factors are always complete themselves.
  for (int side = 0; side < 2; ++side) {
    auto& mine = side == 0 ? lhs : rhs;
    auto& theirs = side == 0 ? rhs : lhs;
    auto& their_const = side == 0 ? cd : cn;
    const auto groups = build_groups(mine);
    for (const auto& [key, grp] : groups) {
      const auto [a, s] = key;
      if (a == 1) continue;
      int want = 0;
      for (const auto& [r, c] : grp.residue_count) want = std::max(want, c);
      for (long r = 1; r <= a; ++r) {
        const auto it = grp.residue_count.find(r);
        const int have = it == grp.residue_count.end() ? 0 : it->second;
        if (have == want) continue;
        if (r != a) return "";
        for (int add = have; add < want; ++add) {
          mine.push_back({a, a * (s + 1)});
          theirs.push_back({1, s + 1});
          their_const *= BigRational(a);
        }
      }
    }
  }

  // Convert complete groups to atoms.
  auto to_atoms = [&](std::vector<LinearFactor>& fs) -> std::optional<std::vector<FactorialAtom>> {
    std::vector<FactorialAtom> atoms;
    auto groups = build_groups(fs);
    for (const auto& [key, grp] : groups) {
      const auto [a, s] = key;
      int count = -1;
      if (static_cast<long>(grp.residue_count.size()) != a) return std::nullopt;
      for (const auto& [r, c] : grp.residue_count) {
        if (count == -1) count = c;
        if (c != count) return std::nullopt;
      }
      for (int i = 0; i < count; ++i) atoms.push_back({a, s});
    }
    std::sort(atoms.begin(), atoms.end());
    return atoms;
  };
  auto atoms_num = to_atoms(lhs);
  auto atoms_den = to_atoms(rhs);
  if (!atoms_num || !atoms_den) return "";
  // Borrowing can land the same atom on both sides; cancel pairwise.
  for (auto it = atoms_num->begin(); it != atoms_num->end();) {
    auto match = std::find_if(atoms_den->begin(), atoms_den->end(), [&](const FactorialAtom& f) {
      return f.a == it->a && f.s == it->s;
    });
    if (match != atoms_den->end()) {
      atoms_den->erase(match);
      it = atoms_num->erase(it);
    } else {
      ++it;
    }
  }
  for (const auto& at : *atoms_num)
    if (at.a * (n0 + at.s) < 0) return "";
  for (const auto& at : *atoms_den)
    if (at.a * (n0 + at.s) < 0) return "";

  const BigRational ratio_const = cn / cd;
  // Anchor: A = a(n0) * prod den-atoms(n0) / prod num-atoms(n0).
  BigRational anchor = a_n0;
  for (const auto& at : *atoms_den) anchor *= atom_value(at, n0);
  for (const auto& at : *atoms_num) anchor = anchor / atom_value(at, n0);

  std::string up;
  if (!anchor.is_one() || (atoms_num->empty() && ratio_const.is_one())) up = anchor.to_string();
  if (!ratio_const.is_one()) {
    if (!up.empty()) up += "*";
    up += "(" + ratio_const.to_string() + ")^(n" +
          (n0 == 0 ? std::string() : "-" + std::to_string(n0)) + ")";
  }
  for (const auto& at : *atoms_num) {
    if (!up.empty()) up += "*";
    up += atom_string(at);
  }
  if (atoms_den->empty()) return up;
  std::string down;
  for (const auto& at : *atoms_den) {
    if (!down.empty()) down += "*";
    down += atom_string(at);
  }
  if (atoms_den->size() > 1 || anchor.is_one()) down = "(" + down + ")";
  return up + "/" + down;
}

}  // namespace

std::optional<ClosedForm> closed_form_from_recurrence(const Recurrence& rec,
                                                      const std::vector<BigRational>& a) {
  if (rec.order != 1) return std::nullopt;
  ClosedForm cf;
  cf.n0 = rec.offset;
  // Advance the split point past nonnegative integer roots of the leading
  // polynomial.
  const long root = rec.p[1].largest_nonneg_integer_root();
  if (root >= cf.n0) cf.n0 = root + 1;

  UniPoly num = -rec.p[0];
  UniPoly den = rec.p[1];
  const UniPoly g = UniPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = *num.exact_divide(g);
    den = *den.exact_divide(g);
  }
  if (den.leading().sign() < 0) {
    num = -num;
    den = -den;
  }
  cf.ratio_num = num;
  cf.ratio_den = den;

  if (cf.n0 >= static_cast<long>(a.size()))
    throw Error("closed_form_from_recurrence: no coefficient available at the anchor index");
  cf.a_n0 = a[static_cast<std::size_t>(cf.n0)];

  // Exact reconstruction check against every computed coefficient.
  BigRational acc = cf.a_n0;
  for (long n = cf.n0; n + 1 < static_cast<long>(a.size()); ++n) {
    const BigRational kk(n);
    const BigRational dv = cf.ratio_den.eval(kk);
    if (dv.is_zero())
      throw Error("closed_form_from_recurrence: ratio denominator vanishes at n = " +
                  std::to_string(n));
    acc = acc * cf.ratio_num.eval(kk) / dv;
    if (acc != a[static_cast<std::size_t>(n + 1)])
      throw Error("closed_form_from_recurrence: product does not reproduce a(" +
                  std::to_string(n + 1) + ")");
  }

  cf.product_string = "a(n) = " + cf.a_n0.to_string() + " * prod_{k=" + std::to_string(cf.n0) +
                      "}^{n-1} (" + cf.ratio_num.to_string("k") + ")/(" +
                      cf.ratio_den.to_string("k") + ")";
  cf.factorial_string = render_factorial_form(cf.ratio_num, cf.ratio_den, cf.n0, cf.a_n0);
  return cf;
}

}  // namespace catalytic
