#include "catalytic/guess.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalytic/errors.hpp"
#include "catalytic/solver.hpp"

namespace catalytic {

std::vector<std::vector<BigRational>> rational_nullspace(
    std::vector<std::vector<BigRational>> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("rational_nullspace: ragged matrix");
  }
  std::vector<std::size_t> pivot_row_of;  // per pivot column
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    const BigRational inv = rows[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      const BigRational f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_cols.push_back(col);
    pivot_row_of.push_back(rank);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[free_col] = BigRational(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = -rows[pivot_row_of[k]][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::size_t poly_term_count(const MultiPoly& p) { return p.term_count(); }

// Deterministic pick among nullspace candidates: fewest terms, then the
// lexicographically smallest canonical string.
MultiPoly pick_canonical(std::vector<MultiPoly> candidates) {
  if (candidates.empty()) throw std::logic_error("pick_canonical: empty candidate set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const std::size_t a = poly_term_count(candidates[i]);
    const std::size_t b = poly_term_count(candidates[best]);
    if (a < b || (a == b && candidates[i].to_string() < candidates[best].to_string())) best = i;
  }
  return candidates[best];
}

}  // namespace

std::optional<AlgebraicGuess> guess_algebraic_2var(const RationalSeries& s, int max_dq,
                                                   int max_dx, long margin) {
  const long ord = s.order();
  bool skipped = false;

  std::vector<RationalSeries> pw{RationalSeries::from_coeffs(
      [&] {
        std::vector<BigRational> one(static_cast<std::size_t>(ord) + 1, BigRational(0));
        one[0] = BigRational(1);
        return one;
      }())};
  auto power = [&](int i) -> const RationalSeries& {
    while (static_cast<int>(pw.size()) <= i) pw.push_back(pw.back() * s);
    return pw[static_cast<std::size_t>(i)];
  };

  for (int dq = 1; dq <= max_dq; ++dq) {
    for (int dx = 1; dx <= max_dx; ++dx) {
      const long unknowns = static_cast<long>(dq + 1) * (dx + 1);
      if (ord + 1 < unknowns + margin) {
        skipped = true;
        continue;
      }
      std::vector<std::vector<BigRational>> rows(
          static_cast<std::size_t>(ord) + 1,
          std::vector<BigRational>(static_cast<std::size_t>(unknowns), BigRational(0)));
      for (long m = 0; m <= ord; ++m) {
        for (int i = 0; i <= dq; ++i) {
          for (int j = 0; j <= dx && j <= m; ++j) {
            rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(i * (dx + 1) + j)] =
                power(i).coeff(m - j);
          }
        }
      }
      auto basis = rational_nullspace(std::move(rows), static_cast<std::size_t>(unknowns));
      if (basis.empty()) continue;

      std::vector<MultiPoly> candidates;
      for (const auto& v : basis) {
        MultiPoly poly;
        for (int i = 0; i <= dq; ++i) {
          for (int j = 0; j <= dx; ++j) {
            const BigRational& c = v[static_cast<std::size_t>(i * (dx + 1) + j)];
            if (c.is_zero()) continue;
            Exponents e{0, 0, 0, 0};
            e[static_cast<int>(Var::Q)] = i;
            e[static_cast<int>(Var::X)] = j;
            poly += MultiPoly::monomial(e, c);
          }
        }
        poly = poly.primitive_part();
        // Independent soundness re-check through the full order.
        if (!evaluate_on_rational_series(poly, s).is_zero())
          throw std::logic_error("guess_algebraic_2var: nullspace vector fails re-verification");
        candidates.push_back(std::move(poly));
      }
      AlgebraicGuess g;
      g.poly = pick_canonical(std::move(candidates));
      g.deg_main = dq;
      g.deg_x = dx;
      g.matched_order = ord;
      g.margin = ord + 1 - unknowns;
      g.nullspace_dim = static_cast<int>(basis.size());
      return g;
    }
  }
  if (skipped)
    throw InsufficientOrder(
        "guess_algebraic_2var: series order too small for the requested bounds and margin");
  return std::nullopt;
}

std::optional<AlgebraicGuess> guess_algebraic_3var(const PolySeries& f, int max_dp, int max_dx,
                                                   int max_dt, long margin) {
  const long ord = f.order();
  bool skipped = false;

  std::vector<PolySeries> pw{PolySeries::constant(UniPoly(BigRational(1)), ord)};
  auto power = [&](int i) -> const PolySeries& {
    while (static_cast<int>(pw.size()) <= i) pw.push_back(pw.back() * f);
    return pw[static_cast<std::size_t>(i)];
  };

  for (int dp = 1; dp <= max_dp; ++dp) {
    for (int dx = 1; dx <= max_dx; ++dx) {
      for (int dt = 1; dt <= max_dt; ++dt) {
        const long unknowns = static_cast<long>(dp + 1) * (dx + 1) * (dt + 1);
        if (ord + 1 < unknowns + margin) {
          skipped = true;
          continue;
        }
        const auto col = [&](int i, int j, int k) {
          return static_cast<std::size_t>((i * (dx + 1) + j) * (dt + 1) + k);
        };
        std::vector<std::vector<BigRational>> rows;
        for (long m = 0; m <= ord; ++m) {
          int tmax = 0;
          for (int i = 0; i <= dp; ++i)
            for (int j = 0; j <= dx && j <= m; ++j)
              tmax = std::max(tmax, power(i).coeff(m - j).degree() + max_dt);
          for (int tau = 0; tau <= tmax; ++tau) {
            std::vector<BigRational> row(static_cast<std::size_t>(unknowns), BigRational(0));
            bool nonzero = false;
            for (int i = 0; i <= dp; ++i) {
              for (int j = 0; j <= dx && j <= m; ++j) {
                const UniPoly& c = power(i).coeff(m - j);
                for (int k = 0; k <= dt && k <= tau; ++k) {
                  const BigRational v = c.coeff(tau - k);
                  if (v.is_zero()) continue;
                  row[col(i, j, k)] = v;
                  nonzero = true;
                }
              }
            }
            if (nonzero) rows.push_back(std::move(row));
          }
        }
        auto basis = rational_nullspace(std::move(rows), static_cast<std::size_t>(unknowns));
        if (basis.empty()) continue;

        std::vector<MultiPoly> candidates;
        for (const auto& v : basis) {
          MultiPoly poly;
          for (int i = 0; i <= dp; ++i) {
            for (int j = 0; j <= dx; ++j) {
              for (int k = 0; k <= dt; ++k) {
                const BigRational& c = v[col(i, j, k)];
                if (c.is_zero()) continue;
                Exponents e{0, 0, 0, 0};
                e[static_cast<int>(Var::P)] = i;
                e[static_cast<int>(Var::X)] = j;
                e[static_cast<int>(Var::T)] = k;
                poly += MultiPoly::monomial(e, c);
              }
            }
          }
          poly = poly.primitive_part();
          if (!evaluate_on_series(poly, f, PolySeries(ord)).is_zero())
            throw std::logic_error(
                "guess_algebraic_3var: nullspace vector fails re-verification");
          candidates.push_back(std::move(poly));
        }
        AlgebraicGuess g;
        g.poly = pick_canonical(std::move(candidates));
        g.deg_main = dp;
        g.deg_x = dx;
        g.deg_t = dt;
        g.matched_order = ord;
        g.margin = ord + 1 - unknowns;
        g.nullspace_dim = static_cast<int>(basis.size());
        return g;
      }
    }
  }
  if (skipped)
    throw InsufficientOrder(
        "guess_algebraic_3var: series order too small for the requested bounds and margin");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Recurrences.
// ---------------------------------------------------------------------------

std::string Recurrence::relation_string() const {
  std::string out;
  for (int i = order; i >= 0; --i) {
    const UniPoly& pi = p[static_cast<std::size_t>(i)];
    if (pi.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + pi.to_string("n") + ")*a(n";
    if (i > 0) out += "+" + std::to_string(i);
    out += ")";
  }
  out += " = 0 for n >= " + std::to_string(offset);
  return out;
}

bool recurrence_holds(const Recurrence& rec, const std::vector<BigRational>& a) {
  const long len = static_cast<long>(a.size());
  const long last = len - 1 - rec.order;
  if (rec.offset > last) return false;
  for (long n = rec.offset; n <= last; ++n) {
    BigRational acc(0);
    const BigRational nn(n);
    for (int i = 0; i <= rec.order; ++i)
      acc += rec.p[static_cast<std::size_t>(i)].eval(nn) * a[static_cast<std::size_t>(n + i)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

Recurrence normalize_recurrence(Recurrence rec) {
  // Drop identically-zero leading terms.
  while (!rec.p.empty() && rec.p.back().is_zero()) {
    rec.p.pop_back();
    --rec.order;
  }
  if (rec.p.empty()) throw std::logic_error("normalize_recurrence: zero relation");
  // Drop zero trailing terms, shifting the window.
  std::size_t k0 = 0;
  while (rec.p[k0].is_zero()) ++k0;
  if (k0 > 0) {
    std::vector<UniPoly> np;
    for (std::size_t i = k0; i < rec.p.size(); ++i)
      np.push_back(rec.p[i].shift(BigRational(-static_cast<long>(k0))));
    rec.p = std::move(np);
    rec.order -= static_cast<int>(k0);
    rec.offset += static_cast<long>(k0);
  }
  if (rec.offset < 0) rec.offset = 0;

  // Common polynomial factor: divide out, advancing the offset past its
  // nonnegative integer roots. An order-0 relation is its own coefficient;
  // dividing there would erase the relation's content at the roots.
  UniPoly g = rec.order >= 1 ? rec.p[0] : UniPoly(BigRational(1));
  for (std::size_t i = 1; i < rec.p.size() && g.degree() > 0; ++i)
    g = UniPoly::gcd(g, rec.p[i]);
  if (g.degree() > 0) {
    for (auto& pi : rec.p) pi = *pi.exact_divide(g);
    rec.offset = std::max(rec.offset, g.largest_nonneg_integer_root() + 1);
  }

  // Integer content and sign.
  BigRational content(0);
  for (const auto& pi : rec.p) {
    for (const auto& c : pi.coeffs()) {
      if (c.is_zero()) continue;
      content = content.is_zero()
                    ? c.abs()
                    : BigRational(BigInt::gcd(content.numerator(), c.numerator()),
                                  BigInt::lcm(content.denominator(), c.denominator()));
    }
  }
  if (rec.p.back().leading().sign() < 0) content = -content;
  const BigRational inv = content.inverse();
  for (auto& pi : rec.p) pi = inv * pi;
  return rec;
}

std::optional<Recurrence> guess_recurrence(const std::vector<BigRational>& a, int max_r,
                                           int max_d, long margin) {
  const long len = static_cast<long>(a.size());
  bool skipped = false;
  for (int r = 1; r <= max_r; ++r) {
    for (int d = 0; d <= max_d; ++d) {
      const long unknowns = static_cast<long>(r + 1) * (d + 1);
      if (len < unknowns + margin + r) {
        skipped = true;
        continue;
      }
      const long windows = len - r;
      std::vector<std::vector<BigRational>> rows(
          static_cast<std::size_t>(windows),
          std::vector<BigRational>(static_cast<std::size_t>(unknowns), BigRational(0)));
      for (long n = 0; n < windows; ++n) {
        BigRational npow(1);
        const BigRational nn(n);
        for (int j = 0; j <= d; ++j) {
          for (int i = 0; i <= r; ++i) {
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i * (d + 1) + j)] =
                a[static_cast<std::size_t>(n + i)] * npow;
          }
          npow *= nn;
        }
      }
      auto basis = rational_nullspace(std::move(rows), static_cast<std::size_t>(unknowns));
      if (basis.empty()) continue;

      std::vector<Recurrence> candidates;
      for (const auto& v : basis) {
        Recurrence rec;
        rec.order = r;
        rec.offset = 0;
        for (int i = 0; i <= r; ++i) {
          std::vector<BigRational> coeffs;
          for (int j = 0; j <= d; ++j)
            coeffs.push_back(v[static_cast<std::size_t>(i * (d + 1) + j)]);
          rec.p.push_back(UniPoly::from_coeffs(std::move(coeffs)));
        }
        rec = normalize_recurrence(std::move(rec));
        if (!recurrence_holds(rec, a))
          throw std::logic_error("guess_recurrence: candidate fails re-verification");
        candidates.push_back(std::move(rec));
      }
      std::size_t best = 0;
      auto weight = [](const Recurrence& rec) {
        std::size_t w = 0;
        for (const auto& pi : rec.p)
          for (const auto& c : pi.coeffs())
            if (!c.is_zero()) ++w;
        return w;
      };
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        const std::size_t wa = weight(candidates[i]);
        const std::size_t wb = weight(candidates[best]);
        if (wa < wb || (wa == wb && candidates[i].relation_string() <
                                        candidates[best].relation_string()))
          best = i;
      }
      return candidates[best];
    }
  }
  if (skipped)
    throw InsufficientOrder(
        "guess_recurrence: not enough terms for the requested bounds and margin");
  return std::nullopt;
}

}  // namespace catalytic
