// Empirical guessing by exact linear algebra: bivariate annihilators I(Q,x)
// of f(x,1), trivariate annihilators G(P,x,t) of f(x,t) (the slow path), and
// P-recursive recurrences for the coefficient sequence. Searches run from the
// smallest degree bounds upward, so every returned guess is minimal.
#pragma once

#include <optional>
#include <vector>

#include "catalytic/multipoly.hpp"
#include "catalytic/series.hpp"
#include "catalytic/unipoly.hpp"

namespace catalytic {

inline constexpr long kDefaultMarginThreshold = 10;

struct AlgebraicGuess {
  MultiPoly poly;        // primitive, sign-normalized
  int deg_main = 0;      // Q-degree (2-var) or P-degree (3-var)
  int deg_x = 0;
  int deg_t = -1;        // 3-var only
  long matched_order = 0;
  long margin = 0;       // equations minus unknowns
  int nullspace_dim = 0;
};

// Annihilator I(Q, x) with I(s(x), x) = 0 through s.order(). Searches
// dQ = 1..max_dq outer, dx = 1..max_dx inner; a bound pair is attempted only
// when s.order() + 1 >= (dQ+1)(dx+1) + margin. Returns the first hit;
// nullopt when every feasible pair has a trivial nullspace; throws
// InsufficientOrder when no pair was feasible at all, or none produced a
// guess and at least one pair had to be skipped.
std::optional<AlgebraicGuess> guess_algebraic_2var(const RationalSeries& s, int max_dq,
                                                   int max_dx,
                                                   long margin = kDefaultMarginThreshold);

// Annihilator G(P, x, t) with G(f(x,t), x, t) = 0 through f.order().
std::optional<AlgebraicGuess> guess_algebraic_3var(const PolySeries& f, int max_dp, int max_dx,
                                                   int max_dt,
                                                   long margin = kDefaultMarginThreshold);

struct Recurrence {
  int order = 0;                 // r
  std::vector<UniPoly> p;        // p[0..r], p[r] nonzero; sum p_i(n) a(n+i) = 0
  long offset = 0;               // valid for all n >= offset

  std::string relation_string() const;
};

// True if the relation holds at every n with offset <= n <= last window.
bool recurrence_holds(const Recurrence& rec, const std::vector<BigRational>& a);

// Canonical normalization: integer content and sign removed, and any common
// polynomial factor of the p_i divided out, advancing the offset past that
// factor's nonnegative integer roots.
Recurrence normalize_recurrence(Recurrence rec);

// Minimal (r, then d) relation holding on all provided terms, normalized.
// Feasibility per pair: len(a) >= (r+1)(d+1) + margin + r.
std::optional<Recurrence> guess_recurrence(const std::vector<BigRational>& a, int max_r,
                                           int max_d, long margin = kDefaultMarginThreshold);

// Exact nullspace basis of the rational matrix (rows x cols), via
// Gauss-Jordan elimination with content-normalized integer rows.
std::vector<std::vector<BigRational>> rational_nullspace(
    std::vector<std::vector<BigRational>> rows, std::size_t cols);

}  // namespace catalytic
