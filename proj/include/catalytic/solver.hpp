// Series solvers for F(P, Q, x, t) = 0 with Q the t=1 specialization of P.
// Two independent routes: fixed-point iteration on the P = Phi(...) form,
// and order-by-order linear solving on the cleared polynomial F. Corpus runs
// use both and require exact agreement.
#pragma once

#include <vector>

#include "catalytic/equation.hpp"
#include "catalytic/series.hpp"

namespace catalytic {

enum class SolveMethod { fixed_point, order_by_order, both_agree };

const char* method_name(SolveMethod m);

struct SolverResult {
  PolySeries f_xt{0};
  RationalSeries f_x1{0};
  long order = 0;
  SolveMethod method = SolveMethod::order_by_order;
  long iterations = 0;              // fixed-point only
  std::vector<long> order_gains;    // fixed-point only
  long cross_checked_order = -1;    // both_agree only
};

// Iterate f <- Phi(f, f|_{t=1}) from the constant seed until two consecutive
// iterates agree through the requested order. Requires eq.phi. Every
// iteration must gain at least one x-order, else NoContraction.
SolverResult solve_fixed_point(const FunctionalEquation& eq, long order);

// Determine each coefficient c_n(t) of f from the x^n coefficient of
// F(f, g, x, t), an identity in t that is affine in c_n and in the scalar
// gamma = c_n(1); gamma enters as an extra unknown tied by that constraint.
// Reports NonUniqueOrder / InconsistentOrder when an order fails.
SolverResult solve_order_by_order(const FunctionalEquation& eq, long order);

// Order-by-order at full order plus a fixed-point cross-check through
// cross_order (when the fixed-point form exists). Exact disagreement is a
// hard SolverMismatch error.
SolverResult solve_cross_checked(const FunctionalEquation& eq, long order, long cross_order);

// Evaluate a polynomial in {P, Q, x, t} on series arguments; the independent
// evaluator used for residual checks and annihilation tests.
PolySeries evaluate_on_series(const MultiPoly& F, const PolySeries& fP, const PolySeries& fQ);

// Evaluate a polynomial in {Q, x} on a rational series.
RationalSeries evaluate_on_rational_series(const MultiPoly& I, const RationalSeries& s);

// Evaluate the fixed-point right side Phi at the given series for P
// (Q is derived from it by specialization at t = 1).
PolySeries evaluate_phi(const ExprTree& phi, const PolySeries& f);

}  // namespace catalytic
