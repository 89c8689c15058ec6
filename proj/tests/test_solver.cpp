#include "catalytic/solver.hpp"

#include "catalytic/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using catalytic::BigRational;
using catalytic::FunctionalEquation;
using catalytic::make_equation;
using catalytic::PolySeries;
using catalytic::RationalSeries;
using catalytic::solve_cross_checked;
using catalytic::solve_fixed_point;
using catalytic::solve_order_by_order;
using catalytic::SolveMethod;
using catalytic::SolverResult;
using catalytic::UniPoly;

namespace {

FunctionalEquation catalan_eq() {
  return make_equation("catalan", "P = 1 + x*t*P*Q", BigRational(1));
}

FunctionalEquation west_eq() {
  return make_equation("west", "P = 1/(1-x*t) + x*t*(Q-t*P)*(Q-P)/(1-t)^2", BigRational(1));
}

UniPoly tpoly(std::vector<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("fixed point on the Catalan equation, frozen prefix") {
  // Hand iteration: f = 1 + tx + (t^2+t)x^2 + (t^3+2t^2+2t)x^3 + ...
  const SolverResult r = solve_fixed_point(catalan_eq(), 3);
  CHECK(r.f_xt.coeff(0) == tpoly({1}));
  CHECK(r.f_xt.coeff(1) == tpoly({0, 1}));
  CHECK(r.f_xt.coeff(2) == tpoly({0, 1, 1}));
  CHECK(r.f_xt.coeff(3) == tpoly({0, 2, 2, 1}));
  CHECK(r.f_x1.coeff(0) == BigRational(1));
  CHECK(r.f_x1.coeff(1) == BigRational(1));
  CHECK(r.f_x1.coeff(2) == BigRational(2));
  CHECK(r.f_x1.coeff(3) == BigRational(5));
  CHECK(r.method == SolveMethod::fixed_point);
  for (long g : r.order_gains) CHECK(g >= 1);
}

TEST_CASE("fixed point on the two-stack equation through the divided difference") {
  const SolverResult r = solve_fixed_point(west_eq(), 2);
  CHECK(r.f_xt.coeff(0) == tpoly({1}));
  CHECK(r.f_xt.coeff(1) == tpoly({0, 1}));
  CHECK(r.f_xt.coeff(2) == tpoly({0, 1, 1}));
  CHECK(r.f_x1.coeff(2) == BigRational(2));
}

TEST_CASE("degenerate equation P = x converges immediately") {
  const SolverResult r = solve_fixed_point(make_equation("deg", "P = x", BigRational(0)), 12);
  for (long n = 0; n <= 12; ++n) {
    if (n == 1) {
      CHECK(r.f_xt.coeff(n) == tpoly({1}));
    } else {
      CHECK(r.f_xt.coeff(n).is_zero());
    }
  }
}

TEST_CASE("order-by-order matches the fixed point to order 30") {
  for (const auto& eq : {catalan_eq(), west_eq()}) {
    const SolverResult a = solve_fixed_point(eq, 30);
    const SolverResult b = solve_order_by_order(eq, 30);
    CHECK(a.f_xt == b.f_xt);
    CHECK(a.f_x1 == b.f_x1);
  }
}

TEST_CASE("residual vanishes and the specialization is consistent") {
  for (const auto& eq : {catalan_eq(), west_eq()}) {
    const SolverResult r = solve_order_by_order(eq, 25);
    CHECK(specialize_t1(r.f_xt) == r.f_x1);
    const PolySeries residual =
        evaluate_on_series(eq.F, r.f_xt, PolySeries::lift(r.f_x1));
    CHECK(residual.is_zero());
  }
}

TEST_CASE("the two-stack series specializes to the counting sequence") {
  const SolverResult r = solve_order_by_order(west_eq(), 12);
  // 1, 1, 2, 6, 22, 91, 408, ... checked against the exact factorial formula
  // (the closed form counts lengths >= 1; the constant term is 1).
  CHECK(r.f_x1.coeff(0) == BigRational(1));
  for (long n = 1; n <= 12; ++n) CHECK(r.f_x1.coeff(n) == oracles::two_stack_formula(n));
}

TEST_CASE("the divided-difference numerator is divisible by (1-t)^2") {
  // (C - t f)(C - f) with C = f|_{t=1} vanishes doubly at t = 1, order by
  // order; the exact division must succeed at every coefficient.
  const SolverResult r = solve_order_by_order(west_eq(), 8);
  const PolySeries c = PolySeries::lift(r.f_x1);
  const PolySeries tf = r.f_xt.scaled(UniPoly::variable());
  const PolySeries numerator = (c - tf) * (c - r.f_xt);
  const UniPoly one_minus_t = UniPoly::from_coeffs({BigRational(1), BigRational(-1)});
  CHECK_NOTHROW((void)divide_by_t_factor(numerator, one_minus_t, 2));
  // The product of x^1 coefficients view: f * lift(f|_{t=1}) starts 1, t+1.
  const PolySeries prod = r.f_xt * c;
  CHECK(prod.coeff(1) == UniPoly::from_coeffs({BigRational(1), BigRational(1)}));
}

TEST_CASE("constant solution of F = P^2 - 1") {
  const SolverResult r = solve_order_by_order(make_equation("sq", "P^2 - 1", BigRational(1)), 10);
  CHECK(r.f_xt.coeff(0) == tpoly({1}));
  for (long n = 1; n <= 10; ++n) CHECK(r.f_xt.coeff(n).is_zero());
}

TEST_CASE("solver failure modes") {
  // The x^1 coefficient forces (1-t) c_1(t) = 1, impossible in Q[t].
  CHECK_THROWS_AS(
      solve_order_by_order(make_equation("bad", "(1-t)*P - (1-t) - x", BigRational(1)), 5),
      catalytic::InconsistentOrder);
  // F with no P at x = 0 pins nothing.
  CHECK_THROWS_AS(
      solve_order_by_order(make_equation("free", "x*P - x*Q", BigRational(1)), 5),
      catalytic::NonUniqueOrder);
  // Wrong initial term fails the order-0 consistency check.
  CHECK_THROWS_AS(
      solve_order_by_order(make_equation("init", "P - 1 - x*t*P*Q", BigRational(2)), 5),
      catalytic::InconsistentOrder);
  // Phi that moves the constant term cannot gain agreement.
  CHECK_THROWS_AS(solve_fixed_point(make_equation("nc", "P = 1 + P - x*P", BigRational(1)), 5),
                  catalytic::NoContraction);
  // Divided difference with a non-vanishing numerator at t = 1.
  CHECK_THROWS_AS(
      solve_fixed_point(make_equation("dd", "P = 1 + x*(Q - 2*t*P)/(1-t)", BigRational(1)), 5),
      catalytic::DividedDifferenceFailure);
}

TEST_CASE("cross-checked solve records both methods") {
  const SolverResult r = solve_cross_checked(catalan_eq(), 20, 12);
  CHECK(r.method == SolveMethod::both_agree);
  CHECK(r.cross_checked_order == 12);
  CHECK(r.order == 20);
  // Without a fixed-point form, the order-by-order result stands alone.
  const SolverResult s =
      solve_cross_checked(make_equation("plain", "P - 1 - x*t*P*Q", BigRational(1)), 15, 10);
  CHECK(s.method == SolveMethod::order_by_order);
  CHECK(s.f_x1.coeff(5) == oracles::catalan_terms(6)[5]);
}

TEST_CASE("deterministic output") {
  const SolverResult a = solve_cross_checked(west_eq(), 18, 12);
  const SolverResult b = solve_cross_checked(west_eq(), 18, 12);
  CHECK(a.f_xt.coeff_strings() == b.f_xt.coeff_strings());
  CHECK(a.f_x1.coeff_strings() == b.f_x1.coeff_strings());
}
