#include "catalytic/guess.hpp"

#include "catalytic/equation.hpp"
#include "catalytic/errors.hpp"
#include "catalytic/solver.hpp"
#include "doctest.h"
#include "oracles.hpp"

using catalytic::AlgebraicGuess;
using catalytic::BigRational;
using catalytic::guess_algebraic_2var;
using catalytic::guess_algebraic_3var;
using catalytic::guess_recurrence;
using catalytic::make_equation;
using catalytic::MultiPoly;
using catalytic::parse_polynomial;
using catalytic::PolySeries;
using catalytic::RationalSeries;
using catalytic::Recurrence;
using catalytic::UniPoly;
using catalytic::Var;

namespace {

RationalSeries series_of(const std::vector<BigRational>& v) {
  return RationalSeries::from_coeffs(v);
}

std::vector<BigRational> ones(long count) {
  return std::vector<BigRational>(static_cast<std::size_t>(count), BigRational(1));
}

}  // namespace

TEST_CASE("annihilator of the geometric series") {
  const auto g = guess_algebraic_2var(series_of(ones(25)), 1, 1);
  REQUIRE(g.has_value());
  CHECK(g->poly == parse_polynomial("Q*x - Q + 1"));
  CHECK(g->deg_main == 1);
  CHECK(g->deg_x == 1);
  CHECK(g->nullspace_dim == 1);
  CHECK(g->margin == 25 - 4);
}

TEST_CASE("annihilator of the Catalan series") {
  const auto terms = oracles::catalan_terms(31);
  const auto g = guess_algebraic_2var(series_of(terms), 4, 4);
  REQUIRE(g.has_value());
  CHECK(g->poly == parse_polynomial("x*Q^2 - Q + 1"));
  CHECK(g->deg_main == 2);
  CHECK(g->deg_x == 1);
  CHECK(g->matched_order == 30);
  CHECK(g->nullspace_dim == 1);

  // Minimality: no annihilator exists at smaller Q-degree.
  CHECK(!guess_algebraic_2var(series_of(terms), 1, 4).has_value());
}

TEST_CASE("scaling the series rescales Q in the annihilator") {
  auto terms = oracles::catalan_terms(31);
  for (auto& v : terms) v = BigRational(2) * v;
  const auto g = guess_algebraic_2var(series_of(terms), 4, 4);
  REQUIRE(g.has_value());
  // x(Q/2)^2 - Q/2 + 1, cleared to primitive form.
  CHECK(g->poly == parse_polynomial("x*Q^2 - 2*Q + 4"));
}

TEST_CASE("no algebraic relation for the primes") {
  CHECK(!guess_algebraic_2var(series_of(oracles::prime_terms(30)), 1, 1).has_value());
}

TEST_CASE("insufficient order raises instead of guessing") {
  CHECK_THROWS_AS(guess_algebraic_2var(series_of(ones(5)), 8, 8), catalytic::InsufficientOrder);
  // One short of the margin for the smallest bounds (1,1): need 4 + 10 terms.
  CHECK_THROWS_AS(guess_algebraic_2var(series_of(ones(13)), 1, 1),
                  catalytic::InsufficientOrder);
  CHECK(guess_algebraic_2var(series_of(ones(14)), 1, 1).has_value());
}

TEST_CASE("three-variable annihilator of 1/(1-xt)") {
  PolySeries f(20);
  for (long n = 0; n <= 20; ++n)
    f.set_coeff(n, UniPoly::monomial(static_cast<int>(n), BigRational(1)));
  const auto g = guess_algebraic_3var(f, 1, 1, 1);
  REQUIRE(g.has_value());
  CHECK(g->poly == parse_polynomial("P*x*t - P + 1"));
}

TEST_CASE("three-variable annihilator of the Catalan kernel series") {
  const auto eq = make_equation("catalan", "P = 1 + x*t*P*Q", BigRational(1));
  const auto sol = solve_order_by_order(eq, 40);
  const auto g = guess_algebraic_3var(sol.f_xt, 2, 2, 2);
  REQUIRE(g.has_value());
  // The full eliminant is x(P-1)^2 - xtP(P-1) + x^2 t^2 P^2; the minimal
  // guess is its x-stripped primitive factor, so check mutual divisibility.
  const MultiPoly p = MultiPoly::variable(Var::P);
  const MultiPoly x = MultiPoly::variable(Var::X);
  const MultiPoly t = MultiPoly::variable(Var::T);
  const MultiPoly one(1);
  const MultiPoly eliminant =
      (x * (p - one).pow(2) - x * t * p * (p - one) + x * x * t * t * p * p).primitive_part();
  const bool divides = eliminant.exact_divide(g->poly).has_value() ||
                       g->poly.exact_divide(eliminant).has_value();
  CHECK(divides);
}

TEST_CASE("no three-variable relation for prime coefficients") {
  PolySeries f(25);
  const auto primes = oracles::prime_terms(26);
  for (long n = 0; n <= 25; ++n) f.set_coeff(n, UniPoly(primes[static_cast<std::size_t>(n)]));
  CHECK(!guess_algebraic_3var(f, 1, 1, 1).has_value());
}

TEST_CASE("recurrence for the Catalan numbers") {
  const auto rec = guess_recurrence(oracles::catalan_terms(31), 6, 6);
  REQUIRE(rec.has_value());
  CHECK(rec->order == 1);
  CHECK(rec->offset == 0);
  CHECK(rec->p[1] == UniPoly::from_coeffs({BigRational(2), BigRational(1)}));
  CHECK(rec->p[0] == UniPoly::from_coeffs({BigRational(-2), BigRational(-4)}));
  CHECK(recurrence_holds(*rec, oracles::catalan_terms(40)));
}

TEST_CASE("recurrence for n!") {
  const auto rec = guess_recurrence(oracles::factorial_terms(25), 6, 6);
  REQUIRE(rec.has_value());
  CHECK(rec->order == 1);
  CHECK(rec->p[1] == UniPoly(BigRational(1)));
  CHECK(rec->p[0] == UniPoly::from_coeffs({BigRational(-1), BigRational(-1)}));
}

TEST_CASE("recurrence for the two-stack-sortable sequence") {
  // Terms from the exact factorial formula, with the a(0) = 1 boundary term.
  std::vector<BigRational> terms{BigRational(1)};
  for (long n = 1; n <= 30; ++n) terms.push_back(oracles::two_stack_formula(n));
  const auto rec = guess_recurrence(terms, 6, 6);
  REQUIRE(rec.has_value());
  // Normalized: 2(n+2)(2n+3) a(n+1) = 3(3n+1)(3n+2) a(n), valid from n = 1
  // (the raw relation carries an extra factor of n that covers n = 0).
  CHECK(rec->order == 1);
  CHECK(rec->offset == 1);
  CHECK(rec->p[1] ==
        UniPoly::from_coeffs({BigRational(12), BigRational(14), BigRational(4)}));
  CHECK(rec->p[0] ==
        UniPoly::from_coeffs({BigRational(-6), BigRational(-27), BigRational(-27)}));
  CHECK(recurrence_holds(*rec, terms));
}

TEST_CASE("no recurrence for the primes") {
  CHECK(!guess_recurrence(oracles::prime_terms(40), 2, 2).has_value());
}

TEST_CASE("recurrence guessing needs enough terms") {
  CHECK_THROWS_AS(guess_recurrence(oracles::catalan_terms(8), 6, 6),
                  catalytic::InsufficientOrder);
}

TEST_CASE("normalization strips content and shifts trailing zeros") {
  Recurrence rec;
  rec.order = 2;
  rec.offset = 0;
  // 0*a(n) + 6n(n+1)*a(n+1) - 6n(n+1)*a(n+2) = 0  ->  a(n+1) - a(n+2) shifted
  const UniPoly n_np1 =
      UniPoly::from_coeffs({BigRational(0), BigRational(6), BigRational(6)});
  rec.p = {UniPoly(), n_np1, -n_np1};
  const Recurrence norm = catalytic::normalize_recurrence(rec);
  CHECK(norm.order == 1);
  // Window shifted by one for the dropped a(n) slot, then past the roots of
  // the common factor (n-1)n.
  CHECK(norm.offset == 2);
  CHECK(norm.p[0] == UniPoly(BigRational(-1)));
  CHECK(norm.p[1] == UniPoly(BigRational(1)));
}
