#include "catalytic/certify.hpp"

#include "catalytic/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using catalytic::AlgebraicGuess;
using catalytic::BigRational;
using catalytic::Certificate;
using catalytic::certify;
using catalytic::eliminate_q;
using catalytic::Exponents;
using catalytic::guess_algebraic_2var;
using catalytic::Json;
using catalytic::make_equation;
using catalytic::MultiPoly;
using catalytic::parse_polynomial;
using catalytic::recheck_certificate;
using catalytic::solve_cross_checked;
using catalytic::SolverResult;
using catalytic::Var;
using catalytic::Verdict;

namespace {

struct Certified {
  catalytic::FunctionalEquation eq;
  SolverResult sol;
  AlgebraicGuess guess;
  Certificate cert;
};

Certified run_chain(const std::string& name, const std::string& dsl, long order) {
  Certified c{make_equation(name, dsl, BigRational(1)), {}, {}, {}};
  c.sol = solve_cross_checked(c.eq, order, 20);
  auto g = guess_algebraic_2var(c.sol.f_x1, 8, 8);
  REQUIRE(g.has_value());
  c.guess = *g;
  c.cert = certify(c.eq, c.guess, c.sol);
  return c;
}

}  // namespace

TEST_CASE("elimination examples") {
  // Linear in Q: the resultant is substitution.
  CHECK(eliminate_q(parse_polynomial("P - Q"), parse_polynomial("x*Q^2 - Q + 1")) ==
        parse_polynomial("x*P^2 - P + 1"));

  // Shared Q-factor is reported, not swallowed.
  CHECK_THROWS_AS(eliminate_q(parse_polynomial("Q*(P-1)"), parse_polynomial("Q")),
                  catalytic::SharedFactor);
  CHECK_THROWS_AS(eliminate_q(parse_polynomial("P - 1"), parse_polynomial("Q")),
                  catalytic::ZeroInput);
}

TEST_CASE("the Catalan certification chain") {
  const Certified c = run_chain("catalan", "P = 1 + x*t*P*Q", 40);
  CHECK(c.cert.verdict == Verdict::certified);
  CHECK(!c.cert.trivial_elimination);
  CHECK(c.cert.annihilation_ok);
  CHECK(c.cert.annihilation_order == 40);
  // S = +-x * I and the stored primitive quotient is exactly x.
  CHECK(c.cert.quotient_primitive == parse_polynomial("x"));
  const MultiPoly xI = parse_polynomial("x") * c.guess.poly;
  CHECK((c.cert.S == xI || c.cert.S == -xI));
  CHECK(c.cert.roots.di_ok);
  CHECK(c.cert.roots.dg_ok);
  CHECK(c.cert.roots.di_dq_value == BigRational(-1));
  CHECK(c.cert.roots.g_monomial_content_x == 1);

  // The specialized eliminant annihilates f(x,1) as a series.
  CHECK(evaluate_on_rational_series(c.cert.S, c.sol.f_x1).is_zero());
}

TEST_CASE("the two-stack eliminant agrees with the subresultant cross-check") {
  const Certified c = run_chain("west", "P = 1/(1-x*t) + x*t*(Q-t*P)*(Q-P)/(1-t)^2", 45);
  REQUIRE(c.cert.verdict == Verdict::certified);
  const MultiPoly prs = resultant_prs(c.eq.F, c.guess.poly, Var::Q);
  CHECK((c.cert.G == prs || c.cert.G == -prs));
}

TEST_CASE("trivial elimination when F has no Q") {
  const Certified c = run_chain("geometric", "P = 1 + x*P", 30);
  CHECK(c.cert.trivial_elimination);
  CHECK(c.cert.verdict == Verdict::certified);
  CHECK(c.cert.G == c.eq.F);
  CHECK(c.cert.divisible);
}

TEST_CASE("a wrong guess is refuted, coefficient by coefficient") {
  const auto eq = make_equation("catalan", "P = 1 + x*t*P*Q", BigRational(1));
  const auto sol = solve_cross_checked(eq, 40, 20);
  auto guess = *guess_algebraic_2var(sol.f_x1, 8, 8);

  // A deliberately wrong constant term: x*Q^2 - Q + 2.
  AlgebraicGuess bad = guess;
  bad.poly = parse_polynomial("x*Q^2 - Q + 2");
  CHECK(certify(eq, bad, sol).verdict == Verdict::refuted);

  // Mutating any single coefficient of the certified I refutes it.
  for (const auto& [e, coef] : guess.poly.terms()) {
    AlgebraicGuess mut = guess;
    mut.poly = guess.poly + MultiPoly::monomial(e, BigRational(1));
    CHECK(certify(eq, mut, sol).verdict == Verdict::refuted);
  }
}

TEST_CASE("a guess sharing a Q-factor with F is inconclusive, and rechecks") {
  // F = Q(P-1) annihilates the constant solution f = 1; the injected guess
  // Q(Q-1) also annihilates f(x,1) but shares the factor Q with F, so the
  // resultant vanishes and certification cannot proceed.
  const auto eq = make_equation("shared", "Q*(P - 1)", BigRational(1));
  const auto sol = solve_cross_checked(eq, 20, 15);
  CHECK(sol.f_x1.coeff(0) == BigRational(1));
  CHECK(sol.f_x1.coeff(1) == BigRational(0));
  AlgebraicGuess guess;
  guess.poly = parse_polynomial("Q^2 - Q");
  guess.deg_main = 2;
  guess.deg_x = 0;
  guess.matched_order = 20;
  const Certificate cert = certify(eq, guess, sol);
  CHECK(cert.shared_factor);
  CHECK(cert.verdict == Verdict::inconclusive);
  // The serialized form reproduces the same conclusion.
  CHECK(recheck_certificate(cert.to_json()).verdict == Verdict::inconclusive);
}

TEST_CASE("certificates recheck bit-exactly and detect tampering") {
  const Certified c = run_chain("catalan", "P = 1 + x*t*P*Q", 40);
  const Json doc = c.cert.to_json();
  CHECK(recheck_certificate(doc).verdict == Verdict::certified);

  Json tampered = doc;
  tampered["guess"]["I"] = "x*Q^2 - Q + 2";
  CHECK_THROWS_AS(recheck_certificate(tampered), catalytic::TamperDetected);

  Json tampered2 = doc;
  tampered2["elimination"]["quotient"] = "x^2";
  CHECK_THROWS_AS(recheck_certificate(tampered2), catalytic::TamperDetected);

  Json tampered3 = doc;
  tampered3["verdict"] = "refuted";
  CHECK_THROWS_AS(recheck_certificate(tampered3), catalytic::TamperDetected);

  Json bad_schema = doc;
  bad_schema["schema"] = 99;
  CHECK_THROWS_AS(recheck_certificate(bad_schema), catalytic::Error);
}

TEST_CASE("certificate JSON is deterministic") {
  const Certified a = run_chain("catalan", "P = 1 + x*t*P*Q", 35);
  const Certified b = run_chain("catalan", "P = 1 + x*t*P*Q", 35);
  CHECK(a.cert.to_json().dump(2) == b.cert.to_json().dump(2));
}
