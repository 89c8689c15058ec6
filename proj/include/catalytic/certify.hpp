// Turning a guess into a theorem: eliminate Q by the resultant, confirm the
// eliminant annihilates f(x,t), specialize P -> Q and t -> 1, check the
// result is a nonzero multiple of the guessed I, and run the simple-root
// side-conditions. Everything lands in a self-contained, re-checkable
// certificate.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "catalytic/equation.hpp"
#include "catalytic/guess.hpp"
#include "catalytic/multipoly.hpp"
#include "catalytic/solver.hpp"

namespace catalytic {

using Json = nlohmann::ordered_json;

enum class Verdict { certified, refuted, inconclusive };
const char* verdict_name(Verdict v);

// G = Res_Q(F, I), a polynomial in {P, x, t}. Throws SharedFactor when the
// resultant vanishes (F and I share a Q-factor).
MultiPoly eliminate_q(const MultiPoly& F, const MultiPoly& I);

struct SimpleRootChecks {
  BigRational di_dq_value;   // dI/dQ at (s(0), x = 0)
  UniPoly dg_dp_at_base;     // dG/dP at (f0(t), x = 0), t-polynomial
  int g_monomial_content_x = 0;  // x^k stripped off G before the dG check
  int g_monomial_content_t = 0;
  bool di_ok = false;
  bool dg_ok = false;
};

struct Certificate {
  // equation
  std::string name;
  std::string dsl;
  MultiPoly F;
  BigRational initial_term;
  std::vector<MultiPoly> denominator_loci;
  // solver summary
  long order = 0;
  SolveMethod method = SolveMethod::order_by_order;
  long fixed_point_iterations = 0;
  long cross_checked_order = -1;
  std::vector<std::string> f_x1;
  std::vector<std::string> f_xt_prefix;
  // guess
  MultiPoly guess_poly;
  int guess_deg_q = 0;
  int guess_deg_x = 0;
  long guess_margin = 0;
  long guess_matched_order = 0;
  int guess_nullspace_dim = 0;
  // elimination and checks
  bool trivial_elimination = false;  // F had no Q; G := F
  bool shared_factor = false;
  MultiPoly G;
  bool annihilation_ok = false;
  long annihilation_order = -1;  // order through which G(f,x,t) vanished
  MultiPoly S;
  bool s_nonzero = false;
  bool divisible = false;
  MultiPoly quotient;
  MultiPoly quotient_primitive;
  SimpleRootChecks roots;
  Verdict verdict = Verdict::inconclusive;

  Json to_json() const;
};

// Full verification chain. All failures are recorded as data in the
// certificate; nothing throws for a refutable guess.
Certificate certify(const FunctionalEquation& eq, const AlgebraicGuess& guess,
                    const SolverResult& sol);

struct RecheckOutcome {
  Verdict verdict;
  std::string detail;
};

// Recompute G, S, the quotient, and the simple-root values from the
// certificate's own F and I; any recomputed field that differs from the
// stored one is TamperDetected. Series-level check results are carried as
// stored data and folded into the recomputed verdict.
RecheckOutcome recheck_certificate(const Json& doc);

}  // namespace catalytic
