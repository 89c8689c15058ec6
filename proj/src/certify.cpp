#include "catalytic/certify.hpp"

#include <algorithm>

#include "catalytic/errors.hpp"

namespace catalytic {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

MultiPoly eliminate_q(const MultiPoly& F, const MultiPoly& I) {
  if (F.degree(Var::Q) < 1 || I.degree(Var::Q) < 1)
    throw ZeroInput("eliminate_q: both polynomials must have positive degree in Q");
  MultiPoly G = resultant(F, I, Var::Q);
  if (G.is_zero()) throw SharedFactor("eliminate_q: resultant is zero, F and I share a Q-factor");
  return G;
}

namespace {

MultiPoly strip_monomial_content(const MultiPoly& g, int& kx, int& kt) {
  kx = 0;
  kt = 0;
  if (g.is_zero()) return g;
  int minx = -1;
  int mint = -1;
  for (const auto& [e, c] : g.terms()) {
    const int ex = e[static_cast<int>(Var::X)];
    const int et = e[static_cast<int>(Var::T)];
    minx = minx < 0 ? ex : std::min(minx, ex);
    mint = mint < 0 ? et : std::min(mint, et);
  }
  kx = minx;
  kt = mint;
  if (minx == 0 && mint == 0) return g;
  MultiPoly out;
  for (const auto& [e, c] : g.terms()) {
    Exponents e2 = e;
    e2[static_cast<int>(Var::X)] -= minx;
    e2[static_cast<int>(Var::T)] -= mint;
    out += MultiPoly::monomial(e2, c);
  }
  return out;
}

UniPoly tpoly_from_multipoly(const MultiPoly& p) {
  std::vector<BigRational> c(static_cast<std::size_t>(std::max(p.degree(Var::T), 0)) + 1,
                             BigRational(0));
  for (const auto& [e, v] : p.terms()) {
    if (e[static_cast<int>(Var::P)] != 0 || e[static_cast<int>(Var::Q)] != 0 ||
        e[static_cast<int>(Var::X)] != 0)
      throw std::logic_error("tpoly_from_multipoly: polynomial not univariate in t");
    c[static_cast<std::size_t>(e[static_cast<int>(Var::T)])] = v;
  }
  return UniPoly::from_coeffs(std::move(c));
}

SimpleRootChecks run_simple_root_checks(const MultiPoly& I, const MultiPoly& G,
                                        const BigRational& s0, const BigRational& f0) {
  SimpleRootChecks out;
  const MultiPoly di =
      I.derivative(Var::Q).substitute(Var::Q, s0).substitute(Var::X, BigRational(0));
  if (!di.is_constant())
    throw std::logic_error("simple_root_checks: dI/dQ specialization is not constant");
  out.di_dq_value = di.constant_term();
  out.di_ok = !out.di_dq_value.is_zero();

  // The resultant routinely carries monomial content in x (and possibly t);
  // that content contributes nothing to the annihilation identity, so the
  // derivative condition is evaluated on the stripped eliminant.
  const MultiPoly gg = strip_monomial_content(G, out.g_monomial_content_x,
                                              out.g_monomial_content_t);
  const MultiPoly dg =
      gg.derivative(Var::P).substitute(Var::P, f0).substitute(Var::X, BigRational(0));
  out.dg_dp_at_base = tpoly_from_multipoly(dg);
  out.dg_ok = !out.dg_dp_at_base.is_zero();
  return out;
}

Verdict combine_verdict(bool annihilation_ok, bool s_nonzero, bool divisible, bool di_ok,
                        bool dg_ok) {
  if (!annihilation_ok || !s_nonzero || !divisible) return Verdict::refuted;
  if (!di_ok || !dg_ok) return Verdict::inconclusive;
  return Verdict::certified;
}

}  // namespace

Certificate certify(const FunctionalEquation& eq, const AlgebraicGuess& guess,
                    const SolverResult& sol) {
  Certificate cert;
  cert.name = eq.name;
  cert.dsl = eq.dsl;
  cert.F = eq.F;
  cert.initial_term = eq.initial_term;
  cert.denominator_loci = eq.denominator_loci;
  cert.order = sol.order;
  cert.method = sol.method;
  cert.fixed_point_iterations = sol.iterations;
  cert.cross_checked_order = sol.cross_checked_order;
  cert.f_x1 = sol.f_x1.coeff_strings();
  {
    const long plen = std::min(sol.order, 10L);
    for (long n = 0; n <= plen; ++n) cert.f_xt_prefix.push_back(sol.f_xt.coeff(n).to_string("t"));
  }
  cert.guess_poly = guess.poly;
  cert.guess_deg_q = guess.deg_main;
  cert.guess_deg_x = guess.deg_x;
  cert.guess_margin = guess.margin;
  cert.guess_matched_order = guess.matched_order;
  cert.guess_nullspace_dim = guess.nullspace_dim;

  const MultiPoly& I = guess.poly;

  // (1) eliminate Q; when F never mentions Q the specialization of F itself
  // already annihilates f(x,1) and elimination is trivial.
  cert.trivial_elimination = eq.F.degree(Var::Q) < 1;
  if (cert.trivial_elimination) {
    cert.G = eq.F;
  } else {
    try {
      cert.G = eliminate_q(eq.F, I);
    } catch (const SharedFactor&) {
      cert.shared_factor = true;
      cert.verdict = Verdict::inconclusive;
      return cert;
    }
  }

  // (2) empirical annihilation of f(x,t) by G through the working order.
  {
    const PolySeries residual = evaluate_on_series(cert.G, sol.f_xt, PolySeries(sol.order));
    cert.annihilation_ok = residual.is_zero();
    cert.annihilation_order = cert.annihilation_ok ? sol.order : residual.x_valuation() - 1;
  }

  // (3) specialize P -> Q, t -> 1.
  cert.S = cert.G.substitute(Var::P, MultiPoly::variable(Var::Q))
               .substitute(Var::T, BigRational(1));

  // (4) nonzero-multiple check with the quotient stored for audit.
  cert.s_nonzero = !cert.S.is_zero();
  if (cert.s_nonzero) {
    auto q = cert.S.exact_divide(I);
    if (q && !q->is_zero()) {
      cert.divisible = true;
      cert.quotient = *q;
      cert.quotient_primitive = q->primitive_part();
    }
  }

  // (5) simple-root side-conditions behind the uniqueness argument.
  cert.roots = run_simple_root_checks(I, cert.G, BigRational(cert.f_x1.empty() ? "0" : cert.f_x1[0]),
                                      eq.initial_term);

  cert.verdict = combine_verdict(cert.annihilation_ok, cert.s_nonzero, cert.divisible,
                                 cert.roots.di_ok, cert.roots.dg_ok);
  return cert;
}

Json Certificate::to_json() const {
  Json doc;
  doc["schema"] = 1;
  Json eq;
  eq["name"] = name;
  eq["dsl"] = dsl;
  eq["F"] = F.to_string();
  eq["initial"] = initial_term.to_string();
  Json loci = Json::array();
  for (const auto& l : denominator_loci) loci.push_back(l.to_string());
  eq["denominator_loci"] = loci;
  doc["equation"] = eq;

  Json solver;
  solver["order"] = order;
  solver["method"] = method_name(method);
  solver["fixed_point_iterations"] = fixed_point_iterations;
  solver["cross_checked_order"] = cross_checked_order;
  solver["f_x1"] = f_x1;
  solver["f_xt_prefix"] = f_xt_prefix;
  doc["solver"] = solver;

  Json g;
  g["I"] = guess_poly.to_string();
  g["deg_Q"] = guess_deg_q;
  g["deg_x"] = guess_deg_x;
  g["margin"] = guess_margin;
  g["matched_order"] = guess_matched_order;
  g["nullspace_dim"] = guess_nullspace_dim;
  doc["guess"] = g;

  Json elim;
  elim["trivial"] = trivial_elimination;
  elim["shared_factor"] = shared_factor;
  elim["G"] = G.to_string();
  elim["annihilation_ok"] = annihilation_ok;
  elim["annihilation_order"] = annihilation_order;
  elim["S"] = S.to_string();
  elim["S_nonzero"] = s_nonzero;
  elim["divisible"] = divisible;
  elim["quotient"] = quotient.to_string();
  elim["quotient_primitive"] = quotient_primitive.to_string();
  doc["elimination"] = elim;

  Json rc;
  rc["dI_dQ_at_base"] = roots.di_dq_value.to_string();
  rc["dI_ok"] = roots.di_ok;
  rc["dG_dP_at_base"] = roots.dg_dp_at_base.to_string("t");
  rc["dG_ok"] = roots.dg_ok;
  rc["stripped_x_power"] = roots.g_monomial_content_x;
  rc["stripped_t_power"] = roots.g_monomial_content_t;
  doc["simple_root_checks"] = rc;

  doc["verdict"] = verdict_name(verdict);
  return doc;
}

namespace {

void tamper(const std::string& field) {
  throw TamperDetected("recheck: recomputed '" + field + "' differs from the stored value");
}

}  // namespace

RecheckOutcome recheck_certificate(const Json& doc) {
  if (!doc.contains("schema") || doc["schema"].get<int>() != 1)
    throw Error("recheck: unsupported or missing schema");
  const MultiPoly F = parse_polynomial(doc.at("equation").at("F").get<std::string>());
  const MultiPoly I = parse_polynomial(doc.at("guess").at("I").get<std::string>());
  const auto& elim = doc.at("elimination");

  const bool trivial = F.degree(Var::Q) < 1;
  if (trivial != elim.at("trivial").get<bool>()) tamper("elimination.trivial");

  const bool stored_shared = elim.at("shared_factor").get<bool>();
  MultiPoly G;
  bool shared = false;
  if (trivial) {
    G = F;
  } else {
    try {
      G = eliminate_q(F, I);
    } catch (const SharedFactor&) {
      shared = true;
    }
  }
  if (shared != stored_shared) tamper("elimination.shared_factor");
  if (shared) {
    if (doc.at("verdict").get<std::string>() != verdict_name(Verdict::inconclusive))
      tamper("verdict");
    return {Verdict::inconclusive, "shared factor reproduced"};
  }
  if (G.to_string() != elim.at("G").get<std::string>()) tamper("elimination.G");

  const MultiPoly S =
      G.substitute(Var::P, MultiPoly::variable(Var::Q)).substitute(Var::T, BigRational(1));
  if (S.to_string() != elim.at("S").get<std::string>()) tamper("elimination.S");

  const bool s_nonzero = !S.is_zero();
  bool divisible = false;
  MultiPoly quotient;
  MultiPoly quotient_primitive;
  if (s_nonzero) {
    auto q = S.exact_divide(I);
    if (q && !q->is_zero()) {
      divisible = true;
      quotient = *q;
      quotient_primitive = q->primitive_part();
    }
  }
  if (s_nonzero != elim.at("S_nonzero").get<bool>()) tamper("elimination.S_nonzero");
  if (divisible != elim.at("divisible").get<bool>()) tamper("elimination.divisible");
  if (quotient.to_string() != elim.at("quotient").get<std::string>())
    tamper("elimination.quotient");
  if (quotient_primitive.to_string() != elim.at("quotient_primitive").get<std::string>())
    tamper("elimination.quotient_primitive");

  const auto& solver = doc.at("solver");
  const auto f_x1 = solver.at("f_x1").get<std::vector<std::string>>();
  if (f_x1.empty()) throw Error("recheck: empty coefficient list");
  const BigRational s0(f_x1[0]);
  const BigRational f0(doc.at("equation").at("initial").get<std::string>());
  const SimpleRootChecks roots = run_simple_root_checks(I, G, s0, f0);
  const auto& rc = doc.at("simple_root_checks");
  if (roots.di_dq_value.to_string() != rc.at("dI_dQ_at_base").get<std::string>())
    tamper("simple_root_checks.dI_dQ_at_base");
  if (roots.dg_dp_at_base.to_string("t") != rc.at("dG_dP_at_base").get<std::string>())
    tamper("simple_root_checks.dG_dP_at_base");
  if (roots.di_ok != rc.at("dI_ok").get<bool>()) tamper("simple_root_checks.dI_ok");
  if (roots.dg_ok != rc.at("dG_ok").get<bool>()) tamper("simple_root_checks.dG_ok");

  const bool annihilation_ok = elim.at("annihilation_ok").get<bool>();
  const Verdict v =
      combine_verdict(annihilation_ok, s_nonzero, divisible, roots.di_ok, roots.dg_ok);
  if (verdict_name(v) != doc.at("verdict").get<std::string>()) tamper("verdict");
  return {v, "all recomputed fields match"};
}

}  // namespace catalytic
