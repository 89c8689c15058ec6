#include "catalytic/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "catalytic/errors.hpp"
#include "catalytic/holonomic.hpp"

namespace catalytic {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int classify_exit(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const EquationError*>(&e) ||
      dynamic_cast<const DegreeOverflow*>(&e) || dynamic_cast<const Json::exception*>(&e))
    return 3;
  if (dynamic_cast<const NoContraction*>(&e) || dynamic_cast<const NonUniqueOrder*>(&e) ||
      dynamic_cast<const InconsistentOrder*>(&e) || dynamic_cast<const InsufficientOrder*>(&e) ||
      dynamic_cast<const DividedDifferenceFailure*>(&e) || dynamic_cast<const NotAUnit*>(&e) ||
      dynamic_cast<const SharedFactor*>(&e))
    return 2;
  return 4;
}

std::string preview_sequence(const std::vector<std::string>& coeffs, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size() && i < n; ++i) {
    if (!out.empty()) out += ", ";
    out += coeffs[i];
  }
  if (coeffs.size() > n) out += ", ...";
  return out;
}

struct MergedConfig {
  long order;
  int max_deg_q;
  int max_deg_x;
  long cross_order;
};

MergedConfig merge_config(const PipelineConfig& cfg, const EquationFile& ef,
                          bool for_guessing = true) {
  MergedConfig m;
  m.order = cfg.order > 0 ? cfg.order : ef.order;
  m.max_deg_q = cfg.max_deg_q > 0 ? cfg.max_deg_q : ef.max_deg_q;
  m.max_deg_x = cfg.max_deg_x > 0 ? cfg.max_deg_x : ef.max_deg_x;
  m.cross_order = cfg.cross_check_order > 0 ? cfg.cross_check_order : std::min(m.order, 40L);
  if (cfg.margin < 0) throw EquationError("margin threshold must be nonnegative");
  if (m.order < 1) throw EquationError("order must be positive");
  // The guessers need the smallest bound pair to clear the margin.
  if (for_guessing && m.order < 4 + cfg.margin)
    throw EquationError("order " + std::to_string(m.order) +
                        " is too small for the margin threshold " + std::to_string(cfg.margin));
  if (m.max_deg_q < 1 || m.max_deg_x < 1) throw EquationError("degree bounds must be positive");
  return m;
}

Json recurrence_json(const Recurrence& rec) {
  Json j;
  j["order"] = rec.order;
  Json coeffs = Json::array();
  for (const auto& p : rec.p) coeffs.push_back(p.to_string("n"));
  j["coefficients"] = coeffs;
  j["offset"] = rec.offset;
  j["relation"] = rec.relation_string();
  return j;
}

// The holonomic chain: ODE from the certified annihilator when the simple
// root allows it, the recurrence both ways, and a closed form when
// first-order. Everything is re-verified against the computed coefficients.
Json holonomic_section(const MultiPoly& I, const SolverResult& sol, const PipelineConfig& cfg,
                       std::ostringstream& rep) {
  Json h;
  const std::vector<BigRational>& seq = sol.f_x1.coeffs();

  std::optional<LinearODE> ode;
  std::string ode_skip_reason;
  try {
    ode = alg_to_ode(I);
  } catch (const DegenerateDerivative& e) {
    ode_skip_reason = e.what();
  } catch (const NonSimpleRoot& e) {
    ode_skip_reason = e.what();
  }

  std::optional<Recurrence> derived;
  if (ode) {
    const RationalSeries residual = apply_ode(*ode, sol.f_x1);
    const long checked = residual.order();
    if (!residual.is_zero()) {
      // The derivation failed its own oracle; fall back to guessing.
      ode_skip_reason = "derived ODE does not annihilate the series";
      ode.reset();
    } else {
      Json oj;
      oj["order"] = ode->order;
      Json qj = Json::array();
      for (const auto& q : ode->q) qj.push_back(q.to_string("x"));
      oj["coefficients"] = qj;
      oj["annihilation_checked_to"] = checked;
      h["ode"] = oj;
      rep << "  ODE (order " << ode->order << "): " << ode->to_string()
          << "  [annihilates the series through x^" << checked << "]\n";
      derived = ode_to_recurrence(*ode);
      if (!recurrence_holds(*derived, seq))
        throw std::logic_error("holonomic: ODE-derived recurrence fails on the series");
      h["recurrence_from_ode"] = recurrence_json(*derived);
      rep << "  recurrence (from ODE): " << derived->relation_string() << "\n";
    }
  }
  if (!ode) {
    h["ode"] = nullptr;
    h["ode_skip_reason"] = ode_skip_reason;
    rep << "  ODE: skipped (" << ode_skip_reason << ")\n";
    h["recurrence_from_ode"] = nullptr;
  }

  std::optional<Recurrence> guessed;
  try {
    guessed = guess_recurrence(seq, cfg.rec_order, cfg.rec_deg, cfg.margin);
  } catch (const InsufficientOrder&) {
    guessed = std::nullopt;
  }
  if (guessed) {
    h["recurrence_guessed"] = recurrence_json(*guessed);
    rep << "  recurrence (guessed): " << guessed->relation_string() << "\n";
  } else {
    h["recurrence_guessed"] = nullptr;
    rep << "  recurrence (guessed): none within bounds\n";
  }

  if (derived && guessed) {
    const bool agree = recurrence_holds(*derived, seq) && recurrence_holds(*guessed, seq);
    h["recurrences_agree_on_series"] = agree;
    h["recurrence_source"] = "algebraic+empirical";
    rep << "  recurrences agree on all computed terms: " << (agree ? "yes" : "NO") << "\n";
  } else {
    h["recurrences_agree_on_series"] = nullptr;
    h["recurrence_source"] = derived ? "algebraic" : (guessed ? "empirical" : "none");
  }

  std::optional<ClosedForm> cf;
  if (guessed && guessed->order == 1) cf = closed_form_from_recurrence(*guessed, seq);
  if (!cf && derived && derived->order == 1) cf = closed_form_from_recurrence(*derived, seq);
  if (cf) {
    Json cj;
    cj["ratio_num"] = cf->ratio_num.to_string("n");
    cj["ratio_den"] = cf->ratio_den.to_string("n");
    cj["n0"] = cf->n0;
    cj["a_n0"] = cf->a_n0.to_string();
    cj["product"] = cf->product_string;
    cj["factorial_form"] = cf->factorial_string;
    h["closed_form"] = cj;
    rep << "  closed form: " << cf->product_string << "\n";
    if (!cf->factorial_string.empty())
      rep << "  closed form (factorials): a(n) = " << cf->factorial_string << " for n >= "
          << cf->n0 << "\n";
  } else {
    h["closed_form"] = nullptr;
    rep << "  closed form: none (recurrence not first-order)\n";
  }
  return h;
}

}  // namespace

PipelineOutcome run_prove(const PipelineConfig& cfg, const std::string& equation_path) {
  PipelineOutcome out;
  std::ostringstream rep;
  std::ostringstream timings;
  const auto t_start = Clock::now();
  std::string stage = "parse";
  try {
    auto t0 = Clock::now();
    const EquationFile ef = load_equation_file(equation_path);
    const MergedConfig mc = merge_config(cfg, ef);
    const FunctionalEquation eq = make_equation(ef.name, ef.equation, ef.initial);
    rep << "== " << eq.name << " ==\n";
    rep << "equation: " << eq.dsl << "\n";
    rep << "F = " << eq.F.to_string() << "\n";
    timings << "  parse " << ms_since(t0) << " ms\n";

    stage = "solve";
    t0 = Clock::now();
    const SolverResult sol = solve_cross_checked(eq, mc.order, mc.cross_order);
    rep << "series order " << sol.order << ", method " << method_name(sol.method);
    if (sol.method == SolveMethod::both_agree)
      rep << " (fixed point agreed through x^" << sol.cross_checked_order << " in "
          << sol.iterations << " iterations)";
    rep << "\n";
    rep << "f(x,1) = " << preview_sequence(sol.f_x1.coeff_strings(), 13) << "\n";
    timings << "  solve " << ms_since(t0) << " ms\n";

    stage = "guess";
    t0 = Clock::now();
    const auto guess = guess_algebraic_2var(sol.f_x1, mc.max_deg_q, mc.max_deg_x, cfg.margin);
    if (!guess)
      throw InsufficientOrder("no algebraic annihilator found within bounds (deg_Q <= " +
                              std::to_string(mc.max_deg_q) + ", deg_x <= " +
                              std::to_string(mc.max_deg_x) + ")");
    rep << "guessed I(Q,x) = " << guess->poly.to_string() << "  [deg_Q " << guess->deg_main
        << ", deg_x " << guess->deg_x << ", margin " << guess->margin << ", nullspace dim "
        << guess->nullspace_dim << "]\n";
    timings << "  guess " << ms_since(t0) << " ms\n";

    stage = "certify";
    t0 = Clock::now();
    Certificate cert = certify(eq, *guess, sol);
    Json doc = cert.to_json();
    out.certificate = cert;
    if (cert.shared_factor) {
      rep << "elimination: F and I share a Q-factor; cannot certify\n";
    } else {
      rep << (cert.trivial_elimination ? "elimination: trivial (F has no Q)\n"
                                       : "elimination: G = Res_Q(F, I)\n");
      rep << "  G = " << cert.G.to_string() << "\n";
      rep << "  G annihilates f(x,t) through x^" << cert.annihilation_order << ": "
          << (cert.annihilation_ok ? "yes" : "NO") << "\n";
      rep << "  S = G|_{P->Q, t->1} = " << cert.S.to_string() << "\n";
      if (cert.divisible) {
        rep << "  S = quotient * I, quotient = " << cert.quotient.to_string()
            << "  (primitive: " << cert.quotient_primitive.to_string() << ")\n";
      } else {
        rep << "  nonzero-multiple check FAILED (S "
            << (cert.s_nonzero ? "is not divisible by I" : "is zero") << ")\n";
      }
      rep << "simple-root checks: dI/dQ = " << cert.roots.di_dq_value.to_string() << " ("
          << (cert.roots.di_ok ? "ok" : "ZERO") << "), dG/dP = "
          << cert.roots.dg_dp_at_base.to_string("t") << " ("
          << (cert.roots.dg_ok ? "ok" : "ZERO");
      if (cert.roots.g_monomial_content_x > 0 || cert.roots.g_monomial_content_t > 0)
        rep << "; stripped x^" << cert.roots.g_monomial_content_x << " t^"
            << cert.roots.g_monomial_content_t;
      rep << ")\n";
    }
    timings << "  certify " << ms_since(t0) << " ms\n";

    if (cfg.slow_path_3var && !cert.shared_factor && !cert.trivial_elimination) {
      stage = "slow_path";
      t0 = Clock::now();
      Json sp;
      sp["attempted"] = true;
      try {
        const MultiPoly gp = cert.G.primitive_part();
        const auto g3 = guess_algebraic_3var(sol.f_xt, cert.G.degree(Var::P),
                                             cert.G.degree(Var::X), cert.G.degree(Var::T),
                                             cfg.margin);
        if (g3) {
          const MultiPoly hp = g3->poly;  // already primitive
          const bool div_ok =
              gp.exact_divide(hp).has_value() || hp.exact_divide(gp).has_value();
          sp["G_3var"] = hp.to_string();
          sp["bounds"] = {g3->deg_main, g3->deg_x, g3->deg_t};
          sp["margin"] = g3->margin;
          sp["divides_eliminant"] = div_ok;
          rep << "slow path: G_3var = " << hp.to_string() << " ["
              << (div_ok ? "divides/divided by" : "INCOMPATIBLE with") << " Res_Q(F, I)]\n";
        } else {
          sp["G_3var"] = nullptr;
          sp["divides_eliminant"] = false;
          rep << "slow path: no three-variable annihilator within bounds\n";
        }
      } catch (const InsufficientOrder& e) {
        sp["G_3var"] = nullptr;
        sp["skipped"] = e.what();
        rep << "slow path: skipped (" << e.what() << ")\n";
      }
      doc["slow_path"] = sp;
      timings << "  slow_path " << ms_since(t0) << " ms\n";
    }

    if (!cert.shared_factor && cert.annihilation_ok) {
      stage = "holonomic";
      t0 = Clock::now();
      rep << "holonomic chain:\n";
      doc["holonomic"] = holonomic_section(guess->poly, sol, cfg, rep);
      timings << "  holonomic " << ms_since(t0) << " ms\n";
    }

    rep << "verdict: " << verdict_name(cert.verdict) << "\n";
    out.document = std::move(doc);
    switch (cert.verdict) {
      case Verdict::certified: out.exit_code = 0; break;
      case Verdict::refuted: out.exit_code = 1; break;
      case Verdict::inconclusive: out.exit_code = 2; break;
    }
  } catch (const std::exception& e) {
    out.exit_code = classify_exit(e);
    out.error = e.what();
    out.error_stage = stage;
    rep << "error in stage '" << stage << "': " << e.what() << "\n";
    if (out.document.is_null()) {
      Json doc;
      doc["schema"] = 1;
      doc["error"] = {{"stage", stage}, {"message", out.error}};
      out.document = doc;
    } else {
      out.document["error"] = {{"stage", stage}, {"message", out.error}};
    }
  }
  timings << "  total " << ms_since(t_start) << " ms";
  rep << "timings:\n" << timings.str() << "\n";
  out.report = rep.str();
  return out;
}

PipelineOutcome run_solve(const PipelineConfig& cfg, const std::string& equation_path) {
  PipelineOutcome out;
  std::ostringstream rep;
  std::string stage = "parse";
  try {
    const EquationFile ef = load_equation_file(equation_path);
    const MergedConfig mc = merge_config(cfg, ef, /*for_guessing=*/false);
    const FunctionalEquation eq = make_equation(ef.name, ef.equation, ef.initial);
    stage = "solve";
    const SolverResult sol = solve_cross_checked(eq, mc.order, mc.cross_order);
    rep << "== " << eq.name << " ==\n";
    rep << "f(x,1) = " << preview_sequence(sol.f_x1.coeff_strings(), 13) << "\n";
    const long shown = std::min(sol.order, 10L);
    for (long n = 0; n <= shown; ++n)
      rep << "  c" << n << "(t) = " << sol.f_xt.coeff(n).to_string("t") << "\n";
    if (shown < sol.order) rep << "  ... (through x^" << sol.order << ")\n";

    Json doc;
    doc["schema"] = 1;
    doc["equation"] = {{"name", eq.name}, {"dsl", eq.dsl}, {"F", eq.F.to_string()},
                       {"initial", eq.initial_term.to_string()}};
    Json solver;
    solver["order"] = sol.order;
    solver["method"] = method_name(sol.method);
    solver["cross_checked_order"] = sol.cross_checked_order;
    solver["f_x1"] = sol.f_x1.coeff_strings();
    solver["f_xt"] = sol.f_xt.coeff_strings();
    doc["solver"] = solver;
    out.document = std::move(doc);
    out.exit_code = 0;
  } catch (const std::exception& e) {
    out.exit_code = classify_exit(e);
    out.error = e.what();
    out.error_stage = stage;
    rep << "error in stage '" << stage << "': " << e.what() << "\n";
  }
  out.report = rep.str();
  return out;
}

PipelineOutcome run_guess_cmd(const PipelineConfig& cfg, const std::string& equation_path) {
  PipelineOutcome out;
  std::ostringstream rep;
  std::string stage = "parse";
  try {
    const EquationFile ef = load_equation_file(equation_path);
    const MergedConfig mc = merge_config(cfg, ef);
    const FunctionalEquation eq = make_equation(ef.name, ef.equation, ef.initial);
    stage = "solve";
    const SolverResult sol = solve_cross_checked(eq, mc.order, mc.cross_order);
    stage = "guess";
    const auto guess = guess_algebraic_2var(sol.f_x1, mc.max_deg_q, mc.max_deg_x, cfg.margin);
    rep << "== " << eq.name << " ==\n";
    rep << "f(x,1) = " << preview_sequence(sol.f_x1.coeff_strings(), 13) << "\n";
    Json doc;
    doc["schema"] = 1;
    doc["equation"] = {{"name", eq.name}, {"dsl", eq.dsl}, {"F", eq.F.to_string()},
                       {"initial", eq.initial_term.to_string()}};
    doc["solver"] = {{"order", sol.order}, {"f_x1", sol.f_x1.coeff_strings()}};
    if (guess) {
      rep << "guessed I(Q,x) = " << guess->poly.to_string() << "  [deg_Q " << guess->deg_main
          << ", deg_x " << guess->deg_x << ", margin " << guess->margin << "]\n";
      doc["guess"] = {{"I", guess->poly.to_string()},   {"deg_Q", guess->deg_main},
                      {"deg_x", guess->deg_x},          {"margin", guess->margin},
                      {"matched_order", guess->matched_order},
                      {"nullspace_dim", guess->nullspace_dim}};
      out.exit_code = 0;
    } else {
      rep << "no algebraic annihilator within bounds\n";
      doc["guess"] = nullptr;
      out.exit_code = 2;
    }
    out.document = std::move(doc);
  } catch (const std::exception& e) {
    out.exit_code = classify_exit(e);
    out.error = e.what();
    out.error_stage = stage;
    rep << "error in stage '" << stage << "': " << e.what() << "\n";
  }
  out.report = rep.str();
  return out;
}

PipelineOutcome run_recheck(const std::string& certificate_path) {
  PipelineOutcome out;
  std::ostringstream rep;
  try {
    std::ifstream in(certificate_path);
    if (!in) throw EquationError("cannot open certificate file: " + certificate_path);
    Json doc = Json::parse(in);
    const RecheckOutcome rc = recheck_certificate(doc);
    rep << "recheck: " << verdict_name(rc.verdict) << " (" << rc.detail << ")\n";
    switch (rc.verdict) {
      case Verdict::certified: out.exit_code = 0; break;
      case Verdict::refuted: out.exit_code = 1; break;
      case Verdict::inconclusive: out.exit_code = 2; break;
    }
  } catch (const TamperDetected& e) {
    out.exit_code = 1;
    out.error = e.what();
    rep << "recheck: TAMPER DETECTED - " << e.what() << "\n";
  } catch (const std::exception& e) {
    out.exit_code = classify_exit(e);
    out.error = e.what();
    rep << "recheck: error - " << e.what() << "\n";
  }
  out.report = rep.str();
  return out;
}

PipelineOutcome run_rec(const PipelineConfig& cfg, const std::string& coeffs_path) {
  PipelineOutcome out;
  std::ostringstream rep;
  try {
    std::ifstream in(coeffs_path);
    if (!in) throw EquationError("cannot open coefficient file: " + coeffs_path);
    std::vector<BigRational> seq;
    std::string tok;
    while (in >> tok) {
      if (!tok.empty() && tok.back() == ',') tok.pop_back();
      if (tok.empty() || tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      seq.emplace_back(tok);
    }
    if (seq.size() < 4) throw EquationError("coefficient file has fewer than 4 terms");
    rep << "sequence (" << seq.size() << " terms): ";
    std::vector<std::string> strs;
    for (const auto& v : seq) strs.push_back(v.to_string());
    rep << preview_sequence(strs, 13) << "\n";

    Json doc;
    doc["schema"] = 1;
    doc["sequence"] = strs;
    const auto rec = guess_recurrence(seq, cfg.rec_order, cfg.rec_deg, cfg.margin);
    if (!rec) {
      rep << "no recurrence within bounds (order <= " << cfg.rec_order << ", degree <= "
          << cfg.rec_deg << ")\n";
      doc["recurrence"] = nullptr;
      out.exit_code = 2;
      out.document = std::move(doc);
      out.report = rep.str();
      return out;
    }
    rep << "recurrence: " << rec->relation_string() << "\n";
    doc["recurrence"] = recurrence_json(*rec);
    if (rec->order == 1) {
      const auto cf = closed_form_from_recurrence(*rec, seq);
      if (cf) {
        rep << "closed form: " << cf->product_string << "\n";
        if (!cf->factorial_string.empty())
          rep << "closed form (factorials): a(n) = " << cf->factorial_string << " for n >= "
              << cf->n0 << "\n";
        doc["closed_form"] = {{"ratio_num", cf->ratio_num.to_string("n")},
                              {"ratio_den", cf->ratio_den.to_string("n")},
                              {"n0", cf->n0},
                              {"a_n0", cf->a_n0.to_string()},
                              {"product", cf->product_string},
                              {"factorial_form", cf->factorial_string}};
      }
    } else {
      doc["closed_form"] = nullptr;
      rep << "closed form: none (recurrence has order " << rec->order << ")\n";
    }
    out.document = std::move(doc);
    out.exit_code = 0;
  } catch (const std::exception& e) {
    out.exit_code = classify_exit(e);
    out.error = e.what();
    rep << "error: " << e.what() << "\n";
  }
  out.report = rep.str();
  return out;
}

std::vector<PipelineOutcome> run_prove_batch(const PipelineConfig& cfg,
                                             const std::vector<std::string>& paths, int jobs) {
  std::vector<PipelineOutcome> results(paths.size());
  if (jobs < 2 || paths.size() < 2) {
    for (std::size_t i = 0; i < paths.size(); ++i) results[i] = run_prove(cfg, paths[i]);
    return results;
  }
  std::vector<std::future<void>> inflight;
  std::size_t next = 0;
  while (next < paths.size() || !inflight.empty()) {
    while (next < paths.size() && static_cast<int>(inflight.size()) < jobs) {
      const std::size_t idx = next++;
      inflight.push_back(std::async(std::launch::async, [&results, &cfg, &paths, idx] {
        results[idx] = run_prove(cfg, paths[idx]);
      }));
    }
    inflight.front().wait();
    inflight.erase(inflight.begin());
  }
  return results;
}

}  // namespace catalytic
