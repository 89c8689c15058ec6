#include "catalytic/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalytic/errors.hpp"

namespace catalytic {

const char* method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::fixed_point: return "fixed_point";
    case SolveMethod::order_by_order: return "order_by_order";
    case SolveMethod::both_agree: return "both_agree";
  }
  return "?";
}

namespace {

// Convert a polynomial in {x, t} into a truncated series in x over Q[t].
PolySeries xt_poly_to_series(const MultiPoly& p, long order) {
  PolySeries s(order);
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<int>(Var::P)] != 0 || e[static_cast<int>(Var::Q)] != 0)
      throw std::logic_error("xt_poly_to_series: polynomial still contains P or Q");
    const long j = e[static_cast<int>(Var::X)];
    if (j > order) continue;
    UniPoly cur = s.coeff(j);
    cur += UniPoly::monomial(e[static_cast<int>(Var::T)], c);
    s.set_coeff(j, std::move(cur));
  }
  return s;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

PolySeries evaluate_on_series(const MultiPoly& F, const PolySeries& fP, const PolySeries& fQ) {
  const long order = std::min(fP.order(), fQ.order());
  const int dp = std::max(F.degree(Var::P), 0);
  // Horner in P; inside, Horner in Q.
  const auto by_p = F.coefficients_in(Var::P);
  PolySeries acc(order);
  for (int a = dp; a >= 0; --a) {
    const auto by_q = by_p[static_cast<std::size_t>(a)].coefficients_in(Var::Q);
    PolySeries inner(order);
    for (int b = static_cast<int>(by_q.size()) - 1; b >= 0; --b) {
      inner = inner * fQ + xt_poly_to_series(by_q[static_cast<std::size_t>(b)], order);
    }
    acc = acc * fP + inner;
  }
  return acc;
}

RationalSeries evaluate_on_rational_series(const MultiPoly& I, const RationalSeries& s) {
  const long order = s.order();
  const auto by_q = I.coefficients_in(Var::Q);
  RationalSeries acc(order);
  for (int b = static_cast<int>(by_q.size()) - 1; b >= 0; --b) {
    const MultiPoly& coef = by_q[static_cast<std::size_t>(b)];
    RationalSeries cs(order);
    for (const auto& [e, c] : coef.terms()) {
      if (e[static_cast<int>(Var::P)] != 0 || e[static_cast<int>(Var::T)] != 0)
        throw std::logic_error("evaluate_on_rational_series: polynomial not in {Q, x}");
      const long j = e[static_cast<int>(Var::X)];
      if (j <= order) cs.set_coeff(j, cs.coeff(j) + c);
    }
    acc = acc * s + cs;
  }
  return acc;
}

PolySeries evaluate_phi(const ExprTree& phi, const PolySeries& f) {
  using K = ExprTree::Kind;
  const long order = f.order();
  switch (phi.kind) {
    case K::Literal:
      return PolySeries::constant(UniPoly(phi.literal), order);
    case K::Variable:
      switch (phi.variable) {
        case Var::P: return f;
        case Var::Q: return PolySeries::lift(specialize_t1(f));
        case Var::X: return PolySeries::x_series(order);
        case Var::T: return PolySeries::constant(UniPoly::variable(), order);
      }
      throw std::logic_error("evaluate_phi: bad variable");
    case K::Sum:
      return evaluate_phi(phi.kids[0], f) + evaluate_phi(phi.kids[1], f);
    case K::Difference:
      return evaluate_phi(phi.kids[0], f) - evaluate_phi(phi.kids[1], f);
    case K::Negate:
      return PolySeries(order) - evaluate_phi(phi.kids[0], f);
    case K::Product:
      return evaluate_phi(phi.kids[0], f) * evaluate_phi(phi.kids[1], f);
    case K::Power: {
      PolySeries base = evaluate_phi(phi.kids[0], f);
      PolySeries acc = PolySeries::constant(UniPoly(BigRational(1)), order);
      for (long i = 0; i < phi.exponent; ++i) acc = acc * base;
      return acc;
    }
    case K::Quotient: {
      const PolySeries num = evaluate_phi(phi.kids[0], f);
      const PolySeries den = evaluate_phi(phi.kids[1], f);
      bool pure_t = true;
      for (long n = 1; n <= den.order(); ++n) {
        if (!den.coeff(n).is_zero()) {
          pure_t = false;
          break;
        }
      }
      if (pure_t) {
        const UniPoly& g = den.coeff(0);
        if (g.is_zero()) throw NotAUnit("division by the zero series");
        if (g.is_constant()) return num.scaled(UniPoly(g.coeff(0).inverse()));
        // Divided-difference division: every coefficient must be divisible.
        return divide_by_t_factor(num, g, 1);
      }
      return num * series_invert(den);
    }
  }
  throw std::logic_error("evaluate_phi: unreachable");
}

SolverResult solve_fixed_point(const FunctionalEquation& eq, long order) {
  if (!eq.phi)
    throw Error("solve_fixed_point: equation was not given in fixed-point form P = ...");
  const ExprTree& phi = *eq.phi;

  PolySeries f = PolySeries::constant(UniPoly(eq.initial_term), 0);
  long agreed = -1;
  SolverResult out;
  out.method = SolveMethod::fixed_point;
  out.order = order;

  long target = std::min(agreed + 2, order);
  while (true) {
    ++out.iterations;
    if (out.iterations > order + 8)
      throw NoContraction("fixed-point iteration did not converge within the iteration budget");
    // The iterate is a polynomial; extend with explicit zeros to the target
    // truncation before applying Phi.
    PolySeries fk(target);
    for (long n = 0; n <= std::min(f.order(), target); ++n) fk.set_coeff(n, f.coeff(n));
    PolySeries g = evaluate_phi(phi, fk);
    const long a = agreement_order(fk, g);
    const long gain = a - agreed;
    if (a < target && gain < 1)
      throw NoContraction("iteration failed to gain an x-order (agreement stuck at order " +
                          std::to_string(a) + ")");
    out.order_gains.push_back(gain);
    f = std::move(g);
    agreed = a;
    if (agreed >= order) break;
    // Full agreement at this truncation: confirm directly at the top order.
    target = (a == target) ? order : std::min(agreed + 2, order);
  }

  out.f_xt = std::move(f);
  out.f_x1 = specialize_t1(out.f_xt);
  return out;
}

SolverResult solve_order_by_order(const FunctionalEquation& eq, long order) {
  const MultiPoly& F = eq.F;
  const int dp = F.degree(Var::P);
  const int dq = std::max(F.degree(Var::Q), 0);
  if (dp < 1) throw Error("solve_order_by_order: F has no dependence on P");
  const BigRational& c0 = eq.initial_term;

  // Taylor family T[a][b] = d^a_P d^b_Q F / (a! b!) at P = Q = c0, kept as
  // series; W[a][b] tracks its value along the partial solution.
  std::vector<std::vector<PolySeries>> w(
      static_cast<std::size_t>(dp) + 1,
      std::vector<PolySeries>(static_cast<std::size_t>(dq) + 1, PolySeries(order)));
  {
    std::vector<std::vector<MultiPoly>> taylor(
        static_cast<std::size_t>(dp) + 1,
        std::vector<MultiPoly>(static_cast<std::size_t>(dq) + 1));
    taylor[0][0] = F;
    for (int b = 1; b <= dq; ++b)
      taylor[0][static_cast<std::size_t>(b)] =
          BigRational(1, b) * taylor[0][static_cast<std::size_t>(b - 1)].derivative(Var::Q);
    for (int a = 1; a <= dp; ++a)
      for (int b = 0; b <= dq; ++b)
        taylor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            BigRational(1, a) *
            taylor[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)].derivative(
                Var::P);
    for (int a = 0; a <= dp; ++a)
      for (int b = 0; b <= dq; ++b)
        w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = xt_poly_to_series(
            taylor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                .substitute(Var::P, c0)
                .substitute(Var::Q, c0),
            order);
  }

  if (!w[0][0].coeff(0).is_zero())
    throw InconsistentOrder(0);  // initial term does not satisfy F(c0, c0, 0, t) = 0
  const UniPoly alpha = w[1][0].coeff(0);
  const UniPoly beta = dq >= 1 ? w[0][1].coeff(0) : UniPoly();
  const long d0 = std::max(F.degree(Var::T), 1);
  const BigRational one(1);

  std::vector<UniPoly> fc{UniPoly(c0)};
  std::vector<BigRational> gammas{c0};

  for (long n = 1; n <= order; ++n) {
    if (alpha.is_zero()) throw NonUniqueOrder(n);
    const UniPoly rho = w[0][0].coeff(n);
    const auto [q_rho, r_rho] = UniPoly::divmod(-rho, alpha);
    const auto [q_beta, r_beta] = UniPoly::divmod(-beta, alpha);

    UniPoly c;
    BigRational gamma;
    if (r_beta.is_zero()) {
      if (!r_rho.is_zero()) throw InconsistentOrder(n);
      const BigRational denom = one - q_beta.eval(one);
      if (denom.is_zero()) {
        if (q_rho.eval(one).is_zero()) throw NonUniqueOrder(n);
        throw InconsistentOrder(n);
      }
      gamma = q_rho.eval(one) / denom;
      c = q_rho + gamma * q_beta;
    } else {
      // r_rho + gamma * r_beta = 0 must hold identically in t.
      int k = 0;
      while (r_beta.coeff(k).is_zero()) ++k;
      const BigRational lambda = r_rho.coeff(k) / r_beta.coeff(k);
      if (r_rho != lambda * r_beta) throw InconsistentOrder(n);
      gamma = -lambda;
      c = q_rho + gamma * q_beta;
      if (c.eval(one) != gamma) throw InconsistentOrder(n);
    }
    // Adaptive t-degree cap: start at n*d0, doubled twice before giving up.
    if (c.degree() > 4 * n * d0) throw NonUniqueOrder(n);

    // Increment the solution and refresh the Taylor family: the shift by
    // c*x^n (in P) and gamma*x^n (in Q) updates each W from strictly-higher
    // derivatives, so ascending (a+b) order reads old values only.
    std::vector<UniPoly> cpow(static_cast<std::size_t>(dp) + 1);
    cpow[0] = UniPoly(one);
    for (int k2 = 1; k2 <= dp; ++k2) cpow[static_cast<std::size_t>(k2)] = cpow[k2 - 1] * c;
    std::vector<BigRational> gpow(static_cast<std::size_t>(dq) + 1, one);
    for (int l = 1; l <= dq; ++l) gpow[static_cast<std::size_t>(l)] = gpow[l - 1] * gamma;

    for (int s = 0; s <= dp + dq; ++s) {
      for (int a = 0; a <= dp && a <= s; ++a) {
        const int b = s - a;
        if (b > dq) continue;
        auto& target = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        for (int k2 = 0; a + k2 <= dp; ++k2) {
          for (int l = 0; b + l <= dq; ++l) {
            if (k2 + l == 0) continue;
            const long shift = n * (k2 + l);
            if (shift > order) continue;
            const UniPoly scalar =
                BigRational(binom(a + k2, k2) * binom(b + l, l)) *
                (gpow[static_cast<std::size_t>(l)] * cpow[static_cast<std::size_t>(k2)]);
            target.add_scaled_shifted(
                w[static_cast<std::size_t>(a + k2)][static_cast<std::size_t>(b + l)], scalar,
                shift);
          }
        }
      }
    }
    if (!w[0][0].coeff(n).is_zero())
      throw std::logic_error("solve_order_by_order: residual did not vanish after update");

    fc.push_back(std::move(c));
    gammas.push_back(std::move(gamma));
  }

  SolverResult out;
  out.method = SolveMethod::order_by_order;
  out.order = order;
  out.f_xt = PolySeries::from_coeffs(std::move(fc));
  out.f_x1 = RationalSeries::from_coeffs(std::move(gammas));
  return out;
}

SolverResult solve_cross_checked(const FunctionalEquation& eq, long order, long cross_order) {
  SolverResult main = solve_order_by_order(eq, order);
  if (!eq.phi) return main;
  const long co = std::clamp(cross_order, 1L, order);
  SolverResult fp = solve_fixed_point(eq, co);
  for (long n = 0; n <= co; ++n) {
    if (fp.f_xt.coeff(n) != main.f_xt.coeff(n))
      throw SolverMismatch("fixed-point and order-by-order solvers disagree at x^" +
                           std::to_string(n));
  }
  main.method = SolveMethod::both_agree;
  main.iterations = fp.iterations;
  main.order_gains = std::move(fp.order_gains);
  main.cross_checked_order = co;
  return main;
}

}  // namespace catalytic
