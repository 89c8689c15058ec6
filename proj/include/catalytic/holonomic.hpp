// From a certified algebraic equation I(Q, x) = 0 to a linear ODE with
// polynomial coefficients, a P-recursive recurrence for the coefficients,
// and a closed form when the recurrence is first-order.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalytic/guess.hpp"
#include "catalytic/multipoly.hpp"
#include "catalytic/series.hpp"
#include "catalytic/unipoly.hpp"

namespace catalytic {

struct LinearODE {
  int order = 0;
  std::vector<UniPoly> q;  // q[i] multiplies the i-th derivative; polys in x

  std::string to_string() const;
};

// Differentiate in the function field Q(x)[Q]/(I): represents the
// derivatives of Q(x) in the basis 1, Q, ..., Q^(d-1) and returns the first
// linear dependence among them, cleared to polynomial coefficients.
// Throws DegenerateDerivative when dI/dQ is the zero polynomial and
// NonSimpleRoot when dI/dQ is not invertible modulo I.
LinearODE alg_to_ode(const MultiPoly& I);

// Apply the ODE to a truncated series: sum q_i(x) s^(i)(x), truncated to
// s.order() - ode.order (derivatives lose precision).
RationalSeries apply_ode(const LinearODE& ode, const RationalSeries& s);

// Translate x^j D^i acting on sum a_n x^n into shifted falling factorials;
// the result is normalized (trimmed, content-free, offset adjusted).
Recurrence ode_to_recurrence(const LinearODE& ode);

struct ClosedForm {
  UniPoly ratio_num;  // a(n+1)/a(n) = ratio_num(n)/ratio_den(n), coprime
  UniPoly ratio_den;
  long n0 = 0;
  BigRational a_n0;
  std::string product_string;
  std::string factorial_string;  // best-effort; empty when not recognized

  // Exact value by running the product; n must be >= n0.
  BigRational eval(long n) const;
};

// nullopt when the recurrence is not first-order. The coefficient list
// anchors the initial value and verifies the reconstruction exactly.
std::optional<ClosedForm> closed_form_from_recurrence(const Recurrence& rec,
                                                      const std::vector<BigRational>& a);

}  // namespace catalytic
