// Shared helpers for the test suites: deterministic random generators for
// scalars and polynomials, and an independent Laplace-expansion determinant
// used as the resultant oracle.
#pragma once

#include <random>
#include <vector>

#include "catalytic/multipoly.hpp"
#include "catalytic/rational.hpp"

namespace testutil {

using catalytic::BigRational;
using catalytic::Exponents;
using catalytic::MultiPoly;
using catalytic::Var;

inline std::mt19937& rng() {
  static std::mt19937 gen(20140917u);
  return gen;
}

inline BigRational random_rational(long lo = -9, long hi = 9, bool allow_fraction = false) {
  std::uniform_int_distribution<long> num(lo, hi);
  if (!allow_fraction) return BigRational(num(rng()));
  std::uniform_int_distribution<long> den(1, 5);
  return BigRational(num(rng()), den(rng()));
}

// Random polynomial in the given variables with per-variable degree <= deg.
inline MultiPoly random_poly(const std::vector<Var>& vars, int deg, int terms,
                             bool allow_fraction = false) {
  MultiPoly p;
  std::uniform_int_distribution<int> d(0, deg);
  for (int k = 0; k < terms; ++k) {
    Exponents e{0, 0, 0, 0};
    for (Var v : vars) e[static_cast<int>(v)] = d(rng());
    p += MultiPoly::monomial(e, random_rational(-9, 9, allow_fraction));
  }
  return p;
}

// Cofactor (Laplace) expansion determinant; no division anywhere, so it is
// an independent check on the fraction-free elimination path.
inline MultiPoly laplace_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(BigRational(1));
  if (n == 1) return m[0][0];
  MultiPoly det;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    const MultiPoly cof = m[i][0] * laplace_det(minor);
    if (i % 2 == 0) {
      det += cof;
    } else {
      det -= cof;
    }
  }
  return det;
}

// Sylvester matrix built directly from the coefficient lists, mirroring the
// textbook definition rather than any library internals.
inline std::vector<std::vector<MultiPoly>> sylvester(const MultiPoly& p, const MultiPoly& q,
                                                     Var v) {
  const int m = p.degree(v);
  const int l = q.degree(v);
  const auto pc = p.coefficients_in(v);
  const auto qc = q.coefficients_in(v);
  const std::size_t n = static_cast<std::size_t>(m + l);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = pc[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= l; ++j) s[l + i][i + j] = qc[static_cast<std::size_t>(l - j)];
  return s;
}

}  // namespace testutil
