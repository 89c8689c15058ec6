// Error taxonomy shared across the engine. Expected mathematical outcomes
// (a guess not found, a non-first-order recurrence) are reported through
// optionals; these exceptions cover contract violations and failed runs.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catalytic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- frontend ----
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};
struct UnknownSymbol : SyntaxError {
  UnknownSymbol(const std::string& name, std::size_t pos)
      : SyntaxError("unknown symbol '" + name + "'", pos), symbol(name) {}
  std::string symbol;
};
struct EquationError : Error {
  using Error::Error;
};
struct NonPolynomialDenominator : EquationError {
  using EquationError::EquationError;
};

// ---- exact algebra ----
struct ZeroInput : Error {
  using Error::Error;
};
struct DegreeOverflow : Error {
  using Error::Error;
};

// ---- series ----
struct NotAUnit : Error {
  using Error::Error;
};
struct DividedDifferenceFailure : Error {
  DividedDifferenceFailure(std::size_t x_order)
      : Error("coefficient of x^" + std::to_string(x_order) +
              " is not divisible by the t-factor"),
        order(x_order) {}
  std::size_t order;
};

// ---- solver ----
struct NoContraction : Error {
  using Error::Error;
};
struct NonUniqueOrder : Error {
  NonUniqueOrder(long n)
      : Error("series coefficient at order " + std::to_string(n) +
              " is not uniquely determined"),
        order(n) {}
  long order;
};
struct InconsistentOrder : Error {
  InconsistentOrder(long n)
      : Error("no series coefficient satisfies the equation at order " + std::to_string(n)),
        order(n) {}
  long order;
};
struct SolverMismatch : Error {
  using Error::Error;
};

// ---- guessing ----
struct InsufficientOrder : Error {
  using Error::Error;
};

// ---- elimination / certification ----
struct SharedFactor : Error {
  using Error::Error;
};
struct TamperDetected : Error {
  using Error::Error;
};

// ---- holonomic ----
struct DegenerateDerivative : Error {
  using Error::Error;
};
struct NonSimpleRoot : Error {
  using Error::Error;
};

}  // namespace catalytic
