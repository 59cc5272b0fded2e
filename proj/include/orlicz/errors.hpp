#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent outside [1, inf] (or NaN).
class InvalidExponent : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the requested function kind (e.g. psi at p = inf).
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

/// Malformed argument: bad model parameters, empty lists, non-convex input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside a special function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bisection could not find an infeasible/feasible bracket.
class NoBracket : public Error {
 public:
  NoBracket(const std::string& what, bool feasible_everywhere)
      : Error(what), feasible_everywhere_(feasible_everywhere) {}
  /// True when the lower end stayed feasible; false when the upper end
  /// never became feasible.
  bool feasible_everywhere() const noexcept { return feasible_everywhere_; }

 private:
  bool feasible_everywhere_;
};

/// Bisection ran out of iterations; carries the best bracket found.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_, hi_;
};

/// sup_search found no point where the objective exceeds -inf.
class EmptyDomain : public Error {
 public:
  using Error::Error;
};

/// tau norm requested for a model with nonzero mean.
class CenteringRequired : public Error {
 public:
  using Error::Error;
};

}  // namespace orlicz
