#ifndef WITTSIG_ERRORS_HPP
#define WITTSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wittsig {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two operands live in different cyclotomic fields and neither is rational.
struct ConductorMismatchError : Error {
  ConductorMismatchError(long m_lhs, long m_rhs)
      : Error("conductor mismatch: " + std::to_string(m_lhs) + " vs " +
              std::to_string(m_rhs) + "; lift both operands to a common conductor first") {}
};

struct DivideByZeroError : Error {
  explicit DivideByZeroError(const std::string& what_arg) : Error(what_arg) {}
};

// Evaluation of a rational function at a zero of its denominator.
struct PoleError : Error {
  explicit PoleError(const std::string& what_arg) : Error(what_arg) {}
};

// A form (or its evaluation at a point) is singular where nonsingularity is required.
struct SingularFormError : Error {
  explicit SingularFormError(const std::string& what_arg) : Error(what_arg) {}
};

// Interval refinement or subdivision exceeded the configured budget.
struct RefinementBudgetError : Error {
  explicit RefinementBudgetError(const std::string& what_arg) : Error(what_arg) {}
};

// An interval operation cannot be decided at the current width (e.g. division
// by an interval containing zero). The caller should refine its inputs.
struct IndeterminateIntervalError : Error {
  explicit IndeterminateIntervalError(const std::string& what_arg) : Error(what_arg) {}
};

// Input data violates a schema or structural invariant.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what_arg) : Error(what_arg) {}
};

// p(t) outside the supported family, or a point that is not a root of p.
struct UnsupportedPolynomialError : Error {
  explicit UnsupportedPolynomialError(const std::string& what_arg) : Error(what_arg) {}
};

// An internal mathematical consistency check failed (indicates a bug upstream).
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace wittsig

#endif
