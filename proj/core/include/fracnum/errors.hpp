#pragma once

#include <stdexcept>
#include <string>

namespace fracnum {

// A special-function pole was hit exactly. Callers get a typed error, never a
// quiet NaN.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument outside an operation's documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series or quadrature failed its stopping rule (term cap, non-finite term,
// refinement disagreement).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result exceeds the double range (Gamma past ~171.6).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace fracnum
