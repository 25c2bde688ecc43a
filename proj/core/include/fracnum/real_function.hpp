#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace fracnum {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Evaluable scalar function of one real variable, optionally carrying analytic
// derivatives (orders 1..n). Evaluation must be reentrant; instances are
// freely shared across threads.
class RealFunction {
 public:
  using Fn = std::function<double(double)>;

  explicit RealFunction(Fn eval) : eval_(std::move(eval)) {}
  RealFunction(Fn eval, std::vector<Fn> derivatives)
      : eval_(std::move(eval)), derivatives_(std::move(derivatives)) {}
  RealFunction(Fn eval, std::vector<Fn> derivatives, Interval domain)
      : eval_(std::move(eval)),
        derivatives_(std::move(derivatives)),
        domain_(domain) {}

  double operator()(double x) const;

  // k-th derivative at x. Uses the supplied analytic derivative when present;
  // otherwise a central difference with the given step (accuracy degrades
  // with the order, prefer analytic derivatives).
  double derivative(int order, double x, double fd_step) const;

  bool has_analytic_derivative(int order) const {
    return order >= 1 && order <= static_cast<int>(derivatives_.size());
  }

  const Interval& domain() const { return domain_; }

 private:
  double finite_difference(int order, double x, double h) const;

  Fn eval_;
  std::vector<Fn> derivatives_;
  Interval domain_;
};

}  // namespace fracnum
