// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <memory>
#include <string>

#include "cotlift/jet.hpp"

namespace cotlift {

/// An exactly differentiable scalar function of the energy density t,
/// represented as an expression tree over a closed grammar: constants, t,
/// sums, products, quotients, integer powers and exp.  Every node evaluates
/// to a Jet, so derivatives up to order 4 come out exact for rational trees.
///
/// Profile strings use the infix form of the same grammar, e.g.
///   "1 + 0.5*t", "1/(1+2*t)", "exp(-t)", "(1+t)^2".
class ScalarExpr {
public:
  ScalarExpr() = default;  // empty; evaluating throws

  static ScalarExpr constant(double v);
  static ScalarExpr variable();

  /// Parse an infix profile string.  Throws ConfigError on syntax errors.
  static ScalarExpr parse(const std::string& text);

  ScalarExpr operator+(const ScalarExpr& rhs) const;
  ScalarExpr operator-(const ScalarExpr& rhs) const;
  ScalarExpr operator*(const ScalarExpr& rhs) const;
  ScalarExpr operator/(const ScalarExpr& rhs) const;
  ScalarExpr operator-() const;
  ScalarExpr pow(int e) const;
  static ScalarExpr exp(ScalarExpr arg);

  /// Value and derivatives at t.  Reciprocal nodes whose argument lies
  /// within 1e-12 of zero throw DomainError.
  Jet eval(double t) const;

  bool empty() const { return !node_; }
  std::string str() const;

  struct Node;

private:
  explicit ScalarExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluate with derivatives zeroed above `order` (order <= 4).
Jet eval_jet(const ScalarExpr& expr, double t, int order = Jet::order);

} // namespace cotlift
