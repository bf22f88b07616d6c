// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <cmath>

#include "cotlift/errors.hpp"
#include "cotlift/jet.hpp"
#include "cotlift/scalar_expr.hpp"

namespace cotlift {

/// Jets of the almost-complex-structure coefficients at a fixed energy
/// density t, on a base of constant sectional curvature c.  a2 and the b's
/// are derived quantities:
///   a2 = (1 + a3^2)/a1
///   b1 = (2c^2 t a2^2 + 2ct a1 a2' + a1 a1' - c + 3c a3^2) / D
///   b2 = (2t a3'^2 - 2t a1' a2' + c a2^2 + 2ct a2 a2' + a1 a2') / D
///   b3 = (a1 a3' + 2c a2 a3 + 4ct a2' a3 - 2ct a2 a3') / D
/// with D = a1 - 2t a1' - 2ct a2 - 4ct^2 a2', and a4 = -a3, b4 = -b3.
struct CoefficientBundle {
  Jet a1, a2, a3, a4;
  Jet b1, b2, b3, b4;
  double c = 0.0;
  double t = 0.0;
};

/// Jets of the metric-side coefficients: c_i = lambda a_i,
/// d_i = mu a_i + (lambda + 2t mu) b_i, the inverse-block functions e_i, f_i,
/// and the proportionality pair (lambda, mu).
struct MetricCoefficients {
  Jet c1, c2, c3;
  Jet d1, d2, d3;
  Jet e1, e2, e3;
  Jet f1, f2, f3;
  Jet lambda, mu;
  double t = 0.0;
};

inline CoefficientBundle complex_coefficients(const ScalarExpr& a1_expr,
                                              const ScalarExpr& a3_expr,
                                              double c, double t) {
  CoefficientBundle cb;
  cb.c = c;
  cb.t = t;
  cb.a1 = a1_expr.eval(t);
  cb.a3 = a3_expr.eval(t);
  if (cb.a1.value() <= 0.0)
    throw NonpositiveA1("a1(t) must be positive, got " + std::to_string(cb.a1.value()) +
                        " at t=" + std::to_string(t));
  cb.a2 = (1.0 + cb.a3 * cb.a3) / cb.a1;
  cb.a4 = -cb.a3;

  const Jet T = Jet::variable(t);
  const Jet a1p = derivative(cb.a1);
  const Jet a2p = derivative(cb.a2);
  const Jet a3p = derivative(cb.a3);

  const Jet D = cb.a1 - 2.0 * T * a1p - 2.0 * c * T * cb.a2 - 4.0 * c * (T * T) * a2p;
  if (std::abs(D.value()) <= 1e-10)
    throw DegenerateDenominator("integrability denominator vanished at t=" + std::to_string(t));

  cb.b1 = (2.0 * c * c * T * cb.a2 * cb.a2 + 2.0 * c * T * cb.a1 * a2p + cb.a1 * a1p -
           Jet(c) + 3.0 * c * cb.a3 * cb.a3) / D;
  cb.b2 = (2.0 * T * a3p * a3p - 2.0 * T * a1p * a2p + c * cb.a2 * cb.a2 +
           2.0 * c * T * cb.a2 * a2p + cb.a1 * a2p) / D;
  cb.b3 = (cb.a1 * a3p + 2.0 * c * cb.a2 * cb.a3 + 4.0 * c * T * a2p * cb.a3 -
           2.0 * c * T * cb.a2 * a3p) / D;
  cb.b4 = -cb.b3;

  // a1 + 2t b1 > 0 and a2 + 2t b2 > 0 bound the validity interval in t just
  // like D does; failing them means the requested t left the domain.
  if (cb.a1.value() + 2.0 * t * cb.b1.value() <= 0.0 ||
      cb.a2.value() + 2.0 * t * cb.b2.value() <= 0.0)
    throw DegenerateDenominator("a_i + 2t b_i became nonpositive at t=" + std::to_string(t));
  return cb;
}

/// Core form taking lambda and mu as explicit jets.  Normal use sets
/// mu = derivative(lambda) (the almost-Kaehler condition); the dOmega
/// negative control passes a zero mu instead.
inline MetricCoefficients metric_coefficients(const CoefficientBundle& cb,
                                              const Jet& lambda, const Jet& mu) {
  const double t = cb.t;
  if (lambda.value() <= 0.0)
    throw NonpositiveLambda("lambda(t) must be positive, got " + std::to_string(lambda.value()));
  if (lambda.value() + 2.0 * t * mu.value() <= 0.0)
    throw NonpositiveLambda("lambda + 2t mu must be positive, got " +
                            std::to_string(lambda.value() + 2.0 * t * mu.value()));

  MetricCoefficients mc;
  mc.t = t;
  mc.lambda = lambda;
  mc.mu = mu;

  const Jet T = Jet::variable(t);
  const Jet lam2tmu = lambda + 2.0 * T * mu;
  mc.c1 = lambda * cb.a1;
  mc.c2 = lambda * cb.a2;
  mc.c3 = lambda * cb.a3;
  // d_i from (c_i + 2t d_i) = (lambda + 2t mu)(a_i + 2t b_i), rearranged into
  // the form that stays regular at t = 0.
  mc.d1 = mu * cb.a1 + lam2tmu * cb.b1;
  mc.d2 = mu * cb.a2 + lam2tmu * cb.b2;
  mc.d3 = mu * cb.a3 + lam2tmu * cb.b3;

  const double c1t = mc.c1.value() + 2.0 * t * mc.d1.value();
  const double c2t = mc.c2.value() + 2.0 * t * mc.d2.value();
  const double c3t = mc.c3.value() + 2.0 * t * mc.d3.value();
  if (c1t <= 0.0 || c2t <= 0.0 || c1t * c2t - c3t * c3t <= 0.0)
    throw IndefiniteMetric("positive definiteness failed at t=" + std::to_string(t));

  const Jet Delta = mc.c1 * mc.c2 - mc.c3 * mc.c3;
  mc.e1 = mc.c2 / Delta;
  mc.e2 = mc.c1 / Delta;
  mc.e3 = -mc.c3 / Delta;

  const Jet C1 = mc.c1 + 2.0 * T * mc.d1;
  const Jet C2 = mc.c2 + 2.0 * T * mc.d2;
  const Jet C3 = mc.c3 + 2.0 * T * mc.d3;
  const Jet DeltaT = C1 * C2 - C3 * C3;
  const Jet W = (mc.d3 * mc.e1 + mc.d2 * mc.e3) * C1 - (mc.d1 * mc.e1 + mc.d3 * mc.e3) * C3;
  mc.f1 = -(mc.c2 * mc.d1 * mc.e1 - mc.c3 * mc.d3 * mc.e1 - mc.c3 * mc.d2 * mc.e3 +
            mc.c2 * mc.d3 * mc.e3 + 2.0 * T * mc.d1 * mc.d2 * mc.e1 -
            2.0 * T * mc.d3 * mc.d3 * mc.e1) / DeltaT;
  mc.f2 = C3 * W / (C2 * DeltaT) - (mc.d2 * mc.e2 + mc.d3 * mc.e3) / C2;
  mc.f3 = -W / DeltaT;
  return mc;
}

inline MetricCoefficients metric_coefficients(const CoefficientBundle& cb, const Jet& lambda) {
  return metric_coefficients(cb, lambda, derivative(lambda));
}

inline MetricCoefficients metric_coefficients(const CoefficientBundle& cb,
                                              const ScalarExpr& lambda_expr, double t) {
  return metric_coefficients(cb, lambda_expr.eval(t));
}

/// The proportionality factor forced by constant holomorphic sectional
/// curvature k:
///   lambda = 4 a1 c / (k (a1^2 + 2ct + 2 a3^2 c t)).
inline Jet lambda_constant_hsc(const CoefficientBundle& cb, double k) {
  if (cb.c == 0.0)
    throw ZeroCurvature("flat base: the holomorphic-curvature formula gives lambda = 0");
  if (k == 0.0)
    throw ZeroHolomorphicCurvature("holomorphic sectional curvature k must be nonzero");
  const Jet T = Jet::variable(cb.t);
  const Jet lam =
      4.0 * cb.a1 * cb.c / (k * (cb.a1 * cb.a1 + 2.0 * cb.c * T + 2.0 * cb.a3 * cb.a3 * cb.c * T));
  if (lam.value() <= 0.0)
    throw NonpositiveLambda("constant-hsc lambda must be positive, got " +
                            std::to_string(lam.value()));
  return lam;
}

inline Jet lambda_constant_hsc(const ScalarExpr& a1_expr, const ScalarExpr& a3_expr,
                               double c, double k, double t) {
  return lambda_constant_hsc(complex_coefficients(a1_expr, a3_expr, c, t), k);
}

/// The first-order condition that pins lambda' before lambda itself is
/// solved for:
///   lambda' = -lambda (a1'(a1^2 - 2ct - 2a3^2 ct) + 2 a1 c (1 + a3^2 + 2 a3 a3' t))
///             / (a1 (a1^2 + 2ct + 2 a3^2 ct)).
/// Used as an independent consistency check against derivative(lambda).
inline double lambda_prime_consistency(const CoefficientBundle& cb, double lambda_value) {
  const double t = cb.t, c = cb.c;
  const double a1 = cb.a1.value(), a3 = cb.a3.value();
  const double a1p = cb.a1.deriv(1), a3p = cb.a3.deriv(1);
  const double num = a1p * (a1 * a1 - 2.0 * c * t - 2.0 * a3 * a3 * c * t) +
                     2.0 * a1 * c * (1.0 + a3 * a3 + 2.0 * a3 * a3p * t);
  const double den = a1 * (a1 * a1 + 2.0 * c * t + 2.0 * a3 * a3 * c * t);
  return -lambda_value * num / den;
}

} // namespace cotlift
