// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <optional>

#include "cotlift/base_space.hpp"
#include "cotlift/profiles.hpp"
#include "cotlift/scalar_expr.hpp"

namespace cotlift {

/// Deliberate departures from the Kaehler conditions, used by the negative
/// controls.  Shifts are applied to the coefficient values only (not their
/// derivatives), i.e. the perturbed function is the clean one plus a
/// constant.
struct Perturbations {
  double a3_shift = 0.0;   // breaks the integrability relations
  double b1_shift = 0.0;   // breaks the integrability relations
  double lambda_scale = 1.0;
  bool mu_zero = false;    // force mu = 0 instead of mu = lambda'

  bool any() const {
    return a3_shift != 0.0 || b1_shift != 0.0 || lambda_scale != 1.0 || mu_zero;
  }
};

/// Everything that defines one lifted structure (G, J) on T*M as a *field*:
/// the base space form, the free profiles a1, a3, and the source of lambda
/// (an explicit profile, or the constant-holomorphic-curvature formula when
/// only k is given).  Evaluating at an energy density yields the coefficient
/// jets; evaluation is what the finite-difference checks move around.
struct LiftSpec {
  SpaceForm space;
  ScalarExpr a1;
  ScalarExpr a3;
  std::optional<ScalarExpr> lambda;  // generic profile; may coexist with k in negative controls
  std::optional<double> k;           // target constant holomorphic sectional curvature
  Perturbations perturb;

  CoefficientBundle bundle_at(double t) const {
    CoefficientBundle cb = complex_coefficients(a1, a3, space.c, t);
    if (perturb.a3_shift != 0.0) {
      cb.a3.d[0] += perturb.a3_shift;
      cb.a4 = -cb.a3;
    }
    if (perturb.b1_shift != 0.0) cb.b1.d[0] += perturb.b1_shift;
    return cb;
  }

  Jet lambda_jet(const CoefficientBundle& cb) const {
    Jet lam;
    if (lambda)
      lam = lambda->eval(cb.t);
    else if (k)
      lam = lambda_constant_hsc(cb, *k);
    else
      throw ConfigError("lift spec provides neither a lambda profile nor k");
    if (perturb.lambda_scale != 1.0) lam = lam * perturb.lambda_scale;
    return lam;
  }

  MetricCoefficients coeffs_at(const CoefficientBundle& cb) const {
    const Jet lam = lambda_jet(cb);
    if (perturb.mu_zero) return metric_coefficients(cb, lam, Jet(0.0));
    return metric_coefficients(cb, lam);
  }

  MetricCoefficients coeffs_at(double t) const { return coeffs_at(bundle_at(t)); }
};

} // namespace cotlift
