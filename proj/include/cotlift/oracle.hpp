// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <Eigen/Dense>

#include "cotlift/connection.hpp"
#include "cotlift/curvature.hpp"
#include "cotlift/lift_spec.hpp"
#include "cotlift/phase_space.hpp"
#include "cotlift/tensors.hpp"

namespace cotlift {

/// The change between the coordinate basis (d/dq, d/dp) and the adapted
/// basis (delta/delta q, d/dp):  F = [[I, 0], [Gamma0, I]], columns are the
/// adapted vectors in coordinate components.
struct FrameChange {
  Eigen::MatrixXd F;
  Eigen::MatrixXd F_inv;  // [[I, 0], [-Gamma0, I]]
};

FrameChange frame_change(const PhasePoint& pt);

/// The lifted metric as a plain matrix field over the coordinates (q, p).
/// Deliberately built from nothing but the raw block definitions and the
/// frame congruence, so the finite-difference geometry derived from it is
/// independent of every adapted-frame derivative formula it arbitrates.
class CoordinateMetricField {
public:
  explicit CoordinateMetricField(LiftSpec spec) : spec_(std::move(spec)) {}

  Eigen::MatrixXd operator()(const Eigen::VectorXd& q, const Eigen::VectorXd& p) const;
  Eigen::MatrixXd operator()(const Eigen::VectorXd& u) const;  // u = (q, p)

  const LiftSpec& spec() const { return spec_; }

private:
  LiftSpec spec_;
};

/// Christoffel symbols of the 2n-dimensional metric by 4th-order finite
/// differences of the metric components.  gamma(a,b,c) = Gammahat^a_bc.
Tensor3 coordinate_christoffel(const CoordinateMetricField& field, const Eigen::VectorXd& q,
                               const Eigen::VectorXd& p);

/// Curvature R^a_bcd of the 2n-metric from finite differences of the
/// Christoffel field: R(d_c, d_d) d_b = R^a_bcd d_a.
Tensor4 coordinate_curvature(const CoordinateMetricField& field, const Eigen::VectorXd& q,
                             const Eigen::VectorXd& p);

/// Pull a coordinate-basis (1,3) tensor K^a_{b(Z) c(X) d(Y)} back to the
/// adapted frame and slice it into the twelve blocks.
CurvatureBlocks to_adapted_frame(const Tensor4& coordinate_tensor, const FrameChange& frame);

/// The six connection M-tensor blocks extracted from the coordinate
/// Christoffels (base Christoffel parts subtracted), for direct comparison
/// against the closed-form blocks.
ConnectionBlocks oracle_connection_blocks(const CoordinateMetricField& field,
                                          const Eigen::VectorXd& q, const Eigen::VectorXd& p);

/// Self-checks of the finite-difference pipeline at a point: returns the max
/// of the lowered-curvature first-pair antisymmetry residual and the first
/// Bianchi identity residual.
double oracle_self_check(const CoordinateMetricField& field, const Eigen::VectorXd& q,
                         const Eigen::VectorXd& p);

} // namespace cotlift
