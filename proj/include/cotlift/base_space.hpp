// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <Eigen/Dense>

#include "cotlift/tensors.hpp"

namespace cotlift {

/// A constant-curvature space form in the conformally flat chart
///   g_ij(x) = delta_ij / (1 + (c/4)|x|^2)^2,
/// valid everywhere for c >= 0 and for |x|^2 < -4/c when c < 0.
struct SpaceForm {
  int n = 2;      // dimension, >= 2
  double c = 0.0; // constant sectional curvature
};

/// Exact metric, Christoffel and curvature data at a chart point.
struct BaseGeometry {
  int n = 0;
  Eigen::VectorXd x;
  Eigen::MatrixXd g;      // g_ij
  Eigen::MatrixXd g_inv;  // g^ij
  Tensor3 gamma;          // gamma(k,i,j)   = Gamma^k_ij
  Tensor4 dgamma;         // dgamma(l,k,i,j) = d_l Gamma^k_ij
  Tensor4 riemann;        // riemann(h,k,i,j) = R^h_kij, with
                          // R(d_i, d_j) d_k = R^h_kij d_h
};

/// Closed-form differentiation of the conformal factor.  Throws OutsideChart
/// when c < 0 and |x|^2 >= -4/c.
BaseGeometry geometry_at(const SpaceForm& space, const Eigen::VectorXd& x);

/// max_h,k,i,j |R^h_kij - c (delta^h_i g_kj - delta^h_j g_ki)|
double sectional_curvature_check(const SpaceForm& space, const Eigen::VectorXd& x);

} // namespace cotlift
