// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <array>
#include <string>

#include "cotlift/connection.hpp"
#include "cotlift/lift_spec.hpp"
#include "cotlift/phase_space.hpp"
#include "cotlift/tensors.hpp"

namespace cotlift {

/// The twelve adapted-frame component blocks of a curvature-type tensor
/// K(X,Y)Z on T*M, with
///   K(delta_i, delta_j) delta_k = QQQQ_ijk^h delta_h + QQQP_ijkh d^h
///   K(delta_i, delta_j) d^k     = QQPQ_ij^kh delta_h + QQPP_ij^k_h d^h
///   K(d^i, d^j) delta_k         = PPQQ^ij_k^h delta_h + PPQP^ij_kh d^h
///   K(d^i, d^j) d^k             = PPPQ^ijkh delta_h + PPPP^ijk_h d^h
///   K(d^i, delta_j) delta_k     = PQQQ^i_jk^h delta_h + PQQP^i_jkh d^h
///   K(d^i, delta_j) d^k         = PQPQ^i_j^kh delta_h + PQPP^i_j^k_h d^h
/// Every array is stored with index order (i, j, k, h).
struct CurvatureBlocks {
  Tensor4 QQQQ, QQQP, QQPQ, QQPP;
  Tensor4 PPQQ, PPQP, PPPQ, PPPP;
  Tensor4 PQQQ, PQQP, PQPQ, PQPP;

  static constexpr int count = 12;
  static const std::array<std::string, count>& names();
  const Tensor4& block(int idx) const;
  Tensor4& block(int idx);
};

double max_abs(const CurvatureBlocks& a);
double max_abs_difference(const CurvatureBlocks& a, const CurvatureBlocks& b);

/// Curvature of the lifted metric from the connection blocks and their
/// closed-form derivatives.
CurvatureBlocks curvature_blocks(const PhasePoint& pt, const ConnectionData& cd);
CurvatureBlocks curvature_blocks(const PhasePoint& pt, const MetricCoefficients& mc);

/// The model tensor of constant holomorphic sectional curvature k,
///   K0(X,Y)Z = (k/4)[G(Y,Z)X - G(X,Z)Y + G(JY,Z)JX - G(JX,Z)JY + 2G(X,JY)JZ],
/// from the displayed per-block formulas.
CurvatureBlocks model_curvature_blocks(const PhasePoint& pt, const CoefficientBundle& cb,
                                       const MetricCoefficients& mc, double k);

/// The same tensor assembled multilinearly on the 2n-dimensional adapted
/// frame; an independent route used to cross-check the per-block formulas.
CurvatureBlocks model_curvature_direct(const PhasePoint& pt, const CoefficientBundle& cb,
                                       const MetricCoefficients& mc, double k);

/// Slice a full adapted-frame (1,3) array K[alpha][beta(Z)][gamma(X)][delta(Y)]
/// of dimension 2n into the twelve blocks.
CurvatureBlocks split_adapted_curvature(const Tensor4& K_adapted, int n);

/// max |K - K0| over all twelve blocks at one phase-space point; requires
/// spec.k.  This is the pointwise main-theorem residual.
double curvature_difference(const LiftSpec& spec, const Eigen::VectorXd& q,
                            const Eigen::VectorXd& p);

} // namespace cotlift
