// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <Eigen/Dense>

#include "cotlift/base_space.hpp"
#include "cotlift/lift_spec.hpp"
#include "cotlift/profiles.hpp"

namespace cotlift {

/// A point of T*M with the cached base data every lifted structure needs:
/// the energy density t = (1/2) g^ik p_i p_k, the raised covector
/// g0^i = g^ih p_h, and Gamma0_ih = p_k Gamma^k_ih.
struct PhasePoint {
  BaseGeometry base;
  Eigen::VectorXd p;
  double t = 0.0;
  Eigen::VectorXd g0;
  Eigen::MatrixXd gamma0;
};

double energy_density(const BaseGeometry& base, const Eigen::VectorXd& p);

PhasePoint phase_point(BaseGeometry base, const Eigen::VectorXd& p);

/// Adapted-frame blocks of the almost complex structure:
///   J delta_i = J1_ij d^j + J4^j_i delta_j,
///   J d^i     = J3^i_j d^j - J2^ij delta_j,
/// J1(i,j) = a1 g_ij + b1 p_i p_j          (symmetric)
/// J2(i,j) = a2 g^ij + b2 g0^i g0^j        (symmetric)
/// J3(i,j) = J3^i_j = a3 d^i_j + b3 g0^i p_j
/// J4(j,i) = J4^j_i = a4 d^j_i + b4 g0^j p_i
struct JBlocks {
  Eigen::MatrixXd J1, J2, J3, J4;
};

/// Adapted-frame blocks of the lifted metric:
/// G1(i,j) = c1 g_ij + d1 p_i p_j
/// G2(i,j) = c2 g^ij + d2 g0^i g0^j
/// G3(i,j) = G(delta_i, d^j) = c3 d_i^j + d3 p_i g0^j
struct GBlocks {
  Eigen::MatrixXd G1, G2, G3;
};

/// Blocks of the inverse metric, built from the e/f coefficient functions:
/// H1(i,j) = e1 g^ij + f1 g0^i g0^j
/// H2(i,j) = e2 g_ij + f2 p_i p_j
/// H3(k,l) = H3^k_l = e3 d^k_l + f3 g0^k p_l
struct HBlocks {
  Eigen::MatrixXd H1, H2, H3;
};

JBlocks build_J(const PhasePoint& pt, const CoefficientBundle& cb);
GBlocks build_G(const PhasePoint& pt, const MetricCoefficients& mc);
HBlocks invert_G(const PhasePoint& pt, const MetricCoefficients& mc);

// 2n x 2n matrices in the adapted basis ordered
// (delta/delta q^1 .. delta/delta q^n, d/dp_1 .. d/dp_n).
Eigen::MatrixXd assemble_J(const PhasePoint& pt, const JBlocks& jb);
Eigen::MatrixXd assemble_G(const PhasePoint& pt, const GBlocks& gb);
Eigen::MatrixXd assemble_H(const PhasePoint& pt, const HBlocks& hb);

/// The nonzero block of the fundamental 2-form in the adapted frame:
/// Omega(d^i, delta_j) = lambda d^i_j + mu g0^i p_j.
Eigen::MatrixXd fundamental_form_block(const PhasePoint& pt, const MetricCoefficients& mc);

/// Residual of the closed-form Omega block against G(X, JY) assembled from
/// the G and J blocks (should vanish identically).
double fundamental_form_residual(const PhasePoint& pt, const CoefficientBundle& cb,
                                 const MetricCoefficients& mc);

/// Max component of the numerically computed exterior derivative d(Omega) in
/// coordinates; vanishes iff mu = lambda'.
double closedness_residual(const LiftSpec& spec, const Eigen::VectorXd& q,
                           const Eigen::VectorXd& p);

/// Max component of the Nijenhuis tensor of J, computed in coordinates by
/// finite differences; vanishes iff J is integrable.
double nijenhuis_at(const LiftSpec& spec, const Eigen::VectorXd& q, const Eigen::VectorXd& p);

} // namespace cotlift
