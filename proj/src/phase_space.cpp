// Distributed under the MIT License.
// See LICENSE.txt for details.

#include "cotlift/phase_space.hpp"

#include <cmath>

#include "cotlift/errors.hpp"
#include "cotlift/finite_diff.hpp"

namespace cotlift {

double energy_density(const BaseGeometry& base, const Eigen::VectorXd& p) {
  return 0.5 * p.dot(base.g_inv * p);
}

PhasePoint phase_point(BaseGeometry base, const Eigen::VectorXd& p) {
  PhasePoint pt;
  const int n = base.n;
  pt.p = p;
  pt.g0 = base.g_inv * p;
  pt.t = 0.5 * p.dot(pt.g0);
  pt.gamma0 = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < n; ++h) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += p(k) * base.gamma(k, i, h);
      pt.gamma0(i, h) = s;
    }
  pt.base = std::move(base);
  return pt;
}

JBlocks build_J(const PhasePoint& pt, const CoefficientBundle& cb) {
  const int n = pt.base.n;
  JBlocks jb;
  jb.J1 = cb.a1.value() * pt.base.g + cb.b1.value() * (pt.p * pt.p.transpose());
  jb.J2 = cb.a2.value() * pt.base.g_inv + cb.b2.value() * (pt.g0 * pt.g0.transpose());
  jb.J3 = cb.a3.value() * Eigen::MatrixXd::Identity(n, n) +
          cb.b3.value() * (pt.g0 * pt.p.transpose());
  jb.J4 = cb.a4.value() * Eigen::MatrixXd::Identity(n, n) +
          cb.b4.value() * (pt.g0 * pt.p.transpose());
  return jb;
}

GBlocks build_G(const PhasePoint& pt, const MetricCoefficients& mc) {
  const int n = pt.base.n;
  GBlocks gb;
  gb.G1 = mc.c1.value() * pt.base.g + mc.d1.value() * (pt.p * pt.p.transpose());
  gb.G2 = mc.c2.value() * pt.base.g_inv + mc.d2.value() * (pt.g0 * pt.g0.transpose());
  gb.G3 = mc.c3.value() * Eigen::MatrixXd::Identity(n, n) +
          mc.d3.value() * (pt.p * pt.g0.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(assemble_G(pt, gb),
                                                    Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw IndefiniteMetric("assembled lifted metric has a nonpositive eigenvalue at t=" +
                           std::to_string(pt.t));
  return gb;
}

HBlocks invert_G(const PhasePoint& pt, const MetricCoefficients& mc) {
  const int n = pt.base.n;
  HBlocks hb;
  hb.H1 = mc.e1.value() * pt.base.g_inv + mc.f1.value() * (pt.g0 * pt.g0.transpose());
  hb.H2 = mc.e2.value() * pt.base.g + mc.f2.value() * (pt.p * pt.p.transpose());
  hb.H3 = mc.e3.value() * Eigen::MatrixXd::Identity(n, n) +
          mc.f3.value() * (pt.g0 * pt.p.transpose());
  return hb;
}

Eigen::MatrixXd assemble_J(const PhasePoint& pt, const JBlocks& jb) {
  const int n = pt.base.n;
  Eigen::MatrixXd J(2 * n, 2 * n);
  // column i (horizontal): J delta_i = J4^j_i delta_j + J1_ij d^j
  // column n+i (vertical): J d^i = -J2^ij delta_j + J3^i_j d^j
  J.topLeftCorner(n, n) = jb.J4;                  // (j, i) = J4^j_i
  J.bottomLeftCorner(n, n) = jb.J1;               // (j, i) = J1_ij, symmetric
  J.topRightCorner(n, n) = -jb.J2;                // (j, i) = -J2^ij, symmetric
  J.bottomRightCorner(n, n) = jb.J3.transpose();  // (j, i) = J3^i_j
  return J;
}

Eigen::MatrixXd assemble_G(const PhasePoint& pt, const GBlocks& gb) {
  const int n = pt.base.n;
  Eigen::MatrixXd G(2 * n, 2 * n);
  G.topLeftCorner(n, n) = gb.G1;
  G.topRightCorner(n, n) = gb.G3;
  G.bottomLeftCorner(n, n) = gb.G3.transpose();
  G.bottomRightCorner(n, n) = gb.G2;
  return G;
}

Eigen::MatrixXd assemble_H(const PhasePoint& pt, const HBlocks& hb) {
  const int n = pt.base.n;
  Eigen::MatrixXd H(2 * n, 2 * n);
  H.topLeftCorner(n, n) = hb.H1;
  H.topRightCorner(n, n) = hb.H3;                 // (i, j) = H3^i_j
  H.bottomLeftCorner(n, n) = hb.H3.transpose();   // (h, k) = H3^k_h
  H.bottomRightCorner(n, n) = hb.H2;
  return H;
}

Eigen::MatrixXd fundamental_form_block(const PhasePoint& pt, const MetricCoefficients& mc) {
  const int n = pt.base.n;
  return mc.lambda.value() * Eigen::MatrixXd::Identity(n, n) +
         mc.mu.value() * (pt.g0 * pt.p.transpose());
}

double fundamental_form_residual(const PhasePoint& pt, const CoefficientBundle& cb,
                                 const MetricCoefficients& mc) {
  const int n = pt.base.n;
  const Eigen::MatrixXd Om = assemble_G(pt, build_G(pt, mc)) * assemble_J(pt, build_J(pt, cb));
  double worst = Om.topLeftCorner(n, n).cwiseAbs().maxCoeff();
  worst = std::max(worst, Om.bottomRightCorner(n, n).cwiseAbs().maxCoeff());
  // Omega(d^i, delta_j) sits in the bottom-left block of the 2-form matrix.
  worst = std::max(worst, (Om.bottomLeftCorner(n, n) - fundamental_form_block(pt, mc))
                              .cwiseAbs()
                              .maxCoeff());
  return worst;
}

namespace {

// [[I, 0], [Gamma0, I]] and its inverse; delta/delta q^i = d/dq^i + Gamma0_ih d/dp_h.
void frame_matrices(const PhasePoint& pt, Eigen::MatrixXd& F, Eigen::MatrixXd& Finv) {
  const int n = pt.base.n;
  F = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  Finv = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  F.bottomLeftCorner(n, n) = pt.gamma0;
  Finv.bottomLeftCorner(n, n) = -pt.gamma0;
}

PhasePoint point_of(const LiftSpec& spec, const Eigen::VectorXd& u) {
  const int n = spec.space.n;
  return phase_point(geometry_at(spec.space, u.head(n)), u.tail(n));
}

// The (1,1) tensor J expressed in the coordinate basis (d/dq, d/dp).
Eigen::MatrixXd J_coordinate(const LiftSpec& spec, const Eigen::VectorXd& u) {
  PhasePoint pt = point_of(spec, u);
  Eigen::MatrixXd F, Finv;
  frame_matrices(pt, F, Finv);
  return F * assemble_J(pt, build_J(pt, spec.bundle_at(pt.t))) * Finv;
}

// The 2-form Omega = G(., J.) expressed in the coordinate basis.
Eigen::MatrixXd omega_coordinate(const LiftSpec& spec, const Eigen::VectorXd& u) {
  PhasePoint pt = point_of(spec, u);
  Eigen::MatrixXd F, Finv;
  frame_matrices(pt, F, Finv);
  const CoefficientBundle cb = spec.bundle_at(pt.t);
  const Eigen::MatrixXd Om =
      assemble_G(pt, build_G(pt, spec.coeffs_at(cb))) * assemble_J(pt, build_J(pt, cb));
  return Finv.transpose() * Om * Finv;
}

} // namespace

double closedness_residual(const LiftSpec& spec, const Eigen::VectorXd& q,
                           const Eigen::VectorXd& p) {
  const int n = spec.space.n;
  Eigen::VectorXd u(2 * n);
  u << q, p;
  auto field = [&](const Eigen::VectorXd& v) { return omega_coordinate(spec, v); };
  std::vector<Eigen::MatrixXd> dOm;
  dOm.reserve(2 * n);
  for (int a = 0; a < 2 * n; ++a) dOm.push_back(fd4_partial(field, u, a));
  // (dOmega)_abc = d_a Om_bc + d_b Om_ca + d_c Om_ab
  double worst = 0.0;
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      for (int c = 0; c < 2 * n; ++c)
        worst = std::max(std::abs(dOm[a](b, c) + dOm[b](c, a) + dOm[c](a, b)), worst);
  return worst;
}

double nijenhuis_at(const LiftSpec& spec, const Eigen::VectorXd& q, const Eigen::VectorXd& p) {
  const int n = spec.space.n;
  Eigen::VectorXd u(2 * n);
  u << q, p;
  auto field = [&](const Eigen::VectorXd& v) { return J_coordinate(spec, v); };
  const Eigen::MatrixXd J0 = field(u);
  std::vector<Eigen::MatrixXd> dJ;
  dJ.reserve(2 * n);
  for (int a = 0; a < 2 * n; ++a) dJ.push_back(fd4_partial(field, u, a));
  // On coordinate fields the brackets vanish, so
  // N^d_ab = J^c_a d_c J^d_b - J^c_b d_c J^d_a + J^d_c d_b J^c_a - J^d_c d_a J^c_b.
  double worst = 0.0;
  for (int d = 0; d < 2 * n; ++d)
    for (int a = 0; a < 2 * n; ++a)
      for (int b = 0; b < 2 * n; ++b) {
        double s = 0.0;
        for (int c = 0; c < 2 * n; ++c)
          s += J0(c, a) * dJ[c](d, b) - J0(c, b) * dJ[c](d, a) + J0(d, c) * dJ[b](c, a) -
               J0(d, c) * dJ[a](c, b);
        worst = std::max(std::abs(s), worst);
      }
  return worst;
}

} // namespace cotlift
