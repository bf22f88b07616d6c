// Distributed under the MIT License.
// See LICENSE.txt for details.

#include "cotlift/curvature.hpp"

#include <cmath>

#include "cotlift/errors.hpp"

namespace cotlift {

const std::array<std::string, CurvatureBlocks::count>& CurvatureBlocks::names() {
  static const std::array<std::string, count> n = {
      "QQQQ", "QQQP", "QQPQ", "QQPP", "PPQQ", "PPQP",
      "PPPQ", "PPPP", "PQQQ", "PQQP", "PQPQ", "PQPP"};
  return n;
}

const Tensor4& CurvatureBlocks::block(int idx) const {
  switch (idx) {
    case 0: return QQQQ; case 1: return QQQP; case 2: return QQPQ; case 3: return QQPP;
    case 4: return PPQQ; case 5: return PPQP; case 6: return PPPQ; case 7: return PPPP;
    case 8: return PQQQ; case 9: return PQQP; case 10: return PQPQ; default: return PQPP;
  }
}

Tensor4& CurvatureBlocks::block(int idx) {
  return const_cast<Tensor4&>(static_cast<const CurvatureBlocks*>(this)->block(idx));
}

double max_abs(const CurvatureBlocks& a) {
  double m = 0.0;
  for (int b = 0; b < CurvatureBlocks::count; ++b) m = std::max(m, a.block(b).max_abs());
  return m;
}

double max_abs_difference(const CurvatureBlocks& a, const CurvatureBlocks& b) {
  double m = 0.0;
  for (int x = 0; x < CurvatureBlocks::count; ++x)
    m = std::max(m, (a.block(x) - b.block(x)).max_abs());
  return m;
}

CurvatureBlocks curvature_blocks(const PhasePoint& pt, const ConnectionData& cd) {
  const int n = pt.base.n;
  const Tensor3& Q = cd.blocks.Q;
  const Tensor3& Qt = cd.blocks.Qt;
  const Tensor3& P = cd.blocks.P;
  const Tensor3& Pt = cd.blocks.Pt;
  const Tensor3& S = cd.blocks.S;
  const Tensor3& St = cd.blocks.St;
  const Tensor4& dQ = cd.derivs.dQ;
  const Tensor4& dQt = cd.derivs.dQt;
  const Tensor4& dP = cd.derivs.dP;
  const Tensor4& dPt = cd.derivs.dPt;
  const Tensor4& dS = cd.derivs.dS;
  const Tensor4& dSt = cd.derivs.dSt;
  const Tensor4& R = pt.base.riemann;
  Tensor3 R0(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int h = 0; h < n; ++h) s += pt.p(h) * R(h, k, i, j);
        R0(k, i, j) = s;
      }

  CurvatureBlocks K;
  for (int b = 0; b < CurvatureBlocks::count; ++b) K.block(b) = Tensor4(n);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h) {
          double qqqq = 0, qqqp = 0, qqpq = 0, qqpp = 0;
          double ppqq = 0, ppqp = 0, pppq = 0, pppp = 0;
          double pqqq = 0, pqqp = 0, pqpq = 0, pqpp = 0;
          for (int l = 0; l < n; ++l) {
            qqqq += St(j, k, l) * St(i, l, h) + P(i, l, h) * S(j, k, l) -
                    St(j, l, h) * St(i, k, l) - P(j, l, h) * S(i, k, l) -
                    R0(l, i, j) * P(k, l, h);
            qqqp += St(j, k, l) * S(i, l, h) + Pt(i, l, h) * S(j, k, l) -
                    St(i, k, l) * S(j, l, h) - Pt(j, l, h) * S(i, k, l) -
                    Pt(k, l, h) * R0(l, i, j);
            qqpq += Pt(j, k, l) * P(i, l, h) + P(j, k, l) * St(i, l, h) -
                    Pt(i, k, l) * P(j, l, h) - P(i, k, l) * St(j, l, h) -
                    R0(l, i, j) * Qt(l, k, h);
            qqpp += Pt(j, k, l) * Pt(i, l, h) + P(j, k, l) * S(i, l, h) -
                    Pt(i, k, l) * Pt(j, l, h) - P(i, k, l) * S(j, l, h) -
                    R0(l, i, j) * Q(l, k, h);
            ppqq += Pt(k, j, l) * Qt(i, l, h) + P(k, j, l) * P(l, i, h) -
                    Pt(k, i, l) * Qt(j, l, h) - P(k, i, l) * P(l, j, h);
            ppqp += Pt(k, j, l) * Q(i, l, h) + P(k, j, l) * Pt(l, i, h) -
                    Pt(k, i, l) * Q(j, l, h) - P(k, i, l) * Pt(l, j, h);
            pppq += Q(j, k, l) * Qt(i, l, h) + Qt(j, k, l) * P(l, i, h) -
                    Q(i, k, l) * Qt(j, l, h) - Qt(i, k, l) * P(l, j, h);
            pppp += Q(j, k, l) * Q(i, l, h) + Qt(j, k, l) * Pt(l, i, h) -
                    Q(i, k, l) * Q(j, l, h) - Qt(i, k, l) * Pt(l, j, h);
            pqqq += S(j, k, l) * Qt(i, l, h) + St(j, k, l) * P(l, i, h) -
                    Pt(k, i, l) * P(j, l, h) - P(k, i, l) * St(j, l, h);
            pqqp += S(j, k, l) * Q(i, l, h) + St(j, k, l) * Pt(l, i, h) -
                    Pt(k, i, l) * Pt(j, l, h) - P(k, i, l) * S(j, l, h);
            pqpq += Pt(j, k, l) * Qt(i, l, h) + P(j, k, l) * P(l, i, h) -
                    Q(i, k, l) * P(j, l, h) - Qt(i, k, l) * St(j, l, h);
            pqpp += Pt(j, k, l) * Q(i, l, h) + P(j, k, l) * Pt(l, i, h) -
                    Q(i, k, l) * Pt(j, l, h) - Qt(i, k, l) * S(j, l, h);
          }
          K.QQQQ(i, j, k, h) = qqqq + R(h, k, i, j);
          K.QQQP(i, j, k, h) = qqqp;
          K.QQPQ(i, j, k, h) = qqpq;
          K.QQPP(i, j, k, h) = qqpp - R(k, h, i, j);
          K.PPQQ(i, j, k, h) = ppqq + dP(i, k, j, h) - dP(j, k, i, h);
          K.PPQP(i, j, k, h) = ppqp + dPt(i, k, j, h) - dPt(j, k, i, h);
          K.PPPQ(i, j, k, h) = pppq + dQt(i, j, k, h) - dQt(j, i, k, h);
          K.PPPP(i, j, k, h) = pppp + dQ(i, j, k, h) - dQ(j, i, k, h);
          K.PQQQ(i, j, k, h) = pqqq + dSt(i, j, k, h);
          K.PQQP(i, j, k, h) = pqqp + dS(i, j, k, h);
          K.PQPQ(i, j, k, h) = pqpq + dP(i, j, k, h);
          K.PQPP(i, j, k, h) = pqpp + dPt(i, j, k, h);
        }
  return K;
}

CurvatureBlocks curvature_blocks(const PhasePoint& pt, const MetricCoefficients& mc) {
  return curvature_blocks(pt, connection_data(pt, mc));
}

CurvatureBlocks model_curvature_blocks(const PhasePoint& pt, const CoefficientBundle& cb,
                                       const MetricCoefficients& mc, double k) {
  const int n = pt.base.n;
  const JBlocks jb = build_J(pt, cb);
  const GBlocks gb = build_G(pt, mc);
  const Eigen::MatrixXd& J1 = jb.J1;
  const Eigen::MatrixXd& J2 = jb.J2;
  const Eigen::MatrixXd& J3 = jb.J3;
  const Eigen::MatrixXd& G1 = gb.G1;
  const Eigen::MatrixXd& G2 = gb.G2;
  const Eigen::MatrixXd& G3 = gb.G3;              // G3(i,j) = G3_i^j
  const Eigen::MatrixXd G3u = gb.G3.transpose();  // G3u(i,j) = G3^i_j

  // The four pairings of the frame with its J-image (a4 = -a3, b4 = -b3 is
  // already folded in, so J delta has -J3 on the horizontal part):
  //   M1_jk = G(J delta_j, delta_k),  M2_jk = G(J delta_j, d^k),
  //   M3_jk = G(J d^j, delta_k),      M5_jk = G(J d^j, d^k).
  const Eigen::MatrixXd M1 = J1 * G3u - J3.transpose() * G1;
  const Eigen::MatrixXd M2 = J1 * G2 - J3.transpose() * G3;
  const Eigen::MatrixXd M3 = J3 * G3u - J2 * G1;
  const Eigen::MatrixXd M5 = J3 * G2 - J2 * G3;

  const double q = k / 4.0;
  auto del = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  CurvatureBlocks K;
  for (int b = 0; b < CurvatureBlocks::count; ++b) K.block(b) = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk)
        for (int h = 0; h < n; ++h) {
          K.QQQQ(i, j, kk, h) = q * (G1(j, kk) * del(i, h) - G1(i, kk) * del(j, h) -
                                     J3(h, i) * M1(j, kk) + J3(h, j) * M1(i, kk) -
                                     2.0 * J3(h, kk) * M1(j, i));
          K.QQQP(i, j, kk, h) = q * (J1(i, h) * M1(j, kk) - J1(j, h) * M1(i, kk) +
                                     2.0 * J1(kk, h) * M1(j, i));
          K.QQPQ(i, j, kk, h) = q * (G3u(kk, j) * del(i, h) - G3u(kk, i) * del(j, h) -
                                     J3(h, i) * M2(j, kk) + J3(h, j) * M2(i, kk) -
                                     2.0 * J2(kk, h) * M1(j, i));
          K.QQPP(i, j, kk, h) = q * (J1(i, h) * M2(j, kk) - J1(j, h) * M2(i, kk) +
                                     2.0 * J3(kk, h) * M1(j, i));
          K.PPQQ(i, j, kk, h) = q * (-J2(i, h) * M3(j, kk) + J2(j, h) * M3(i, kk) -
                                     2.0 * J3(h, kk) * M5(j, i));
          K.PPQP(i, j, kk, h) = q * (G3u(j, kk) * del(i, h) - G3u(i, kk) * del(j, h) +
                                     J3(i, h) * M3(j, kk) - J3(j, h) * M3(i, kk) +
                                     2.0 * J1(kk, h) * M5(j, i));
          K.PPPQ(i, j, kk, h) = q * (-J2(i, h) * M5(j, kk) + J2(j, h) * M5(i, kk) -
                                     2.0 * J2(kk, h) * M5(j, i));
          K.PPPP(i, j, kk, h) = q * (G2(j, kk) * del(i, h) - G2(i, kk) * del(j, h) +
                                     J3(i, h) * M5(j, kk) - J3(j, h) * M5(i, kk) +
                                     2.0 * J3(kk, h) * M5(j, i));
          K.PQQQ(i, j, kk, h) = q * (-G3u(i, kk) * del(j, h) - J2(i, h) * M1(j, kk) +
                                     J3(h, j) * M3(i, kk) - 2.0 * J3(h, kk) * M2(j, i));
          K.PQQP(i, j, kk, h) = q * (G1(j, kk) * del(i, h) + J3(i, h) * M1(j, kk) -
                                     J1(j, h) * M3(i, kk) + 2.0 * J1(kk, h) * M2(j, i));
          K.PQPQ(i, j, kk, h) = q * (-G2(i, kk) * del(j, h) - J2(i, h) * M2(j, kk) +
                                     J3(h, j) * M5(i, kk) - 2.0 * J2(kk, h) * M2(j, i));
          K.PQPP(i, j, kk, h) = q * (G3(j, kk) * del(i, h) + J3(i, h) * M2(j, kk) -
                                     J1(j, h) * M5(i, kk) + 2.0 * J3(kk, h) * M2(j, i));
        }
  return K;
}

CurvatureBlocks split_adapted_curvature(const Tensor4& K, int n) {
  if (K.dim() != 2 * n) throw Error("split_adapted_curvature: dimension mismatch");
  CurvatureBlocks out;
  for (int b = 0; b < CurvatureBlocks::count; ++b) out.block(b) = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h) {
          // K[alpha][beta(Z)][gamma(X)][delta(Y)]; vertical slots offset by n.
          out.QQQQ(i, j, k, h) = K(h, k, i, j);
          out.QQQP(i, j, k, h) = K(n + h, k, i, j);
          out.QQPQ(i, j, k, h) = K(h, n + k, i, j);
          out.QQPP(i, j, k, h) = K(n + h, n + k, i, j);
          out.PPQQ(i, j, k, h) = K(h, k, n + i, n + j);
          out.PPQP(i, j, k, h) = K(n + h, k, n + i, n + j);
          out.PPPQ(i, j, k, h) = K(h, n + k, n + i, n + j);
          out.PPPP(i, j, k, h) = K(n + h, n + k, n + i, n + j);
          out.PQQQ(i, j, k, h) = K(h, k, n + i, j);
          out.PQQP(i, j, k, h) = K(n + h, k, n + i, j);
          out.PQPQ(i, j, k, h) = K(h, n + k, n + i, j);
          out.PQPP(i, j, k, h) = K(n + h, n + k, n + i, j);
        }
  return out;
}

CurvatureBlocks model_curvature_direct(const PhasePoint& pt, const CoefficientBundle& cb,
                                       const MetricCoefficients& mc, double k) {
  const int n = pt.base.n;
  const Eigen::MatrixXd G = assemble_G(pt, build_G(pt, mc));
  const Eigen::MatrixXd J = assemble_J(pt, build_J(pt, cb));
  const Eigen::MatrixXd GJ = G * J;
  Tensor4 K0(2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)       // Z slot
      for (int x = 0; x < 2 * n; ++x)     // X slot
        for (int y = 0; y < 2 * n; ++y)   // Y slot
          K0(a, b, x, y) = (k / 4.0) * (G(y, b) * (a == x ? 1.0 : 0.0) -
                                        G(x, b) * (a == y ? 1.0 : 0.0) +
                                        GJ(b, y) * J(a, x) - GJ(b, x) * J(a, y) +
                                        2.0 * GJ(x, y) * J(a, b));
  return split_adapted_curvature(K0, n);
}

double curvature_difference(const LiftSpec& spec, const Eigen::VectorXd& q,
                            const Eigen::VectorXd& p) {
  if (!spec.k)
    throw ConfigError("curvature_difference needs a holomorphic curvature target k");
  PhasePoint pt = phase_point(geometry_at(spec.space, q), p);
  const CoefficientBundle cb = spec.bundle_at(pt.t);
  const MetricCoefficients mc = spec.coeffs_at(cb);
  const CurvatureBlocks K = curvature_blocks(pt, mc);
  const CurvatureBlocks K0 = model_curvature_blocks(pt, cb, mc, *spec.k);
  return max_abs_difference(K, K0);
}

} // namespace cotlift
