// Distributed under the MIT License.
// See LICENSE.txt for details.

#include "cotlift/connection.hpp"

namespace cotlift {

namespace {

// Everything the connection and its p-derivatives are contracted from:
// the d^i and d^i d^j derivatives of the metric blocks, the d^i derivatives
// of the inverse blocks, and R0_kij = p_h R^h_kij.
//
// Derivative rules behind the formulas below: d^m p_i = delta^m_i,
// d^m g0^i = g^mi, d^m t = g0^m, d^m f(t) = f'(t) g0^m.
struct Ingredients {
  Tensor3 dG1, dG2, dG3, dH1, dH2, dH3;
  Tensor4 ddG1, ddG2, ddG3;
  Tensor3 R0;
  Tensor3 T, U, A, B, C;  // recurring parenthesized combinations of Eq. (20)
};

Ingredients make_ingredients(const PhasePoint& pt, const MetricCoefficients& mc) {
  const int n = pt.base.n;
  const Eigen::MatrixXd& g = pt.base.g;
  const Eigen::MatrixXd& gi = pt.base.g_inv;
  const Eigen::VectorXd& p = pt.p;
  const Eigen::VectorXd& g0 = pt.g0;
  auto del = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  const double c1p = mc.c1.deriv(1), c1pp = mc.c1.deriv(2);
  const double c2p = mc.c2.deriv(1), c2pp = mc.c2.deriv(2);
  const double c3p = mc.c3.deriv(1), c3pp = mc.c3.deriv(2);
  const double d1 = mc.d1.value(), d1p = mc.d1.deriv(1), d1pp = mc.d1.deriv(2);
  const double d2 = mc.d2.value(), d2p = mc.d2.deriv(1), d2pp = mc.d2.deriv(2);
  const double d3 = mc.d3.value(), d3p = mc.d3.deriv(1), d3pp = mc.d3.deriv(2);
  const double e1p = mc.e1.deriv(1), e2p = mc.e2.deriv(1), e3p = mc.e3.deriv(1);
  const double f1 = mc.f1.value(), f1p = mc.f1.deriv(1);
  const double f2 = mc.f2.value(), f2p = mc.f2.deriv(1);
  const double f3 = mc.f3.value(), f3p = mc.f3.deriv(1);

  Ingredients in;
  in.dG1 = Tensor3(n); in.dG2 = Tensor3(n); in.dG3 = Tensor3(n);
  in.dH1 = Tensor3(n); in.dH2 = Tensor3(n); in.dH3 = Tensor3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        in.dG1(i, j, k) = c1p * g0(i) * g(j, k) + d1p * g0(i) * p(j) * p(k) +
                          d1 * (del(i, j) * p(k) + p(j) * del(i, k));
        in.dG2(i, j, k) = c2p * g0(i) * gi(j, k) + d2p * g0(i) * g0(j) * g0(k) +
                          d2 * (gi(i, j) * g0(k) + g0(j) * gi(i, k));
        in.dG3(i, j, k) = c3p * g0(i) * del(j, k) + d3p * g0(i) * g0(j) * p(k) +
                          d3 * (gi(i, j) * p(k) + g0(j) * del(i, k));
        in.dH1(i, j, k) = e1p * g0(i) * gi(j, k) + f1p * g0(i) * g0(j) * g0(k) +
                          f1 * (gi(i, j) * g0(k) + g0(j) * gi(i, k));
        in.dH2(i, j, k) = e2p * g0(i) * g(j, k) + f2p * g0(i) * p(j) * p(k) +
                          f2 * (del(i, j) * p(k) + p(j) * del(i, k));
        in.dH3(i, j, k) = e3p * g0(i) * del(j, k) + f3p * g0(i) * g0(j) * p(k) +
                          f3 * (gi(i, j) * p(k) + g0(j) * del(i, k));
      }

  in.ddG1 = Tensor4(n); in.ddG2 = Tensor4(n); in.ddG3 = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          in.ddG1(i, j, k, l) =
              c1pp * g0(i) * g0(j) * g(k, l) + c1p * gi(i, j) * g(k, l) +
              d1pp * g0(i) * g0(j) * p(k) * p(l) + d1p * gi(i, j) * p(k) * p(l) +
              d1p * (g0(j) * del(i, k) * p(l) + g0(j) * p(k) * del(i, l) +
                     g0(i) * del(j, k) * p(l) + g0(i) * p(k) * del(j, l)) +
              d1 * (del(j, k) * del(i, l) + del(i, k) * del(j, l));
          in.ddG2(i, j, k, l) =
              c2pp * g0(i) * g0(j) * gi(k, l) + c2p * gi(i, j) * gi(k, l) +
              d2pp * g0(i) * g0(j) * g0(k) * g0(l) + d2p * gi(i, j) * g0(k) * g0(l) +
              d2p * (g0(j) * gi(i, k) * g0(l) + g0(j) * g0(k) * gi(i, l) +
                     g0(i) * gi(j, k) * g0(l) + g0(i) * g0(k) * gi(j, l)) +
              d2 * (gi(j, k) * gi(i, l) + gi(i, k) * gi(j, l));
          in.ddG3(i, j, k, l) =
              c3pp * g0(i) * g0(j) * del(k, l) + c3p * gi(i, j) * del(k, l) +
              d3pp * g0(i) * g0(j) * g0(k) * p(l) + d3p * gi(i, j) * g0(k) * p(l) +
              d3p * (g0(j) * gi(i, k) * p(l) + g0(j) * g0(k) * del(i, l) +
                     g0(i) * gi(j, k) * p(l) + g0(i) * g0(k) * del(j, l)) +
              d3 * (gi(j, k) * del(i, l) + gi(i, k) * del(j, l));
        }

  in.R0 = Tensor3(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int h = 0; h < n; ++h) s += p(h) * pt.base.riemann(h, k, i, j);
        in.R0(k, i, j) = s;
      }

  // T^ijk = d^i G2^jk + d^j G2^ik - d^k G2^ij
  // U^ij_k = d^i G3^j_k + d^j G3^i_k
  // A_j^ik = d^i G3^k_j - d^k G3^i_j
  // B_j^ik = d^i G1_jk - R0_ljk G2^li     (A, B stored as (j,i,k))
  // C_ij^k = R0_lij G2^lk - d^k G1_ij
  in.T = Tensor3(n); in.U = Tensor3(n); in.A = Tensor3(n); in.B = Tensor3(n); in.C = Tensor3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        in.T(i, j, k) = in.dG2(i, j, k) + in.dG2(j, i, k) - in.dG2(k, i, j);
        in.U(i, j, k) = in.dG3(i, j, k) + in.dG3(j, i, k);
        in.A(j, i, k) = in.dG3(i, k, j) - in.dG3(k, i, j);
      }
  // B and C need G2 block values
  {
    const double c2 = mc.c2.value(), d2v = mc.d2.value();
    auto G2v = [&](int a, int b) { return c2 * gi(a, b) + d2v * g0(a) * g0(b); };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double rb = 0.0, rc = 0.0;
          for (int l = 0; l < n; ++l) {
            rb += in.R0(l, j, k) * G2v(l, i);
            rc += in.R0(l, i, j) * G2v(l, k);
          }
          in.B(j, i, k) = in.dG1(i, j, k) - rb;
          in.C(i, j, k) = rc - in.dG1(k, i, j);
        }
  }
  return in;
}

ConnectionBlocks blocks_from(const Ingredients& in, const PhasePoint& pt,
                             const MetricCoefficients& mc, const HBlocks& hb) {
  const int n = pt.base.n;
  const double c3 = mc.c3.value();
  ConnectionBlocks cb;
  cb.Q = Tensor3(n); cb.Qt = Tensor3(n); cb.P = Tensor3(n);
  cb.Pt = Tensor3(n); cb.S = Tensor3(n); cb.St = Tensor3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h) {
        double q = 0, qt = 0, pp = 0, ppt = 0, s = 0, st = 0;
        for (int k = 0; k < n; ++k) {
          q += 0.5 * (in.T(i, j, k) * hb.H2(k, h) + in.U(i, j, k) * hb.H3(k, h));
          qt += 0.5 * (in.T(i, j, k) * hb.H3(h, k) + in.U(i, j, k) * hb.H1(k, h));
          pp += 0.5 * (in.A(j, i, k) * hb.H3(h, k) + in.B(j, i, k) * hb.H1(k, h));
          ppt += 0.5 * (in.A(j, i, k) * hb.H2(k, h) + in.B(j, i, k) * hb.H3(k, h));
          s += 0.5 * in.C(i, j, k) * hb.H2(k, h) - c3 * in.R0(i, j, k) * hb.H3(k, h);
          st += 0.5 * in.C(i, j, k) * hb.H3(h, k) - c3 * in.R0(i, j, k) * hb.H1(k, h);
        }
        cb.Q(i, j, h) = q;
        cb.Qt(i, j, h) = qt;
        cb.P(j, i, h) = pp;
        cb.Pt(j, i, h) = ppt;
        cb.S(i, j, h) = s;
        cb.St(i, j, h) = st;
      }
  return cb;
}

ConnectionDerivatives derivatives_from(const Ingredients& in, const PhasePoint& pt,
                                       const MetricCoefficients& mc, const HBlocks& hb) {
  const int n = pt.base.n;
  const Tensor4& R = pt.base.riemann;
  const double c3 = mc.c3.value(), c3p = mc.c3.deriv(1);
  const double c2 = mc.c2.value(), d2 = mc.d2.value();
  const Eigen::MatrixXd& gi = pt.base.g_inv;
  const Eigen::VectorXd& g0 = pt.g0;
  auto G2v = [&](int a, int b) { return c2 * gi(a, b) + d2 * g0(a) * g0(b); };

  // Product rule over Eq. (20); second block derivatives pair with H, first
  // block derivatives pair with dH, and the R0 terms pick up d^m R0 = R^m.
  Tensor4 ddT(n), ddU(n), ddA(n), ddB(n), ddC(n);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          ddT(m, i, j, k) = in.ddG2(m, i, j, k) + in.ddG2(m, j, i, k) - in.ddG2(m, k, i, j);
          ddU(m, i, j, k) = in.ddG3(m, i, j, k) + in.ddG3(m, j, i, k);
          ddA(m, j, i, k) = in.ddG3(m, i, k, j) - in.ddG3(m, k, i, j);
          double rb = 0.0, rc = 0.0;
          for (int l = 0; l < n; ++l) {
            rb += R(m, l, j, k) * G2v(l, i) + in.R0(l, j, k) * in.dG2(m, l, i);
            rc += R(m, l, i, j) * G2v(l, k) + in.R0(l, i, j) * in.dG2(m, l, k);
          }
          ddB(m, j, i, k) = in.ddG1(m, i, j, k) - rb;
          ddC(m, i, j, k) = rc - in.ddG1(m, k, i, j);
        }

  ConnectionDerivatives cd;
  cd.dQ = Tensor4(n); cd.dQt = Tensor4(n); cd.dP = Tensor4(n);
  cd.dPt = Tensor4(n); cd.dS = Tensor4(n); cd.dSt = Tensor4(n);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int h = 0; h < n; ++h) {
          double q = 0, qt = 0, pp = 0, ppt = 0, s = 0, st = 0;
          for (int k = 0; k < n; ++k) {
            q += 0.5 * (ddT(m, i, j, k) * hb.H2(k, h) + in.T(i, j, k) * in.dH2(m, k, h) +
                        ddU(m, i, j, k) * hb.H3(k, h) + in.U(i, j, k) * in.dH3(m, k, h));
            qt += 0.5 * (ddT(m, i, j, k) * hb.H3(h, k) + in.T(i, j, k) * in.dH3(m, h, k) +
                         ddU(m, i, j, k) * hb.H1(k, h) + in.U(i, j, k) * in.dH1(m, k, h));
            pp += 0.5 * (ddA(m, j, i, k) * hb.H3(h, k) + in.A(j, i, k) * in.dH3(m, h, k) +
                         ddB(m, j, i, k) * hb.H1(k, h) + in.B(j, i, k) * in.dH1(m, k, h));
            ppt += 0.5 * (ddA(m, j, i, k) * hb.H2(k, h) + in.A(j, i, k) * in.dH2(m, k, h) +
                          ddB(m, j, i, k) * hb.H3(k, h) + in.B(j, i, k) * in.dH3(m, k, h));
            s += 0.5 * (ddC(m, i, j, k) * hb.H2(k, h) + in.C(i, j, k) * in.dH2(m, k, h)) -
                 c3p * g0(m) * in.R0(i, j, k) * hb.H3(k, h) -
                 c3 * (R(m, i, j, k) * hb.H3(k, h) + in.R0(i, j, k) * in.dH3(m, k, h));
            st += 0.5 * (ddC(m, i, j, k) * hb.H3(h, k) + in.C(i, j, k) * in.dH3(m, h, k)) -
                  c3p * g0(m) * in.R0(i, j, k) * hb.H1(k, h) -
                  c3 * (R(m, i, j, k) * hb.H1(k, h) + in.R0(i, j, k) * in.dH1(m, k, h));
          }
          cd.dQ(m, i, j, h) = q;
          cd.dQt(m, i, j, h) = qt;
          cd.dP(m, j, i, h) = pp;
          cd.dPt(m, j, i, h) = ppt;
          cd.dS(m, i, j, h) = s;
          cd.dSt(m, i, j, h) = st;
        }
  return cd;
}

} // namespace

ConnectionBlocks connection_blocks(const PhasePoint& pt, const MetricCoefficients& mc) {
  return blocks_from(make_ingredients(pt, mc), pt, mc, invert_G(pt, mc));
}

ConnectionDerivatives connection_block_derivatives(const PhasePoint& pt,
                                                   const MetricCoefficients& mc) {
  return derivatives_from(make_ingredients(pt, mc), pt, mc, invert_G(pt, mc));
}

ConnectionData connection_data(const PhasePoint& pt, const MetricCoefficients& mc) {
  const Ingredients in = make_ingredients(pt, mc);
  const HBlocks hb = invert_G(pt, mc);
  return ConnectionData{blocks_from(in, pt, mc, hb), derivatives_from(in, pt, mc, hb)};
}

} // namespace cotlift
