// Distributed under the MIT License.
// See LICENSE.txt for details.

#include "cotlift/base_space.hpp"

#include <cmath>
#include <string>

#include "cotlift/errors.hpp"

namespace cotlift {

BaseGeometry geometry_at(const SpaceForm& space, const Eigen::VectorXd& x) {
  const int n = space.n;
  const double c = space.c;
  if (n < 2) throw ConfigError("space form dimension must be >= 2");
  if (x.size() != n) throw ConfigError("chart point has wrong dimension");

  const double r2 = x.squaredNorm();
  const double denom = 1.0 + 0.25 * c * r2;
  if (denom <= 1e-12)
    throw OutsideChart("conformal chart: 1 + (c/4)|x|^2 = " + std::to_string(denom) +
                       " is not positive");
  const double phi = 1.0 / denom;

  BaseGeometry bg;
  bg.n = n;
  bg.x = x;
  bg.g = Eigen::MatrixXd::Identity(n, n) * (phi * phi);
  bg.g_inv = Eigen::MatrixXd::Identity(n, n) / (phi * phi);

  // g = e^{2 sigma} delta with sigma = -log(1 + (c/4)|x|^2):
  //   sigma_i  = -(c/2) x_i phi
  //   sigma_il = -(c/2) delta_il phi + (c^2/4) x_i x_l phi^2
  Eigen::VectorXd sig = -(0.5 * c * phi) * x;
  Eigen::MatrixXd sig2 = -(0.5 * c * phi) * Eigen::MatrixXd::Identity(n, n) +
                         (0.25 * c * c * phi * phi) * (x * x.transpose());

  bg.gamma = Tensor3(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        bg.gamma(k, i, j) = (k == i ? sig(j) : 0.0) + (k == j ? sig(i) : 0.0) -
                            (i == j ? sig(k) : 0.0);

  bg.dgamma = Tensor4(n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          bg.dgamma(l, k, i, j) = (k == i ? sig2(j, l) : 0.0) + (k == j ? sig2(i, l) : 0.0) -
                                  (i == j ? sig2(k, l) : 0.0);

  // R^h_kij = d_i Gamma^h_jk - d_j Gamma^h_ik
  //         + Gamma^h_il Gamma^l_jk - Gamma^h_jl Gamma^l_ik
  bg.riemann = Tensor4(n);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = bg.dgamma(i, h, j, k) - bg.dgamma(j, h, i, k);
          for (int l = 0; l < n; ++l)
            s += bg.gamma(h, i, l) * bg.gamma(l, j, k) - bg.gamma(h, j, l) * bg.gamma(l, i, k);
          bg.riemann(h, k, i, j) = s;
        }
  return bg;
}

double sectional_curvature_check(const SpaceForm& space, const Eigen::VectorXd& x) {
  BaseGeometry bg = geometry_at(space, x);
  const int n = bg.n;
  double worst = 0.0;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double model =
              space.c * ((h == i ? bg.g(k, j) : 0.0) - (h == j ? bg.g(k, i) : 0.0));
          worst = std::max(worst, std::abs(bg.riemann(h, k, i, j) - model));
        }
  return worst;
}

} // namespace cotlift
