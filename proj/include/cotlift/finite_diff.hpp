// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>

namespace cotlift {

inline double fd_step(double base, double coord) {
  return base * std::max(1.0, std::abs(coord));
}

/// 4th-order central difference of f along coordinate a:
///   (-f(u+2h) + 8 f(u+h) - 8 f(u-h) + f(u-2h)) / (12h).
/// Works for any return type with +,-,* double.
template <class F>
auto fd4_partial(F&& f, const Eigen::VectorXd& u, int a, double base_step = 1e-4)
    -> decltype(f(u)) {
  const double h = fd_step(base_step, u(a));
  Eigen::VectorXd up = u, um = u, up2 = u, um2 = u;
  up(a) += h;
  um(a) -= h;
  up2(a) += 2.0 * h;
  um2(a) -= 2.0 * h;
  return (f(up2) * (-1.0) + f(up) * 8.0 + f(um) * (-8.0) + f(um2)) * (1.0 / (12.0 * h));
}

/// One Richardson level on top of fd4_partial: combines steps h and h/2 to
/// cancel the leading O(h^4) truncation term.
template <class F>
auto fd4_partial_richardson(F&& f, const Eigen::VectorXd& u, int a, double base_step = 1e-3)
    -> decltype(f(u)) {
  auto coarse = fd4_partial(f, u, a, base_step);
  auto fine = fd4_partial(f, u, a, 0.5 * base_step);
  return (fine * 16.0 - coarse) * (1.0 / 15.0);
}

} // namespace cotlift
