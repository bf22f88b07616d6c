// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "cotlift/errors.hpp"

namespace cotlift {

/// A scalar value together with its first four derivatives with respect to
/// the energy density t, propagated exactly through arithmetic (truncated
/// Taylor arithmetic on derivative coefficients, Leibniz rule with binomial
/// weights).  Order 4 is one more than the third-order data the curvature
/// chain consumes; the spare order keeps finite-difference convergence tests
/// meaningful.
class Jet {
public:
  static constexpr int order = 4;

  // d[k] is the k-th derivative at the evaluation point.
  std::array<double, order + 1> d{};

  Jet() = default;
  explicit Jet(double value) { d[0] = value; }

  static Jet constant(double value) { return Jet(value); }

  /// The identity function t -> t at evaluation point t0.
  static Jet variable(double t0) {
    Jet j(t0);
    j.d[1] = 1.0;
    return j;
  }

  double value() const { return d[0]; }
  double deriv(int k) const { return d[static_cast<std::size_t>(k)]; }

  friend Jet operator-(const Jet& x) {
    Jet r;
    for (int k = 0; k <= order; ++k) r.d[k] = -x.d[k];
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= order; ++k) r.d[k] = a.d[k] + b.d[k];
    return r;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= order; ++k) r.d[k] = a.d[k] - b.d[k];
    return r;
  }

  // (fg)^(k) = sum_j C(k,j) f^(j) g^(k-j)
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= order; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += binom(k, j) * a.d[j] * b.d[k - j];
      r.d[k] = s;
    }
    return r;
  }

  // q = a/b solved from a^(k) = sum_j C(k,j) q^(j) b^(k-j)
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (std::abs(b.d[0]) <= 1e-12)
      throw DomainError("jet division: denominator within 1e-12 of zero");
    Jet q;
    for (int k = 0; k <= order; ++k) {
      double s = a.d[k];
      for (int j = 0; j < k; ++j) s -= binom(k, j) * q.d[j] * b.d[k - j];
      q.d[k] = s / b.d[0];
    }
    return q;
  }

  friend Jet operator+(const Jet& a, double s) { Jet r = a; r.d[0] += s; return r; }
  friend Jet operator+(double s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, double s) { Jet r = a; r.d[0] -= s; return r; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }

  friend Jet operator*(const Jet& a, double s) {
    Jet r;
    for (int k = 0; k <= order; ++k) r.d[k] = a.d[k] * s;
    return r;
  }
  friend Jet operator*(double s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
  friend Jet operator/(double s, const Jet& a) { return Jet(s) / a; }

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << "(" << j.d[0];
    for (int k = 1; k <= order; ++k) os << ", " << j.d[k];
    return os << ")";
  }

private:
  static constexpr double binom(int k, int j) {
    constexpr double table[order + 1][order + 1] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0},
        {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    return table[k][j];
  }
};

/// Integer power by repeated multiplication; negative exponents go through
/// the guarded reciprocal.
inline Jet pow(const Jet& x, int e) {
  if (e < 0) return Jet(1.0) / pow(x, -e);
  Jet r(1.0);
  Jet base = x;
  int n = e;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// w = exp(u): w^(k+1) = sum_j C(k,j) u^(j+1) w^(k-j)
inline Jet exp(const Jet& u) {
  Jet w;
  w.d[0] = std::exp(u.d[0]);
  for (int k = 0; k < Jet::order; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
      constexpr double bin[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
      s += bin[k][j] * u.d[j + 1] * w.d[k - j];
    }
    w.d[k + 1] = s;
  }
  return w;
}

/// Shift: the jet of f' from the jet of f.  The top coefficient is not
/// recoverable and is set to zero; consumers must not rely on deriv(4) of a
/// shifted jet.
inline Jet derivative(const Jet& x) {
  Jet r;
  for (int k = 0; k < Jet::order; ++k) r.d[k] = x.d[k + 1];
  r.d[Jet::order] = 0.0;
  return r;
}

} // namespace cotlift
