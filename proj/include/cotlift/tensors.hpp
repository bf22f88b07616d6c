// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cotlift {

// Small dense cubic/quartic arrays with one common dimension, zero-initialized.
// These hold M-tensor components at a single phase-space point.

class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }

  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) {
    for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) {
    for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend Tensor3 operator*(Tensor3 a, double s) {
    for (double& x : a.v_) x *= s;
    return a;
  }
  friend Tensor3 operator*(double s, Tensor3 a) { return std::move(a) * s; }

private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  int n_ = 0;
  std::vector<double> v_;
};

class Tensor4 {
public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j, int k, int l) { return v_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return v_[idx(i, j, k, l)]; }

  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) {
    for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) {
    for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend Tensor4 operator*(Tensor4 a, double s) {
    for (double& x : a.v_) x *= s;
    return a;
  }
  friend Tensor4 operator*(double s, Tensor4 a) { return std::move(a) * s; }

private:
  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_ = 0;
  std::vector<double> v_;
};

} // namespace cotlift
