// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <stdexcept>
#include <string>

namespace cotlift {

// Base for everything thrown by this library. kind() returns a stable short
// tag used to bucket per-point failures in scenario reports.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* kind() const noexcept { return "error"; }
};

// A formula was evaluated outside its validity domain.
class DomainError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain_error"; }
};

class OutsideChart : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "outside_chart"; }
};

class NonpositiveA1 : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "nonpositive_a1"; }
};

// The common denominator of the integrability coefficients vanished; the
// requested t lies outside the validity interval of the profile family.
class DegenerateDenominator : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "degenerate_denominator"; }
};

class NonpositiveLambda : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "nonpositive_lambda"; }
};

class IndefiniteMetric : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "indefinite_metric"; }
};

class ZeroCurvature : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "zero_curvature"; }
};

class ZeroHolomorphicCurvature : public DomainError {
public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "zero_holomorphic_curvature"; }
};

class ConfigError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "config_error"; }
};

} // namespace cotlift
