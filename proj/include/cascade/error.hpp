#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

// Base for solver-side failures. Invalid inputs use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The adaptive integrator could not meet its tolerance without shrinking the
// step below the representable limit.
class StepSizeUnderflow : public Error {
 public:
  StepSizeUnderflow(double time, double step);
  double time() const noexcept { return time_; }
  double step() const noexcept { return step_; }

 private:
  double time_;
  double step_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A detection event that cannot happen from the given state (Tr[JρJ†] = 0).
class ZeroWeightCollapse : public Error {
 public:
  using Error::Error;
};

// Steady-state expectation of the second detection channel vanishes.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

// Closed forms that need a finite α = Γ²/Ω² were called without driving.
class UndefinedAlpha : public Error {
 public:
  UndefinedAlpha() : Error("alpha is undefined for zero drive (omega_eff == 0)") {}
};

// G¹(τ) has not relaxed to its asymptote at the end of the transform window.
class SpectrumHorizonError : public Error {
 public:
  SpectrumHorizonError(double residual, double limit);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace cascade
