#include "cascade/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cascade/error.hpp"

namespace cascade {

SystemParams::SystemParams(double omega_L, double delta, double gamma_X)
    : omega_L_(omega_L), delta_(delta), gamma_X_(gamma_X) {
  if (!std::isfinite(omega_L) || omega_L < 0.0)
    throw std::invalid_argument("omega_L must be finite and >= 0, got " + std::to_string(omega_L));
  if (!std::isfinite(delta) || delta <= 0.0)
    throw std::invalid_argument("delta must be finite and > 0, got " + std::to_string(delta));
  if (!std::isfinite(gamma_X) || gamma_X <= 0.0)
    throw std::invalid_argument("gamma_X must be finite and > 0, got " + std::to_string(gamma_X));

  omega_eff_ = 2.0 * omega_L * omega_L / delta;
  gamma_eff_ = 2.0 * gamma_X;
  alpha_ = omega_eff_ > 0.0 ? (gamma_eff_ / omega_eff_) * (gamma_eff_ / omega_eff_)
                            : std::numeric_limits<double>::infinity();
}

StepSizeUnderflow::StepSizeUnderflow(double time, double step)
    : Error("step size underflow at t = " + std::to_string(time) + " ps (h = " + std::to_string(step) +
            ")"),
      time_(time),
      step_(step) {}

SpectrumHorizonError::SpectrumHorizonError(double residual, double limit)
    : Error("G1 has not decayed at tau_max: |G1(tau_max) - G1(inf)| = " + std::to_string(residual) +
            " > limit " + std::to_string(limit)),
      residual_(residual) {}

}  // namespace cascade
