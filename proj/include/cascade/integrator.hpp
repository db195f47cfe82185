#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

#include "cascade/error.hpp"

namespace cascade {

struct IntegratorOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  double initial_step = 0.0;  // 0 selects a step from the initial derivative
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 50'000'000;
};

namespace detail {

template <class State>
double scaled_error(const State& err, const State& y0, const State& y1, const IntegratorOptions& o) {
  auto scale = o.abs_tol + o.rel_tol * y0.array().abs().max(y1.array().abs());
  return (err.array().abs() / scale).maxCoeff();
}

template <class State>
double rms_norm(const State& y) {
  return std::sqrt(y.array().abs2().mean());
}

}  // namespace detail

/// Dormand–Prince 5(4) with FSAL and a standard step-size controller.
///
/// Integrates dy/dt = rhs(y) (autonomous) from grid[0] and calls
/// `observe(n, grid[n], y)` at every grid point, grid[0] included. Steps are
/// clipped to land exactly on grid points. `State` is any fixed-size Eigen
/// matrix or vector.
template <class State, class Rhs, class Observer>
void integrate_dopri5(Rhs&& rhs, State y, std::span<const double> grid, Observer&& observe,
                      const IntegratorOptions& opts = {}) {
  if (grid.empty()) throw std::invalid_argument("time grid is empty");
  for (std::size_t n = 1; n < grid.size(); ++n) {
    if (!(grid[n] > grid[n - 1])) throw std::invalid_argument("time grid must be strictly ascending");
  }

  // Butcher tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;
  (void)c2, (void)c3, (void)c4, (void)c5;

  double t = grid.front();
  observe(std::size_t{0}, t, static_cast<const State&>(y));
  if (grid.size() == 1) return;

  State k1 = rhs(y);
  double h = opts.initial_step;
  if (!(h > 0.0)) {
    const double d0 = detail::rms_norm(y), d1 = detail::rms_norm(k1);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, grid.back() - t);
  }
  h = std::min(h, opts.max_step);

  long steps = 0;
  for (std::size_t n = 1; n < grid.size(); ++n) {
    const double target = grid[n];
    while (t < target) {
      bool clipped = false;
      double step = h;
      if (t + step >= target) {
        step = target - t;
        clipped = true;
      }
      const double floor = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
      if (step < floor && !clipped) throw StepSizeUnderflow(t, step);
      if (++steps > opts.max_steps) throw ConvergenceError("integrator exceeded max_steps");

      const State k2 = rhs(State(y + step * (a21 * k1)));
      const State k3 = rhs(State(y + step * (a31 * k1 + a32 * k2)));
      const State k4 = rhs(State(y + step * (a41 * k1 + a42 * k2 + a43 * k3)));
      const State k5 = rhs(State(y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
      const State k6 = rhs(State(y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
      const State y1 = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const State k7 = rhs(y1);
      const State err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      const double en = detail::scaled_error(err, y, y1, opts);
      if (!std::isfinite(en)) {
        h = 0.2 * step;
        if (h < floor) throw StepSizeUnderflow(t, h);
        continue;
      }
      const double factor = en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
      if (en <= 1.0) {
        t = clipped ? target : t + step;
        y = y1;
        k1 = k7;
        // A clipped step says nothing about the natural step size.
        if (!clipped) h = std::min(step * factor, opts.max_step);
      } else {
        h = step * std::max(factor, 0.2);
        if (h < floor) throw StepSizeUnderflow(t, h);
      }
    }
    observe(n, t, static_cast<const State&>(y));
  }
}

}  // namespace cascade
