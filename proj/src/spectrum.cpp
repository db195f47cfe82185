#include <cmath>
#include <stdexcept>

#include "cascade/correlations.hpp"
#include "cascade/error.hpp"
#include "cascade/kernels.hpp"
#include "cascade/lindblad.hpp"

namespace cascade {

namespace {

std::vector<double> single_polarization(const SystemParams& params, Polarization pol,
                                        std::span<const double> omega_grid,
                                        const SpectrumOptions& opts) {
  if (!(opts.dt > 0.0) || !(opts.tau_max_factor > 0.0))
    throw std::invalid_argument("power_spectrum: dt and tau_max_factor must be positive");
  const double tau_max = opts.tau_max_factor / params.gamma_eff();
  const auto steps = static_cast<std::size_t>(std::ceil(tau_max / opts.dt));
  std::vector<double> tau(steps + 1);
  for (std::size_t n = 0; n <= steps; ++n) tau[n] = static_cast<double>(n) * opts.dt;

  const Operator c = emission_operator(pol);
  const DensityMatrix steady = steady_state(params);
  std::vector<std::complex<double>> samples = g1(params, c, tau, opts.integrator);

  const Complex asymptote = (c.adjoint() * steady.matrix()).trace() * (c * steady.matrix()).trace();
  const double reference = std::abs(samples.front());
  const double residual = std::abs(samples.back() - asymptote);
  if (residual > opts.decay_tol * reference) throw SpectrumHorizonError(residual, opts.decay_tol * reference);
  for (auto& s : samples) s -= asymptote;

  std::vector<double> out(omega_grid.size());
  if (opts.parallel)
    kernels::one_sided_fourier_omp(samples, opts.dt, omega_grid, out);
  else
    kernels::one_sided_fourier_serial(samples, opts.dt, omega_grid, out);
  return out;
}

}  // namespace

std::vector<double> power_spectrum(const SystemParams& params, Polarization pol,
                                   std::span<const double> omega_grid,
                                   const SpectrumOptions& opts) {
  if (pol != Polarization::Both) return single_polarization(params, pol, omega_grid, opts);
  std::vector<double> out = single_polarization(params, Polarization::H, omega_grid, opts);
  const std::vector<double> v = single_polarization(params, Polarization::V, omega_grid, opts);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  return out;
}

}  // namespace cascade
