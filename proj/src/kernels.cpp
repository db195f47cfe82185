#include "cascade/kernels.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "cascade/lindblad.hpp"

namespace cascade::kernels {

namespace {

// The phasor e^{−iωt_n} is advanced by multiplication and re-seeded from
// exp() every kResync samples to bound the accumulated rounding.
constexpr std::size_t kResync = 1024;

double fourier_at(std::span<const std::complex<double>> f, double dt, double omega) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  const std::complex<double> step = std::polar(1.0, -omega * dt);
  std::complex<double> phasor = 1.0;
  std::complex<double> acc = 0.5 * f[0];
  for (std::size_t k = 1; k < n; ++k) {
    if (k % kResync == 0)
      phasor = std::polar(1.0, -omega * dt * static_cast<double>(k));
    else
      phasor *= step;
    const double w = (k + 1 == n) ? 0.5 : 1.0;
    acc += w * f[k] * phasor;
  }
  return acc.real() * dt;
}

void check_sizes(std::span<const double> omegas, std::span<double> out) {
  if (omegas.size() != out.size())
    throw std::invalid_argument("one_sided_fourier: output size differs from omega grid");
}

CorrelationSeries run_task(const G2Task& task, std::span<const double> tau_grid,
                           const CorrelationOptions& opts) {
  return g2(task.params, task.sequence, tau_grid, opts);
}

}  // namespace

void one_sided_fourier_serial(std::span<const std::complex<double>> samples, double dt,
                              std::span<const double> omegas, std::span<double> out) {
  check_sizes(omegas, out);
  for (std::size_t m = 0; m < omegas.size(); ++m) out[m] = fourier_at(samples, dt, omegas[m]);
}

void one_sided_fourier_omp(std::span<const std::complex<double>> samples, double dt,
                           std::span<const double> omegas, std::span<double> out) {
  check_sizes(omegas, out);
  const auto count = static_cast<std::ptrdiff_t>(omegas.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t m = 0; m < count; ++m) out[m] = fourier_at(samples, dt, omegas[m]);
}

std::vector<CorrelationSeries> g2_batch_serial(std::span<const G2Task> tasks,
                                               std::span<const double> tau_grid,
                                               const CorrelationOptions& opts) {
  std::vector<CorrelationSeries> out;
  out.reserve(tasks.size());
  for (const auto& t : tasks) out.push_back(run_task(t, tau_grid, opts));
  return out;
}

std::vector<CorrelationSeries> g2_batch_omp(std::span<const G2Task> tasks,
                                            std::span<const double> tau_grid,
                                            const CorrelationOptions& opts) {
  std::vector<CorrelationSeries> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = run_task(tasks[i], tau_grid, opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cascade::kernels
