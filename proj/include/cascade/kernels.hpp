#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cascade/correlations.hpp"

// Data-parallel kernels. Each has a serial reference and an OpenMP version
// that must agree bit for bit; work items never share accumulators.
namespace cascade::kernels {

/// out[m] = Re Σ_n w_n f_n e^{−iω_m t_n} dt with trapezoid weights w and
/// t_n = n·dt.
void one_sided_fourier_serial(std::span<const std::complex<double>> samples, double dt,
                              std::span<const double> omegas, std::span<double> out);
void one_sided_fourier_omp(std::span<const std::complex<double>> samples, double dt,
                           std::span<const double> omegas, std::span<double> out);

struct G2Task {
  SystemParams params;
  DetectionSequence sequence;
};

/// Independent g² evaluations, e.g. every (drive, sequence) pair of a sweep.
std::vector<CorrelationSeries> g2_batch_serial(std::span<const G2Task> tasks,
                                               std::span<const double> tau_grid,
                                               const CorrelationOptions& opts = {});
/// Exceptions thrown inside a work item are rethrown after the loop.
std::vector<CorrelationSeries> g2_batch_omp(std::span<const G2Task> tasks,
                                            std::span<const double> tau_grid,
                                            const CorrelationOptions& opts = {});

}  // namespace cascade::kernels
