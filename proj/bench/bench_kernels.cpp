#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "cascade/kernels.hpp"

namespace {

using cascade::kernels::G2Task;

// A decaying two-tone signal with the length of a 12/Γ window at dt = 0.05 ps.
std::vector<std::complex<double>> make_samples(std::size_t n, double dt) {
  std::vector<std::complex<double>> f(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = dt * static_cast<double>(k);
    f[k] = std::exp(-0.002 * t) * (std::polar(1.0, 3.0 * t) + 0.5 * std::polar(1.0, 3.06 * t));
  }
  return f;
}

std::vector<double> make_omegas(std::size_t m) {
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = 2.7 + 0.6 * static_cast<double>(i) / (m - 1);
  return w;
}

void BM_FourierSerial(benchmark::State& state) {
  const auto f = make_samples(120001, 0.05);
  const auto w = make_omegas(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(w.size());
  for (auto _ : state) {
    cascade::kernels::one_sided_fourier_serial(f, 0.05, w, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_FourierOmp(benchmark::State& state) {
  const auto f = make_samples(120001, 0.05);
  const auto w = make_omegas(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(w.size());
  for (auto _ : state) {
    cascade::kernels::one_sided_fourier_omp(f, 0.05, w, out);
    benchmark::DoNotOptimize(out.data());
  }
}

std::vector<G2Task> sweep_tasks() {
  std::vector<G2Task> tasks;
  for (double w : {0.05, 0.1, 0.2, 0.3}) {
    const cascade::SystemParams p(w, 3.0, 0.001);
    tasks.push_back({p, cascade::sequences::bvvg()});
    tasks.push_back({p, cascade::sequences::vppv()});
  }
  return tasks;
}

std::vector<double> tau_grid() {
  std::vector<double> tau(301);
  for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = 10.0 * static_cast<double>(i);
  return tau;
}

void BM_G2BatchSerial(benchmark::State& state) {
  const auto tasks = sweep_tasks();
  const auto tau = tau_grid();
  for (auto _ : state) benchmark::DoNotOptimize(cascade::kernels::g2_batch_serial(tasks, tau));
}

void BM_G2BatchOmp(benchmark::State& state) {
  const auto tasks = sweep_tasks();
  const auto tau = tau_grid();
  for (auto _ : state) benchmark::DoNotOptimize(cascade::kernels::g2_batch_omp(tasks, tau));
}

}  // namespace

BENCHMARK(BM_FourierSerial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FourierOmp)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_G2BatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_G2BatchOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
