#include "cascade/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cascade/error.hpp"
#include "cascade/lindblad.hpp"

namespace cascade {

namespace {

constexpr double kMinWeight = 1e-14;

// The integration always starts at τ = 0; a grid that starts later gets a
// leading zero that is dropped from the output.
struct PaddedGrid {
  std::vector<double> points;
  std::size_t skip = 0;
};

PaddedGrid pad_from_zero(std::span<const double> tau_grid) {
  if (tau_grid.empty()) throw std::invalid_argument("tau grid is empty");
  if (tau_grid.front() < 0.0) throw std::invalid_argument("tau grid must start at tau >= 0");
  PaddedGrid g;
  if (tau_grid.front() > 0.0) {
    g.points.push_back(0.0);
    g.skip = 1;
  }
  g.points.insert(g.points.end(), tau_grid.begin(), tau_grid.end());
  return g;
}

}  // namespace

std::string DetectionSequence::label() const {
  return name(first.from) + name(first.to) + name(second.from) + name(second.to);
}

namespace sequences {
namespace {
using enum BareLevel;
constexpr Level kP = DressedLabel::Plus;
constexpr Level kZ = DressedLabel::Zero;
constexpr Level kV = BareLevel::V;
}  // namespace

DetectionSequence bvvg() { return {{B, V}, {V, G}}; }
DetectionSequence vggb() { return {{V, G}, {B, V}}; }
DetectionSequence pvvp() { return {{kP, kV}, {kV, kP}}; }
DetectionSequence vppv() { return {{kV, kP}, {kP, kV}}; }
DetectionSequence zvvz() { return {{kZ, kV}, {kV, kZ}}; }
DetectionSequence v00v() { return {{kV, kZ}, {kZ, kV}}; }
DetectionSequence pvvz() { return {{kP, kV}, {kV, kZ}}; }
DetectionSequence zvvp() { return {{kZ, kV}, {kV, kP}}; }
DetectionSequence vzpv() { return {{kV, kZ}, {kP, kV}}; }
DetectionSequence vpzv() { return {{kV, kP}, {kZ, kV}}; }
}  // namespace sequences

CollapseResult collapse(const DensityMatrix& rho, const Operator& jump) {
  const Operator out = jump * rho.matrix() * jump.adjoint();
  const double weight = out.trace().real();
  if (!(weight > kMinWeight))
    throw ZeroWeightCollapse("detection has zero probability from this state (weight " +
                             std::to_string(weight) + ")");
  return {DensityMatrix(out, Normalization::Unnormalized), weight};
}

CollapseResult collapse(const DensityMatrix& rho, const TransitionOp& jump, const SystemParams& params,
                        DressedForm form) {
  return collapse(rho, jump.matrix(params, form));
}

CorrelationSeries g2(const SystemParams& params, const DetectionSequence& seq,
                     std::span<const double> tau_grid, const CorrelationOptions& opts) {
  return g2(params, steady_state(params), seq, tau_grid, opts);
}

CorrelationSeries g2(const SystemParams& params, const DensityMatrix& steady,
                     const DetectionSequence& seq, std::span<const double> tau_grid,
                     const CorrelationOptions& opts) {
  const PaddedGrid grid = pad_from_zero(tau_grid);
  const Ket k = ket(seq.second.from, params, opts.form);
  const double denom = steady.expectation(k);
  if (!(denom > kMinWeight))
    throw ZeroDenominator("steady-state population of " + name(seq.second.from) + " vanishes");

  const DensityMatrix start =
      collapse(steady, seq.first.jump(), params, opts.form).conditional();

  CorrelationSeries series;
  series.tau.assign(tau_grid.begin(), tau_grid.end());
  series.values.reserve(tau_grid.size());
  series.sequence = seq;
  series.normalization = denom;
  propagate(start.matrix(), Liouvillian(params), grid.points,
            [&](std::size_t n, double, const Operator& r) {
              if (n < grid.skip) return;
              series.values.push_back(k.dot(r * k).real() / denom);
            },
            opts.integrator);
  return series;
}

std::vector<double> conditional_population(const SystemParams& params, const Ket& prepared,
                                           const Ket& measured, std::span<const double> tau_grid,
                                           const IntegratorOptions& opts) {
  const PaddedGrid grid = pad_from_zero(tau_grid);
  std::vector<double> out;
  out.reserve(tau_grid.size());
  propagate(DensityMatrix::pure(prepared).matrix(), Liouvillian(params), grid.points,
            [&](std::size_t n, double, const Operator& r) {
              if (n < grid.skip) return;
              out.push_back(measured.dot(r * measured).real());
            },
            opts);
  return out;
}

Operator emission_operator(Polarization pol) {
  using enum BareLevel;
  switch (pol) {
    case Polarization::H: return sigma(H, B) + sigma(G, H);
    case Polarization::V: return sigma(V, B) + sigma(G, V);
    case Polarization::Both: break;
  }
  throw std::invalid_argument("emission_operator: pick H or V; Both is a sum of spectra");
}

std::vector<std::complex<double>> g1(const SystemParams& params, const Operator& emission_op,
                                     std::span<const double> tau_grid,
                                     const IntegratorOptions& opts) {
  const PaddedGrid grid = pad_from_zero(tau_grid);
  const DensityMatrix steady = steady_state(params);
  const Operator start = emission_op * steady.matrix();
  const Operator c_dag = emission_op.adjoint();
  std::vector<std::complex<double>> out;
  out.reserve(tau_grid.size());
  propagate(start, Liouvillian(params), grid.points,
            [&](std::size_t n, double, const Operator& r) {
              if (n < grid.skip) return;
              out.push_back((c_dag * r).trace());
            },
            opts);
  return out;
}

std::vector<std::size_t> find_peaks(std::span<const double> values, double threshold,
                                    int min_separation) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] > threshold && values[i] > values[i - 1] && values[i] >= values[i + 1])
      candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::size_t> kept;
  for (std::size_t c : candidates) {
    const bool crowded = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      const auto gap = c > k ? c - k : k - c;
      return gap < static_cast<std::size_t>(std::max(min_separation, 1));
    });
    if (!crowded) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<std::size_t> find_peaks(std::span<const double> values, const PeakOptions& opts) {
  if (values.empty()) return {};
  const double top = *std::max_element(values.begin(), values.end());
  return find_peaks(values, opts.rel_threshold * top, opts.min_separation);
}

}  // namespace cascade
