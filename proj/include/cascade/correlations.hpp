#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "cascade/density_matrix.hpp"
#include "cascade/integrator.hpp"
#include "cascade/levels.hpp"
#include "cascade/params.hpp"

namespace cascade {

/// A photon emitted on the transition |from⟩ → |to⟩; its collapse operator is
/// |to⟩⟨from|.
struct Emission {
  Level from;
  Level to;

  TransitionOp jump() const { return TransitionOp{to, from}; }
};

/// Photon `first` detected at t, photon `second` at t + τ (τ ≥ 0). The
/// negative-delay side of a measured curve is the reversed sequence.
struct DetectionSequence {
  Emission first;
  Emission second;

  /// The four levels first.from, first.to, second.from, second.to, e.g. "BVVG".
  std::string label() const;
};

// The sequences discussed for the cascade. Names list the two transitions,
// first photon first; dressed labels are +, 0, - and V-filtered by default.
namespace sequences {
DetectionSequence bvvg();   // B→V, then V→G
DetectionSequence vggb();   // V→G, then B→V
DetectionSequence pvvp();   // +→V, then V→+
DetectionSequence vppv();   // V→+, then +→V
DetectionSequence zvvz();   // 0→V, then V→0
DetectionSequence v00v();   // V→0, then 0→V
DetectionSequence pvvz();   // +→V, then V→0
DetectionSequence zvvp();   // 0→V, then V→+
DetectionSequence vzpv();   // V→0, then +→V
DetectionSequence vpzv();   // V→+, then 0→V
}  // namespace sequences

struct CorrelationOptions {
  DressedForm form = DressedForm::VFiltered;
  IntegratorOptions integrator;
};

struct CorrelationSeries {
  std::vector<double> tau;     // ps
  std::vector<double> values;  // g²(τ), dimensionless
  DetectionSequence sequence;
  double normalization = 0.0;  // steady-state ⟨k|ρ_ss|k⟩ of the second photon
};

struct CollapseResult {
  DensityMatrix state;  // JρJ†, unnormalized
  double weight;        // Tr[JρJ†]

  DensityMatrix conditional() const { return state.renormalized(); }
};

/// Applies a detection. Throws ZeroWeightCollapse when Tr[JρJ†] ≤ 1e-14.
CollapseResult collapse(const DensityMatrix& rho, const Operator& jump);
CollapseResult collapse(const DensityMatrix& rho, const TransitionOp& jump, const SystemParams& params,
                        DressedForm form = DressedForm::VFiltered);

/// g²(τ) by the quantum regression theorem: collapse the steady state with
/// the first jump, evolve, and project onto the emitting state of the second
/// photon, normalized by its steady-state population.
CorrelationSeries g2(const SystemParams& params, const DetectionSequence& seq,
                     std::span<const double> tau_grid, const CorrelationOptions& opts = {});
/// Same, reusing a steady state computed by the caller.
CorrelationSeries g2(const SystemParams& params, const DensityMatrix& steady,
                     const DetectionSequence& seq, std::span<const double> tau_grid,
                     const CorrelationOptions& opts = {});

/// ⟨measured|ρ(τ)|measured⟩ with ρ(0) = |prepared⟩⟨prepared|, i.e. the
/// conditional population ρ^{prepared}_{measured}(τ) before normalization.
std::vector<double> conditional_population(const SystemParams& params, const Ket& prepared,
                                           const Ket& measured, std::span<const double> tau_grid,
                                           const IntegratorOptions& opts = {});

enum class Polarization { H, V, Both };

/// c = |i⟩⟨B| + |G⟩⟨i| for i = H or V. Throws for Polarization::Both.
Operator emission_operator(Polarization pol);

/// G¹(τ) = Tr[c† e^{Lτ}(c ρ_ss)].
std::vector<std::complex<double>> g1(const SystemParams& params, const Operator& emission_op,
                                     std::span<const double> tau_grid,
                                     const IntegratorOptions& opts = {});

struct SpectrumOptions {
  double tau_max_factor = 12.0;  // τ_max = factor / Γ
  double dt = 0.05;              // ps; quadrature step
  double decay_tol = 1e-3;       // |G¹(τ_max) − G¹(∞)| ≤ decay_tol · G¹(0)
  bool parallel = true;
  IntegratorOptions integrator;
};

/// S(ω) = Re ∫₀^{τ_max} [G¹(τ) − G¹(∞)] e^{−iωτ} dτ (rotating frame; the
/// exciton line sits at +Δ, the biexciton line at −Δ). Both = S_H + S_V.
/// Throws SpectrumHorizonError if G¹ has not relaxed by τ_max.
std::vector<double> power_spectrum(const SystemParams& params, Polarization pol,
                                   std::span<const double> omega_grid,
                                   const SpectrumOptions& opts = {});

struct PeakOptions {
  double rel_threshold = 0.05;  // fraction of the reference maximum
  int min_separation = 3;       // grid points
};

/// Indices of local maxima above `threshold`, keeping the larger of any two
/// maxima closer than `min_separation` points.
std::vector<std::size_t> find_peaks(std::span<const double> values, double threshold,
                                    int min_separation);
/// Same with threshold = rel_threshold · max(values).
std::vector<std::size_t> find_peaks(std::span<const double> values, const PeakOptions& opts = {});

}  // namespace cascade
