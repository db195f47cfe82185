#pragma once

#include <complex>
#include <optional>

#include "cascade/density_matrix.hpp"
#include "cascade/levels.hpp"
#include "cascade/params.hpp"

// Closed-form solutions of the adiabatically eliminated cascade.
//
// After eliminating |H⟩ the pair D = ρ_BB − ρ_GG, B = ρ_BG − ρ_GB obeys
//   Ḋ = −Γ(D + Σ₀) − iΩB,   Ḃ = −ΓB − iΩD,
// with Σ₀ the conserved total occupation. For real initial populations B is
// purely imaginary; every function here carries it as b = Im B, so the
// quantity written iB elsewhere is −b.
//
// Every expression is evaluated with (Ω, Γ, α) derived from SystemParams.
// Products e^{−Γt}cosh(Γt) and e^{−Γt}sinh(Γt) are recombined as
// (1 ± e^{−2Γt})/2 so nothing overflows at long times.
namespace cascade::analytic {

struct NormalizedRates {
  double omega_n;  // Ω/(Γ² + Ω²)  [ps]
  double gamma_n;  // Γ/(Γ² + Ω²)  [ps]

  static NormalizedRates from(const SystemParams& params);
};

/// Initial data for the adiabatic solutions.
struct AdiabaticIC {
  double D0 = 0.0;                // ρ_BB − ρ_GG
  double B0_imag = 0.0;           // Im(ρ_BG − ρ_GB)
  double Sigma0 = 1.0;            // total occupation
  double rho_BB0 = 0.0;
  double rho_BG0_plus_GB0 = 0.0;  // 2 Re ρ_BG
  // Initial V population. Unset means the excitons start equal,
  // ρ_VV = ρ_HH = (Σ₀ + D₀ − 2ρ_BB)/2.
  std::optional<double> rho_VV0;

  /// Throws std::invalid_argument unless |D0| ≤ Σ0 and 0 ≤ ρ_BB0 ≤ Σ0.
  void validate() const;

  static AdiabaticIC from_state(const DensityMatrix& rho);

  /// |G⟩⟨G|, the state after an exciton photon.
  static AdiabaticIC ground();
  /// |V⟩⟨V|, the state after a biexciton photon.
  static AdiabaticIC exciton_v();
  /// Conditional state after detecting V→+ (sign +) or V→0 (sign −), scaled to
  /// Σ₀ = 2 so that ρ_BB(0) = ρ_GG(0) = 1 and ρ_BG + ρ_GB = ±2.
  static AdiabaticIC dressed(int sign);
};

double inversion_D(double t, const AdiabaticIC& ic, const SystemParams& params);
/// Im B(t).
double coherence_B(double t, const AdiabaticIC& ic, const SystemParams& params);

double rho_bb(double t, const AdiabaticIC& ic, const SystemParams& params);
double rho_gg(double t, const AdiabaticIC& ic, const SystemParams& params);
std::complex<double> rho_bg(double t, const AdiabaticIC& ic, const SystemParams& params);

/// ρ_VV = (Σ₀ + D − 2ρ_BB)/2. Rejects unequal exciton initial conditions.
double rho_vv_shortcut(double t, const AdiabaticIC& ic, const SystemParams& params);
/// ρ_VV(0)e^{−Γt} + Γe^{−Γt}∫₀ᵗ e^{Γs}ρ_BB(s)ds, integrated in closed form.
double rho_vv_integral(double t, const AdiabaticIC& ic, const SystemParams& params);
/// Shortcut when the excitons start equal, integral form otherwise.
double rho_vv(double t, const AdiabaticIC& ic, const SystemParams& params);

// Normalized intensity correlations for τ ≥ 0. All throw UndefinedAlpha when
// Ω_L = 0 and std::invalid_argument for τ < 0.

/// Biexciton photon first: 2e^{−Γτ}(1 + cosh Γτ + α[1 + cos Ωτ]).
double g2_bvvg(double tau, const SystemParams& params);
/// Exciton photon first: 2e^{−Γτ}[cosh Γτ − cos Ωτ].
double g2_vggb(double tau, const SystemParams& params);
/// +-biexciton after V-exciton, the time-reordering signal.
double g2_v_plus_plus_v(double tau, const SystemParams& params);
/// +-photon after a 0-state exciton photon; starts at 0 for every drive.
double g2_v_plus_zero_v(double tau, const SystemParams& params);
/// Conditional V dynamics again; also the 0VV0 and +VV0 curves.
double g2_plus_vv_plus(double tau, const SystemParams& params);
/// Detected mixture of {+, 0} photons, biexciton side first.
double g2_ex_forward(double tau, const SystemParams& params);
/// Detected mixture of {+, 0} photons, exciton side first.
double g2_ex_backward(double tau, const SystemParams& params);

/// Conditional population of the (V-filtered) + state after detecting V→+
/// (sign = +1, ρ^{++}_{++}) or V→0 (sign = −1, ρ^{00}_{++}).
double conditional_dressed_population(double tau, int sign, const SystemParams& params);
/// τ → ∞ limit of conditional_dressed_population, equal to ⟨+|ρ_ss|+⟩.
double conditional_dressed_population_limit(const SystemParams& params);

/// Eigensystem of H_R in closed form.
struct DressedEigensystem {
  double e0 = 0.0;  // dark state |0⟩
  double e1 = 0.0;  // |V⟩, equals Δ
  double e3 = 0.0;  // (Δ + √(8Ω_L² + Δ²))/2
  double e4 = 0.0;  // (Δ − √(8Ω_L² + Δ²))/2
  double a1 = 0.0;  // Ω_L/√(2Ω_L² + e3²)
  double a2 = 0.0;  // Ω_L/√(2Ω_L² + e4²)
  double a3 = 0.0;  // 1/√2
  Ket plus;
  Ket minus;
  Ket zero;
  Ket v;

  const Ket& vector(DressedLabel label) const;
  double eigenvalue(DressedLabel label) const;
};

DressedEigensystem dressed_eigensystem(const SystemParams& params);

}  // namespace cascade::analytic
