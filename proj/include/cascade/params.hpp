#pragma once

namespace cascade {

/// Physical constants of the two-photon driven biexciton cascade.
///
/// All rates and energies are in ps⁻¹ (ħ = 1). `delta` is the detuning of the
/// exciton levels in the laser frame, Δ = −Δ_B with Δ_B the biexciton shift;
/// it enters the rotating-frame Hamiltonian with a positive sign on |H⟩ and
/// |V⟩. `omega_L` is the laser amplitude on the H-polarized transitions.
///
/// Derived quantities of the adiabatic two-photon picture:
///   Ω = 2Ω_L²/Δ (effective two-photon Rabi frequency), Γ = 2Γ_X, α = Γ²/Ω².
/// For Ω_L = 0 α is stored as +∞.
class SystemParams {
 public:
  /// Throws std::invalid_argument unless omega_L ≥ 0, delta > 0, gamma_X > 0
  /// (all finite).
  SystemParams(double omega_L, double delta, double gamma_X);

  double omega_L() const noexcept { return omega_L_; }
  double delta() const noexcept { return delta_; }
  double gamma_X() const noexcept { return gamma_X_; }

  double omega_eff() const noexcept { return omega_eff_; }
  double gamma_eff() const noexcept { return gamma_eff_; }
  double alpha() const noexcept { return alpha_; }

  /// Ω_L ≤ Δ/3, the drive range where the adiabatic closed forms are trusted.
  bool adiabatic_valid() const noexcept { return omega_L_ <= delta_ / 3.0; }

 private:
  double omega_L_;
  double delta_;
  double gamma_X_;
  double omega_eff_;
  double gamma_eff_;
  double alpha_;
};

}  // namespace cascade
