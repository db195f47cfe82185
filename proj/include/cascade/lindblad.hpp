#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "cascade/density_matrix.hpp"
#include "cascade/integrator.hpp"
#include "cascade/params.hpp"

namespace cascade {

using SuperOperator = Eigen::Matrix<Complex, 16, 16>;

/// H_R = Δ(|H⟩⟨H| + |V⟩⟨V|) + Ω_L(|G⟩⟨H| + |H⟩⟨G| + |B⟩⟨H| + |H⟩⟨B|).
Operator build_hamiltonian(const SystemParams& params);

/// D[J]ρ = 2JρJ† − J†Jρ − ρJ†J.
Operator dissipator(const Operator& jump, const Operator& rho);

/// Radiative channels |G⟩⟨H|, |G⟩⟨V|, |H⟩⟨B|, |V⟩⟨B|, each at rate Γ_X.
std::array<Operator, 4> decay_channels();

/// −i[H_R, ρ] + Γ_X Σ_J D[J]ρ.
Operator liouvillian_rhs(const Operator& rho, const SystemParams& params);

/// The generator with H_R and Σ J†J precomputed; what the integrator calls.
class Liouvillian {
 public:
  explicit Liouvillian(const SystemParams& params);

  Operator operator()(const Operator& rho) const;
  const SystemParams& params() const noexcept { return params_; }

  /// Matrix of the generator on row-major vec(ρ): index 4·i + j ↔ ρ_ij.
  SuperOperator superoperator() const;

  /// Upper bound on |λ| over the generator's eigenvalues: the largest
  /// splitting √(Δ² + 8Ω_L²) of H_R plus the fastest decay rate.
  double max_frequency() const;

 private:
  SystemParams params_;
  Operator hamiltonian_;
  Operator effective_;  // H_R − iΓ_X Σ J†J
};

/// Calls observe(n, t_n, ρ(t_n)) along `t_grid`, starting from rho0 at t_grid[0].
/// Steps are capped at 1/max_frequency(): beyond that the explicit method
/// leaves its stability region on the fast coherences and the controller
/// holds the error at the tolerance instead of near rounding level.
void propagate(const Operator& rho0, const Liouvillian& generator, std::span<const double> t_grid,
               const std::function<void(std::size_t, double, const Operator&)>& observe,
               const IntegratorOptions& opts = {});

/// Trajectory on a strictly ascending grid with t_grid[0] ≥ 0; element 0 is rho0.
/// Throws StepSizeUnderflow if the tolerance cannot be met.
std::vector<DensityMatrix> evolve(const DensityMatrix& rho0, const SystemParams& params,
                                  std::span<const double> t_grid, const IntegratorOptions& opts = {});

struct SteadyStateOptions {
  double residual_tol = 1e-10;  // max-abs entry of L(ρ_ss)
  double horizon_factor = 20.0; // fallback integration horizon in units of 1/Γ
  // The residual of an integrated state is dominated by integration error on
  // the fast coherences, so the fallback runs well below the default tolerance.
  IntegratorOptions fallback_integrator{1e-14, 1e-12};
};

/// Null-space solve of the 16×16 generator with unit-trace normalization.
/// Falls back to long-time integration if the residual check fails; throws
/// ConvergenceError if neither route reaches `residual_tol`.
DensityMatrix steady_state(const SystemParams& params, const SteadyStateOptions& opts = {});

/// Long-time integration from |G⟩⟨G| over horizon_factor/Γ.
DensityMatrix steady_state_by_integration(const SystemParams& params,
                                          const SteadyStateOptions& opts = {});

/// max_ij |L(ρ)_ij|.
double steady_state_residual(const DensityMatrix& rho, const SystemParams& params);

}  // namespace cascade
