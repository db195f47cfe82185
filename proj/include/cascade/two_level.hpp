#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cascade/integrator.hpp"

namespace cascade {

// Resonantly driven two-level emitter over the basis {G, B}:
//   ρ̇ = −i[Ω₂(|G⟩⟨B| + |B⟩⟨G|), ρ] + Γ₂ D[|G⟩⟨B|]ρ.
// Kept as the reference system the adiabatic cascade is compared against.
using TwoLevelOperator = Eigen::Matrix2cd;

TwoLevelOperator two_level_rhs(const TwoLevelOperator& rho, double omega2, double gamma2);

std::vector<TwoLevelOperator> evolve_two_level(const TwoLevelOperator& rho0, double omega2,
                                               double gamma2, std::span<const double> t_grid,
                                               const IntegratorOptions& opts = {});

}  // namespace cascade
