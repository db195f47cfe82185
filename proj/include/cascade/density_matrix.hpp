#pragma once

#include "cascade/levels.hpp"

namespace cascade {

enum class Normalization { Normalized, Unnormalized };

/// 4×4 density matrix over {G, H, B, V}.
///
/// The checked constructor enforces Hermiticity (1e-12), unit trace (1e-12)
/// and positivity (smallest eigenvalue ≥ −1e-9) for normalized states;
/// conditional states after a detection carry Normalization::Unnormalized and
/// are only checked for Hermiticity. Integrator output goes through
/// `unchecked`, whose drift is measured with the diagnostics below.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = -1e-9;

  explicit DensityMatrix(const Operator& m, Normalization norm = Normalization::Normalized);

  static DensityMatrix unchecked(const Operator& m, Normalization norm = Normalization::Normalized);
  static DensityMatrix pure(const Ket& psi);
  static DensityMatrix projector(BareLevel level);

  const Operator& matrix() const noexcept { return m_; }
  Normalization normalization() const noexcept { return norm_; }
  bool is_normalized() const noexcept { return norm_ == Normalization::Normalized; }

  Complex operator()(BareLevel row, BareLevel col) const { return m_(index(row), index(col)); }
  double population(BareLevel level) const { return m_(index(level), index(level)).real(); }
  /// ⟨ψ|ρ|ψ⟩ (real part; the imaginary part is rounding noise for Hermitian ρ).
  double expectation(const Ket& psi) const;

  double trace() const { return m_.trace().real(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;

  /// ρ / Tr ρ as a normalized state. Throws std::domain_error for zero trace.
  DensityMatrix renormalized() const;

 private:
  DensityMatrix(const Operator& m, Normalization norm, bool /*tag*/) : m_(m), norm_(norm) {}

  Operator m_;
  Normalization norm_;
};

}  // namespace cascade
