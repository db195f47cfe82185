#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "cascade/params.hpp"

namespace cascade {

using Complex = std::complex<double>;
using Ket = Eigen::Vector4cd;
using Operator = Eigen::Matrix4cd;

// Basis order {G, H, B, V}; the enumerator value is the matrix index.
enum class BareLevel : int { G = 0, H = 1, B = 2, V = 3 };

inline constexpr std::array<BareLevel, 4> kBareLevels = {BareLevel::G, BareLevel::H,
                                                         BareLevel::B, BareLevel::V};

constexpr int index(BareLevel level) noexcept { return static_cast<int>(level); }
std::string_view name(BareLevel level) noexcept;

// Eigenstates of the driven Hamiltonian. Plus/Minus are the e3/e4 branches,
// Zero the dark state (|B⟩ − |G⟩)/√2, V the undriven exciton.
enum class DressedLabel { Plus, Minus, Zero, V };
std::string_view name(DressedLabel label) noexcept;

// How a dressed label is expanded in the bare basis.
//   Full:      the normalized eigenvector of H_R.
//   VFiltered: the eigenvector with its |H⟩ component dropped and
//              renormalized; what a V-polarized, frequency-filtered detector
//              projects onto. Plus/Minus become (|G⟩ + |B⟩)/√2.
enum class DressedForm { Full, VFiltered };

using Level = std::variant<BareLevel, DressedLabel>;

std::string name(const Level& level);
Ket ket(BareLevel level);
Ket ket(const Level& level, const SystemParams& params, DressedForm form = DressedForm::VFiltered);

/// Flip operator |ket⟩⟨bra| between bare or dressed labels.
struct TransitionOp {
  Level ket;
  Level bra;

  Operator matrix(const SystemParams& params, DressedForm form = DressedForm::VFiltered) const;
  std::string name() const;
};

/// σ_ij = |i⟩⟨j| in the bare basis.
Operator sigma(BareLevel i, BareLevel j);

}  // namespace cascade
