#include "cascade/levels.hpp"

#include <cmath>

#include "cascade/analytic.hpp"

namespace cascade {

std::string_view name(BareLevel level) noexcept {
  switch (level) {
    case BareLevel::G: return "G";
    case BareLevel::H: return "H";
    case BareLevel::B: return "B";
    case BareLevel::V: return "V";
  }
  return "?";
}

std::string_view name(DressedLabel label) noexcept {
  switch (label) {
    case DressedLabel::Plus: return "+";
    case DressedLabel::Minus: return "-";
    case DressedLabel::Zero: return "0";
    case DressedLabel::V: return "V";
  }
  return "?";
}

std::string name(const Level& level) {
  return std::visit([](auto l) { return std::string(name(l)); }, level);
}

Ket ket(BareLevel level) {
  Ket k = Ket::Zero();
  k(index(level)) = 1.0;
  return k;
}

namespace {

Ket filtered(DressedLabel label) {
  const double r = 1.0 / std::sqrt(2.0);
  Ket k = Ket::Zero();
  switch (label) {
    case DressedLabel::Plus:
    case DressedLabel::Minus:
      k(index(BareLevel::G)) = r;
      k(index(BareLevel::B)) = r;
      break;
    case DressedLabel::Zero:
      k(index(BareLevel::G)) = -r;
      k(index(BareLevel::B)) = r;
      break;
    case DressedLabel::V: k(index(BareLevel::V)) = 1.0; break;
  }
  return k;
}

}  // namespace

Ket ket(const Level& level, const SystemParams& params, DressedForm form) {
  if (const auto* bare = std::get_if<BareLevel>(&level)) return ket(*bare);
  const auto label = std::get<DressedLabel>(level);
  if (form == DressedForm::VFiltered) return filtered(label);
  return analytic::dressed_eigensystem(params).vector(label);
}

Operator TransitionOp::matrix(const SystemParams& params, DressedForm form) const {
  return cascade::ket(ket, params, form) * cascade::ket(bra, params, form).adjoint();
}

std::string TransitionOp::name() const {
  return "|" + cascade::name(ket) + "><" + cascade::name(bra) + "|";
}

Operator sigma(BareLevel i, BareLevel j) {
  Operator m = Operator::Zero();
  m(index(i), index(j)) = 1.0;
  return m;
}

}  // namespace cascade
