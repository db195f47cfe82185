#include "cascade/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "cascade/error.hpp"

namespace cascade::analytic {

namespace {

constexpr double kIcSlack = 1e-12;

void require_tau(double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
}

double finite_alpha(const SystemParams& params) {
  if (!std::isfinite(params.alpha())) throw UndefinedAlpha();
  return params.alpha();
}

// Exciton populations start equal iff ρ_VV(0) = ρ_HH(0) = (Σ₀ + D₀ − 2ρ_BB(0))/2.
bool equal_excitons(const AdiabaticIC& ic) {
  if (!ic.rho_VV0) return true;
  const double split = 0.5 * (ic.Sigma0 + ic.D0 - 2.0 * ic.rho_BB0);
  return std::abs(*ic.rho_VV0 - split) <= kIcSlack;
}

struct Phase {
  double e;  // e^{−Γt}
  double c;  // cos Ωt
  double s;  // sin Ωt
};

Phase phase(double t, const SystemParams& params) {
  const double w = params.omega_eff() * t;
  return {std::exp(-params.gamma_eff() * t), std::cos(w), std::sin(w)};
}

}  // namespace

NormalizedRates NormalizedRates::from(const SystemParams& params) {
  const double g = params.gamma_eff();
  const double w = params.omega_eff();
  const double n = g * g + w * w;
  return {w / n, g / n};
}

void AdiabaticIC::validate() const {
  if (!std::isfinite(D0) || !std::isfinite(B0_imag) || !std::isfinite(Sigma0) ||
      !std::isfinite(rho_BB0) || !std::isfinite(rho_BG0_plus_GB0))
    throw std::invalid_argument("AdiabaticIC: non-finite field");
  if (std::abs(D0) > Sigma0 + kIcSlack) throw std::invalid_argument("AdiabaticIC: |D0| > Sigma0");
  if (rho_BB0 < -kIcSlack || rho_BB0 > Sigma0 + kIcSlack)
    throw std::invalid_argument("AdiabaticIC: rho_BB0 outside [0, Sigma0]");
  if (rho_VV0 && (*rho_VV0 < -kIcSlack || *rho_VV0 > Sigma0 + kIcSlack))
    throw std::invalid_argument("AdiabaticIC: rho_VV0 outside [0, Sigma0]");
}

AdiabaticIC AdiabaticIC::from_state(const DensityMatrix& rho) {
  using enum BareLevel;
  const auto bg = rho(B, G);
  AdiabaticIC ic;
  ic.rho_BB0 = rho.population(B);
  ic.D0 = ic.rho_BB0 - rho.population(G);
  ic.B0_imag = (bg - std::conj(bg)).imag();
  ic.Sigma0 = rho.trace();
  ic.rho_BG0_plus_GB0 = 2.0 * bg.real();
  ic.rho_VV0 = rho.population(V);
  return ic;
}

AdiabaticIC AdiabaticIC::ground() {
  AdiabaticIC ic;
  ic.D0 = -1.0;
  ic.rho_VV0 = 0.0;
  return ic;
}

AdiabaticIC AdiabaticIC::exciton_v() {
  AdiabaticIC ic;
  ic.rho_VV0 = 1.0;
  return ic;
}

AdiabaticIC AdiabaticIC::dressed(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dressed: sign must be +1 or -1");
  AdiabaticIC ic;
  ic.Sigma0 = 2.0;
  ic.rho_BB0 = 1.0;
  ic.rho_BG0_plus_GB0 = 2.0 * sign;
  ic.rho_VV0 = 0.0;
  return ic;
}

double inversion_D(double t, const AdiabaticIC& ic, const SystemParams& params) {
  require_tau(t);
  const auto [on, gn] = NormalizedRates::from(params);
  const double g = params.gamma_eff();
  const auto [e, c, s] = phase(t, params);
  const double ib0 = -ic.B0_imag;
  const double offset = ic.Sigma0 * g * gn;
  return (ic.D0 + offset) * e * c - (ib0 + ic.Sigma0 * g * on) * e * s - offset;
}

double coherence_B(double t, const AdiabaticIC& ic, const SystemParams& params) {
  require_tau(t);
  const auto [on, gn] = NormalizedRates::from(params);
  const double g = params.gamma_eff();
  const auto [e, c, s] = phase(t, params);
  const double drift = ic.Sigma0 * g * on;
  return (ic.B0_imag - drift) * e * c - (ic.Sigma0 * g * gn + ic.D0) * e * s + drift;
}

double rho_bb(double t, const AdiabaticIC& ic, const SystemParams& params) {
  require_tau(t);
  const auto [on, gn] = NormalizedRates::from(params);
  const double half_w = 0.5 * params.omega_eff();
  const auto [e, c, s] = phase(t, params);
  const double b0 = ic.B0_imag;
  return ic.rho_BB0 * e * e + b0 * half_w * e * (gn * c + on * s - gn * e) -
         ic.D0 * half_w * e * (gn * s - on * c + on * e) +
         ic.Sigma0 * half_w * (0.5 * on * (1.0 - e * e) - gn * e * s);
}

double rho_gg(double t, const AdiabaticIC& ic, const SystemParams& params) {
  return rho_bb(t, ic, params) - inversion_D(t, ic, params);
}

std::complex<double> rho_bg(double t, const AdiabaticIC& ic, const SystemParams& params) {
  const double b = coherence_B(t, ic, params);
  const double e = std::exp(-params.gamma_eff() * t);
  return {0.5 * ic.rho_BG0_plus_GB0 * e, 0.5 * b};
}

double rho_vv_shortcut(double t, const AdiabaticIC& ic, const SystemParams& params) {
  if (!equal_excitons(ic))
    throw std::invalid_argument("rho_vv_shortcut: initial exciton populations differ");
  return 0.5 * (ic.Sigma0 + inversion_D(t, ic, params) - 2.0 * rho_bb(t, ic, params));
}

double rho_vv_integral(double t, const AdiabaticIC& ic, const SystemParams& params) {
  require_tau(t);
  const auto [on, gn] = NormalizedRates::from(params);
  const double g = params.gamma_eff();
  const double w = params.omega_eff();
  const auto [e, c, s] = phase(t, params);
  const double b0 = ic.B0_imag;
  const double vv0 =
      ic.rho_VV0.value_or(0.5 * (ic.Sigma0 + ic.D0 - 2.0 * ic.rho_BB0));
  const double p = b0 * gn + ic.D0 * on;
  const double q = b0 * on - ic.D0 * gn - ic.Sigma0 * gn;
  const double r = -b0 * gn - ic.D0 * on;
  const double e_e2 = e - e * e;
  return vv0 * e + ic.rho_BB0 * e_e2 + 0.5 * g * e * (p * s + q * (1.0 - c)) +
         0.5 * w * r * e_e2 + 0.5 * w * ic.Sigma0 * on * (0.5 * (1.0 + e * e) - e);
}

double rho_vv(double t, const AdiabaticIC& ic, const SystemParams& params) {
  return equal_excitons(ic) ? rho_vv_shortcut(t, ic, params) : rho_vv_integral(t, ic, params);
}

double g2_bvvg(double tau, const SystemParams& params) {
  require_tau(tau);
  const double a = finite_alpha(params);
  const auto [e, c, s] = phase(tau, params);
  // 2e^{−Γτ}cosh Γτ = 1 + e^{−2Γτ}
  return 1.0 + e * e + 2.0 * e * (1.0 + a * (1.0 + c));
}

double g2_vggb(double tau, const SystemParams& params) {
  require_tau(tau);
  finite_alpha(params);
  const auto [e, c, s] = phase(tau, params);
  return 1.0 + e * (e - 2.0 * c);
}

double g2_v_plus_plus_v(double tau, const SystemParams& params) {
  require_tau(tau);
  const double a = finite_alpha(params);
  const auto [e, c, s] = phase(tau, params);
  const double k = 2.0 * (1.0 + a) / (1.0 + 2.0 * a);
  return 1.0 + k * (e * e * (1.0 - 0.5 / (1.0 + a)) + e * (1.0 - a * c / (1.0 + a)));
}

double g2_v_plus_zero_v(double tau, const SystemParams& params) {
  require_tau(tau);
  const double a = finite_alpha(params);
  const auto [e, c, s] = phase(tau, params);
  return 1.0 + (e * e * (1.0 + 2.0 * a) - 2.0 * e * (1.0 + a + a * c)) / (1.0 + 2.0 * a);
}

double g2_plus_vv_plus(double tau, const SystemParams& params) { return g2_bvvg(tau, params); }

double g2_ex_forward(double tau, const SystemParams& params) { return g2_bvvg(tau, params); }

double g2_ex_backward(double tau, const SystemParams& params) {
  require_tau(tau);
  const double a = finite_alpha(params);
  const auto [e, c, s] = phase(tau, params);
  return 1.0 + e * e - 2.0 * a * c * e / (1.0 + 2.0 * a);
}

double conditional_dressed_population(double tau, int sign, const SystemParams& params) {
  require_tau(tau);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto [on, gn] = NormalizedRates::from(params);
  const double gg = params.gamma_eff() * gn;
  // With ΩΩ_n = 1 − ΓΓ_n both 2(1 − ½ΩΩ_n) and ΩΩ_n + 2ΓΓ_n equal 1 + ΓΓ_n;
  // sharing that factor makes the sign = −1 curve vanish exactly at τ = 0.
  const double u = 1.0 + gg;
  const auto [e, c, s] = phase(tau, params);
  const double four_rho = u * (e * e + 1.0) + sign * 2.0 * e * (1.0 - sign * gg * c);
  return 0.25 * four_rho;
}

double conditional_dressed_population_limit(const SystemParams& params) {
  const double w2 = params.omega_eff() * params.omega_eff();
  const double g2 = params.gamma_eff() * params.gamma_eff();
  return (w2 + 2.0 * g2) / (4.0 * (w2 + g2));
}

const Ket& DressedEigensystem::vector(DressedLabel label) const {
  switch (label) {
    case DressedLabel::Plus: return plus;
    case DressedLabel::Minus: return minus;
    case DressedLabel::Zero: return zero;
    case DressedLabel::V: return v;
  }
  throw std::invalid_argument("unknown dressed label");
}

double DressedEigensystem::eigenvalue(DressedLabel label) const {
  switch (label) {
    case DressedLabel::Plus: return e3;
    case DressedLabel::Minus: return e4;
    case DressedLabel::Zero: return e0;
    case DressedLabel::V: return e1;
  }
  throw std::invalid_argument("unknown dressed label");
}

DressedEigensystem dressed_eigensystem(const SystemParams& params) {
  using enum BareLevel;
  const double d = params.delta();
  const double w = params.omega_L();
  const double root = std::sqrt(d * d + 8.0 * w * w);

  DressedEigensystem es;
  es.e1 = d;
  es.e3 = 0.5 * (d + root);
  // (Δ − root)/2 rewritten to avoid cancellation for Ω_L ≪ Δ.
  es.e4 = -4.0 * w * w / (d + root);

  const double n3 = std::sqrt(2.0 * w * w + es.e3 * es.e3);
  es.a1 = w / n3;
  // a2 = Ω_L/√(2Ω_L² + e4²) with e4/Ω_L kept finite as Ω_L → 0.
  const double r4 = -4.0 * w / (d + root);
  es.a2 = 1.0 / std::sqrt(2.0 + r4 * r4);
  es.a3 = 1.0 / std::sqrt(2.0);

  es.plus = Ket::Zero();
  es.plus(index(G)) = es.a1;
  es.plus(index(H)) = es.e3 / n3;
  es.plus(index(B)) = es.a1;

  es.minus = Ket::Zero();
  es.minus(index(G)) = es.a2;
  es.minus(index(H)) = es.a2 * r4;
  es.minus(index(B)) = es.a2;

  es.zero = Ket::Zero();
  es.zero(index(G)) = -es.a3;
  es.zero(index(B)) = es.a3;

  es.v = ket(V);
  return es;
}

}  // namespace cascade::analytic
