#include "cascade/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "cascade/error.hpp"

namespace cascade {

using enum BareLevel;

Operator build_hamiltonian(const SystemParams& params) {
  const double d = params.delta();
  const double w = params.omega_L();
  Operator h = Operator::Zero();
  h(index(H), index(H)) = d;
  h(index(V), index(V)) = d;
  h(index(G), index(H)) = w;
  h(index(H), index(G)) = w;
  h(index(B), index(H)) = w;
  h(index(H), index(B)) = w;
  return h;
}

Operator dissipator(const Operator& jump, const Operator& rho) {
  const Operator jdj = jump.adjoint() * jump;
  return 2.0 * jump * rho * jump.adjoint() - jdj * rho - rho * jdj;
}

std::array<Operator, 4> decay_channels() {
  return {sigma(G, H), sigma(G, V), sigma(H, B), sigma(V, B)};
}

Operator liouvillian_rhs(const Operator& rho, const SystemParams& params) {
  const Operator h = build_hamiltonian(params);
  Operator out = Complex(0.0, -1.0) * (h * rho - rho * h);
  for (const auto& j : decay_channels()) out += params.gamma_X() * dissipator(j, rho);
  return out;
}

Liouvillian::Liouvillian(const SystemParams& params)
    : params_(params), hamiltonian_(build_hamiltonian(params)) {
  Operator jdj = Operator::Zero();
  for (const auto& j : decay_channels()) jdj += j.adjoint() * j;
  effective_ = hamiltonian_ - Complex(0.0, params.gamma_X()) * jdj;
}

Operator Liouvillian::operator()(const Operator& rho) const {
  // −i(H_eff ρ − ρ H_eff†) + 2Γ_X Σ JρJ†. Every channel is a flip |a⟩⟨b|,
  // so JρJ† only moves ρ_bb onto the (a, a) diagonal.
  Operator out = Complex(0.0, -1.0) * (effective_ * rho - rho * effective_.adjoint());
  const double g2 = 2.0 * params_.gamma_X();
  const Complex hh = rho(index(H), index(H));
  const Complex vv = rho(index(V), index(V));
  const Complex bb = rho(index(B), index(B));
  out(index(G), index(G)) += g2 * (hh + vv);
  out(index(H), index(H)) += g2 * bb;
  out(index(V), index(V)) += g2 * bb;
  return out;
}

SuperOperator Liouvillian::superoperator() const {
  SuperOperator s;
  for (int k = 0; k < 16; ++k) {
    Operator basis = Operator::Zero();
    basis(k / 4, k % 4) = 1.0;
    const Operator image = (*this)(basis);
    for (int m = 0; m < 16; ++m) s(m, k) = image(m / 4, m % 4);
  }
  return s;
}

double Liouvillian::max_frequency() const {
  const double d = params_.delta();
  const double w = params_.omega_L();
  return std::sqrt(d * d + 8.0 * w * w) + 4.0 * params_.gamma_X();
}

void propagate(const Operator& rho0, const Liouvillian& generator, std::span<const double> t_grid,
               const std::function<void(std::size_t, double, const Operator&)>& observe,
               const IntegratorOptions& opts) {
  IntegratorOptions capped = opts;
  capped.max_step = std::min(opts.max_step, 1.0 / generator.max_frequency());
  integrate_dopri5<Operator>([&generator](const Operator& r) { return generator(r); }, rho0, t_grid,
                             observe, capped);
}

std::vector<DensityMatrix> evolve(const DensityMatrix& rho0, const SystemParams& params,
                                  std::span<const double> t_grid, const IntegratorOptions& opts) {
  if (t_grid.empty()) throw std::invalid_argument("evolve: time grid is empty");
  if (t_grid.front() < 0.0) throw std::invalid_argument("evolve: time grid must start at t >= 0");
  std::vector<DensityMatrix> out;
  out.reserve(t_grid.size());
  const Liouvillian generator(params);
  propagate(rho0.matrix(), generator, t_grid,
            [&](std::size_t, double, const Operator& r) {
              out.push_back(DensityMatrix::unchecked(r, rho0.normalization()));
            },
            opts);
  return out;
}

double steady_state_residual(const DensityMatrix& rho, const SystemParams& params) {
  return liouvillian_rhs(rho.matrix(), params).cwiseAbs().maxCoeff();
}

namespace {

DensityMatrix finalize(const Operator& raw) {
  Operator herm = 0.5 * (raw + raw.adjoint());
  herm /= herm.trace();
  return DensityMatrix(herm);
}

}  // namespace

DensityMatrix steady_state_by_integration(const SystemParams& params, const SteadyStateOptions& opts) {
  const double horizon = opts.horizon_factor / params.gamma_eff();
  const double grid[] = {0.0, horizon};
  Operator last = DensityMatrix::projector(G).matrix();
  propagate(last, Liouvillian(params), grid,
            [&](std::size_t, double, const Operator& r) { last = r; }, opts.fallback_integrator);
  DensityMatrix rho = finalize(last);
  if (steady_state_residual(rho, params) > opts.residual_tol)
    throw ConvergenceError("steady state not reached within horizon " + std::to_string(horizon) +
                           " ps");
  return rho;
}

DensityMatrix steady_state(const SystemParams& params, const SteadyStateOptions& opts) {
  SuperOperator a = Liouvillian(params).superoperator();
  // The four population rows sum to zero (trace preservation), so the ρ_GG
  // row can carry the normalization Tr ρ = 1 instead.
  a.row(0).setZero();
  for (int i = 0; i < 4; ++i) a(0, 5 * i) = 1.0;
  Eigen::Matrix<Complex, 16, 1> rhs = Eigen::Matrix<Complex, 16, 1>::Zero();
  rhs(0) = 1.0;
  const Eigen::Matrix<Complex, 16, 1> v = a.fullPivLu().solve(rhs);

  Operator raw;
  for (int m = 0; m < 16; ++m) raw(m / 4, m % 4) = v(m);
  if (raw.allFinite()) {
    DensityMatrix rho = finalize(raw);
    if (steady_state_residual(rho, params) <= opts.residual_tol) return rho;
  }
  return steady_state_by_integration(params, opts);
}

}  // namespace cascade
