#include "cascade/two_level.hpp"

namespace cascade {

namespace {
constexpr int kG = 0;
constexpr int kB = 1;
}  // namespace

TwoLevelOperator two_level_rhs(const TwoLevelOperator& rho, double omega2, double gamma2) {
  TwoLevelOperator h = TwoLevelOperator::Zero();
  h(kG, kB) = omega2;
  h(kB, kG) = omega2;
  TwoLevelOperator j = TwoLevelOperator::Zero();
  j(kG, kB) = 1.0;  // B → G
  const TwoLevelOperator jdj = j.adjoint() * j;
  return std::complex<double>(0.0, -1.0) * (h * rho - rho * h) +
         gamma2 * (2.0 * j * rho * j.adjoint() - jdj * rho - rho * jdj);
}

std::vector<TwoLevelOperator> evolve_two_level(const TwoLevelOperator& rho0, double omega2,
                                               double gamma2, std::span<const double> t_grid,
                                               const IntegratorOptions& opts) {
  std::vector<TwoLevelOperator> out;
  out.reserve(t_grid.size());
  integrate_dopri5<TwoLevelOperator>(
      [=](const TwoLevelOperator& r) { return two_level_rhs(r, omega2, gamma2); }, rho0, t_grid,
      [&](std::size_t, double, const TwoLevelOperator& r) { out.push_back(r); }, opts);
  return out;
}

}  // namespace cascade
