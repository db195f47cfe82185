#include "cascade/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace cascade {

DensityMatrix::DensityMatrix(const Operator& m, Normalization norm) : m_(m), norm_(norm) {
  if (!m.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if (hermiticity_error() > kHermitianTol)
    throw std::invalid_argument("density matrix is not Hermitian (error " +
                                std::to_string(hermiticity_error()) + ")");
  if (norm == Normalization::Normalized) {
    if (std::abs(m.trace() - Complex(1.0)) > kTraceTol)
      throw std::invalid_argument("density matrix trace is " + std::to_string(m.trace().real()) +
                                  ", expected 1");
    if (min_eigenvalue() < kPositivityTol)
      throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::unchecked(const Operator& m, Normalization norm) {
  return DensityMatrix(m, norm, true);
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
  const double n = psi.squaredNorm();
  if (!(n > 0.0)) throw std::invalid_argument("cannot build a state from a zero vector");
  return DensityMatrix(psi * psi.adjoint() / n);
}

DensityMatrix DensityMatrix::projector(BareLevel level) { return pure(ket(level)); }

double DensityMatrix::expectation(const Ket& psi) const { return psi.dot(m_ * psi).real(); }

double DensityMatrix::hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
  // Eigenvalues of the Hermitian part; the anti-Hermitian residue is reported
  // separately by hermiticity_error().
  const Operator herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::renormalized() const {
  const Complex tr = m_.trace();
  if (std::abs(tr) == 0.0) throw std::domain_error("cannot renormalize a zero-trace matrix");
  return DensityMatrix(m_ / tr, Normalization::Normalized, true);
}

}  // namespace cascade
