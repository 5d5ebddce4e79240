#include "blochgeom/equivariance.hpp"

#include <cmath>
#include <string>

#include "blochgeom/error.hpp"
#include "blochgeom/projection.hpp"

namespace blochgeom {

Rotation::Rotation(RealMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "rotation must be a non-empty square matrix");
  }
  if (orthogonality_defect() > kRotationTol || determinant_defect() > kRotationTol) {
    throw Error(ErrorKind::NotSpecialUnitary, "matrix is not in SO(d)");
  }
}

double Rotation::orthogonality_defect() const {
  const auto d = matrix_.rows();
  return (matrix_.transpose() * matrix_ - RealMatrix::Identity(d, d)).norm();
}

double Rotation::determinant_defect() const {
  return std::abs(matrix_.determinant() - 1.0);
}

bool is_special_unitary(const ComplexMatrix& u, double tol) {
  return is_unitary(u, tol) && std::abs(u.determinant() - Complex{1.0, 0.0}) <= tol;
}

ComplexMatrix spin_half_exponential(const Eigen::Vector3d& axis, double angle) {
  const double len = axis.norm();
  if (!(len > 0.0)) throw Error(ErrorKind::InvalidDimension, "rotation axis must be nonzero");
  const Eigen::Vector3d n = axis / len;
  const GeneratorBasis pauli = pauli_basis();
  const ComplexMatrix n_sigma = n.x() * pauli[0] + n.y() * pauli[1] + n.z() * pauli[2];
  const Complex i{0.0, 1.0};
  return std::cos(angle / 2.0) * ComplexMatrix::Identity(2, 2) - i * std::sin(angle / 2.0) * n_sigma;
}

Rotation adjoint_rotation(const ComplexMatrix& u, const GeneratorBasis& basis) {
  if (u.rows() != basis.n || u.cols() != basis.n) {
    throw Error(ErrorKind::DimensionMismatch, "group element and basis differ in dimension");
  }
  if (!is_special_unitary(u)) {
    throw Error(ErrorKind::NotSpecialUnitary, "adjoint rotation needs an element of SU(n)");
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  const ComplexMatrix u_dag = u.adjoint();
  RealMatrix r(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const ComplexMatrix conj = u * basis[static_cast<std::size_t>(j)] * u_dag;
    for (Eigen::Index i = 0; i < d; ++i) {
      // tr(T_i C) = sum_kl (T_i)_kl C_lk; generators are Hermitian so
      // (T_i)^T = conj(T_i).
      const Complex tr = (basis[static_cast<std::size_t>(i)].transpose().cwiseProduct(conj)).sum();
      if (std::abs(tr.imag()) > 1e-10) {
        throw Error(ErrorKind::InvalidAlgebraElement, "adjoint coefficient has an imaginary part");
      }
      r(i, j) = 0.5 * tr.real();
    }
  }
  return Rotation(std::move(r));
}

double equivariance_residual(const ComplexMatrix& u, const PureState& psi, const GeneratorBasis& basis) {
  if (psi.dim() != basis.n) {
    throw Error(ErrorKind::DimensionMismatch, "state and basis differ in dimension");
  }
  const Rotation r = adjoint_rotation(u, basis);
  const PureState moved(u * psi.amplitudes(), 1e-10);
  const BlochVector lhs = bloch_project(moved, basis);
  const BlochVector rhs = bloch_project(psi, basis);
  return (lhs.components - r.matrix() * rhs.components).norm();
}

std::pair<Rotation, Rotation> covering_check(const ComplexMatrix& u) {
  const GeneratorBasis pauli = pauli_basis();
  return {adjoint_rotation(u, pauli), adjoint_rotation(-u, pauli)};
}

double homomorphism_residual(const ComplexMatrix& u1, const ComplexMatrix& u2, const GeneratorBasis& basis) {
  const Rotation r12 = adjoint_rotation(u1 * u2, basis);
  const Rotation r1 = adjoint_rotation(u1, basis);
  const Rotation r2 = adjoint_rotation(u2, basis);
  return (r12.matrix() - r1.matrix() * r2.matrix()).norm();
}

}  // namespace blochgeom
