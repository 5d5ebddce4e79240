#pragma once

#include <utility>

#include "blochgeom/linalg.hpp"

namespace blochgeom {

/// Proper rotation of the emergent space, d x d.
///
/// Acts on column vectors: Phi(U psi) = R(U) * Phi(psi). The coefficient
/// form U T_i U^dagger = sum_j R'_ij T_j used in row-vector notation is
/// the transpose, R' = R^T.
class Rotation {
 public:
  /// Throws NotSpecialUnitary unless R^T R = I and det R = 1 within 1e-10.
  explicit Rotation(RealMatrix m);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const RealMatrix& matrix() const noexcept { return matrix_; }

  double orthogonality_defect() const;  ///< ||R^T R - I||_F
  double determinant_defect() const;    ///< |det R - 1|

 private:
  RealMatrix matrix_;
};

/// SO(d) membership threshold, absolute.
inline constexpr double kRotationTol = 1e-10;

bool is_special_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// exp(-i angle (axis . sigma) / 2); axis need not be normalized.
ComplexMatrix spin_half_exponential(const Eigen::Vector3d& axis, double angle);

/// R_ij = (1/2) tr(T_i u T_j u^dagger).
Rotation adjoint_rotation(const ComplexMatrix& u, const GeneratorBasis& basis);

/// ||Phi(u psi) - R(u) Phi(psi)||.
double equivariance_residual(const ComplexMatrix& u, const PureState& psi, const GeneratorBasis& basis);

/// (R(u), R(-u)) for u in SU(2), built on the Pauli basis.
std::pair<Rotation, Rotation> covering_check(const ComplexMatrix& u);

/// ||R(u1 u2) - R(u1) R(u2)||_F.
double homomorphism_residual(const ComplexMatrix& u1, const ComplexMatrix& u2, const GeneratorBasis& basis);

}  // namespace blochgeom
