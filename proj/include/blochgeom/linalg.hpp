#pragma once

// Dense small-matrix complex linear algebra shared by every module:
// generator bases, quantum state types, Haar sampling, the Killing form
// and SVD-based rank/kernel primitives.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "blochgeom/rng.hpp"

namespace blochgeom {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_anti_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);
bool is_traceless(const ComplexMatrix& m, double tol);

/// Ordered traceless Hermitian generators of su(n), normalized so that
/// tr(T_a T_b) = 2 delta_ab.
struct GeneratorBasis {
  int n = 0;
  std::vector<ComplexMatrix> generators;

  std::size_t size() const noexcept { return generators.size(); }
  const ComplexMatrix& operator[](std::size_t a) const { return generators[a]; }
};

/// (sigma_x, sigma_y, sigma_z), in that order.
GeneratorBasis pauli_basis();

/// Generalized Gell-Mann generators for su(n): symmetric off-diagonal
/// pairs, antisymmetric pairs, then diagonal ones. Pairs (j, k), j < k,
/// run in lexicographic order; n = 2 yields the Pauli order.
GeneratorBasis gell_mann_basis(int n);

/// Normalized vector in C^n.
class PureState {
 public:
  /// Throws NotAState unless the squared norm is 1 within tol.
  explicit PureState(ComplexVector amplitudes, double tol = 1e-12);

  /// Normalizes `v` (which must be nonzero) and wraps it.
  static PureState normalized(const ComplexVector& v);
  static PureState basis_state(int n, int index);

  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  ComplexMatrix projector() const;

 private:
  ComplexVector amplitudes_;
};

/// Positive semidefinite, unit-trace Hermitian matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and eigenvalues >= -1e-10.
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n);
  /// p |psi1><psi1| + (1 - p) |psi2><psi2|, p in [0, 1].
  static DensityMatrix mixture(double p, const PureState& psi1, const PureState& psi2);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Haar (Fubini-Study) random pure state: 2n standard normals, normalized.
PureState haar_pure_state(int n, RngStream& rng);

/// Haar random element of SU(n): QR of a Ginibre matrix with the diagonal
/// phase correction, then the global phase fixed so det = 1.
ComplexMatrix haar_special_unitary(int n, RngStream& rng);

/// Killing form of su(n), 2n tr(xy), for anti-Hermitian traceless x, y.
double killing_form(const ComplexMatrix& x, const ComplexMatrix& y, int n);

/// Singular values in descending order (LAPACK gesdd, values only).
RealVector singular_values(const RealMatrix& m);
RealVector singular_values(const ComplexMatrix& m);

/// Count of singular values above tol * (largest singular value).
std::size_t numerical_rank(const RealMatrix& m, double tol = kDefaultRankTol);
std::size_t numerical_rank(const ComplexMatrix& m, double tol = kDefaultRankTol);

std::size_t kernel_dimension(const RealMatrix& m, double tol = kDefaultRankTol);
std::size_t kernel_dimension(const ComplexMatrix& m, double tol = kDefaultRankTol);

/// Rank given precomputed descending singular values.
std::size_t rank_from_singular_values(const RealVector& s, double tol);

}  // namespace blochgeom
