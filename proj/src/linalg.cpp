#include "blochgeom/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "blochgeom/error.hpp"

namespace blochgeom {

namespace {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " requires a square matrix");
  }
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_anti_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m + m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const auto n = m.rows();
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n)) <= tol;
}

bool is_traceless(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && std::abs(m.trace()) <= tol;
}

GeneratorBasis pauli_basis() {
  return gell_mann_basis(2);
}

GeneratorBasis gell_mann_basis(int n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidDimension, "generator basis needs n >= 2, got " + std::to_string(n));
  }
  const Complex i{0.0, 1.0};
  GeneratorBasis basis{n, {}};
  basis.generators.reserve(static_cast<std::size_t>(n * n - 1));

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix t = ComplexMatrix::Zero(n, n);
      t(j, k) = 1.0;
      t(k, j) = 1.0;
      basis.generators.push_back(std::move(t));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix t = ComplexMatrix::Zero(n, n);
      t(j, k) = -i;
      t(k, j) = i;
      basis.generators.push_back(std::move(t));
    }
  }
  for (int l = 1; l < n; ++l) {
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    ComplexMatrix t = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < l; ++j) t(j, j) = scale;
    t(l, l) = -scale * l;
    basis.generators.push_back(std::move(t));
  }
  return basis;
}

PureState::PureState(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorKind::InvalidDimension, "pure state needs at least one amplitude");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol) {
    throw Error(ErrorKind::NotAState, "amplitudes are not normalized");
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::NotAState, "cannot normalize a zero or non-finite vector");
  }
  return PureState(v / norm);
}

PureState PureState::basis_state(int n, int index) {
  if (n < 1 || index < 0 || index >= n) {
    throw Error(ErrorKind::InvalidDimension, "basis state index out of range");
  }
  ComplexVector v = ComplexVector::Zero(n);
  v(index) = 1.0;
  return PureState(std::move(v));
}

ComplexMatrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "density matrix");
  if (matrix_.rows() == 0) {
    throw Error(ErrorKind::InvalidDimension, "density matrix must be non-empty");
  }
  if (!is_hermitian(matrix_, 1e-12)) {
    throw Error(ErrorKind::NotAState, "density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > 1e-12) {
    throw Error(ErrorKind::NotAState, "density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(matrix_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw Error(ErrorKind::NotAState, "density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

DensityMatrix DensityMatrix::mixture(double p, const PureState& psi1, const PureState& psi2) {
  if (psi1.dim() != psi2.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "mixture components differ in dimension");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::NotAState, "mixture weight outside [0, 1]");
  }
  ComplexMatrix rho = p * psi1.projector() + (1.0 - p) * psi2.projector();
  // Re-symmetrize so rounding never trips the Hermiticity check.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

PureState haar_pure_state(int n, RngStream& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "state dimension must be >= 1");
  ComplexVector v(n);
  for (int j = 0; j < n; ++j) {
    const double re = rng.standard_normal();
    const double im = rng.standard_normal();
    v(j) = Complex{re, im};
  }
  return PureState::normalized(v);
}

ComplexMatrix haar_special_unitary(int n, RngStream& rng) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "SU(n) needs n >= 2");
  ComplexMatrix g(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double re = rng.standard_normal();
      const double im = rng.standard_normal();
      g(r, c) = Complex{re, im} / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex{1.0, 0.0};
  }
  const Complex det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / n);
  return q;
}

double killing_form(const ComplexMatrix& x, const ComplexMatrix& y, int n) {
  if (x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "Killing form operands must be n x n");
  }
  constexpr double tol = 1e-10;
  if (!is_anti_hermitian(x, tol) || !is_anti_hermitian(y, tol) || !is_traceless(x, tol) ||
      !is_traceless(y, tol)) {
    throw Error(ErrorKind::InvalidAlgebraElement,
                "Killing form expects anti-Hermitian traceless inputs (multiply Hermitian generators by i)");
  }
  return (2.0 * n * (x * y).trace()).real();
}

RealVector singular_values(const RealMatrix& m) {
  const auto rows = static_cast<lapack_int>(m.rows());
  const auto cols = static_cast<lapack_int>(m.cols());
  if (rows == 0 || cols == 0) return RealVector(0);
  RealMatrix a = m;
  RealVector s(std::min(rows, cols));
  const lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, a.data(), rows, s.data(),
                                         nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw Error(ErrorKind::ResourceLimit, "dgesdd failed with info " + std::to_string(info));
  }
  return s;
}

RealVector singular_values(const ComplexMatrix& m) {
  const auto rows = static_cast<lapack_int>(m.rows());
  const auto cols = static_cast<lapack_int>(m.cols());
  if (rows == 0 || cols == 0) return RealVector(0);
  ComplexMatrix a = m;
  RealVector s(std::min(rows, cols));
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, reinterpret_cast<lapack_complex_double*>(a.data()),
                     rows, s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw Error(ErrorKind::ResourceLimit, "zgesdd failed with info " + std::to_string(info));
  }
  return s;
}

std::size_t rank_from_singular_values(const RealVector& s, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Usage, "rank tolerance must be positive");
  if (s.size() == 0) return 0;
  const double top = s.maxCoeff();
  if (!(top > 0.0)) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * top) ++rank;
  }
  return rank;
}

std::size_t numerical_rank(const RealMatrix& m, double tol) {
  return rank_from_singular_values(singular_values(m), tol);
}

std::size_t numerical_rank(const ComplexMatrix& m, double tol) {
  return rank_from_singular_values(singular_values(m), tol);
}

std::size_t kernel_dimension(const RealMatrix& m, double tol) {
  return static_cast<std::size_t>(m.cols()) - numerical_rank(m, tol);
}

std::size_t kernel_dimension(const ComplexMatrix& m, double tol) {
  return static_cast<std::size_t>(m.cols()) - numerical_rank(m, tol);
}

}  // namespace blochgeom
