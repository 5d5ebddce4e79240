#include "blochgeom/projection.hpp"

#include <cmath>
#include <string>

#include "blochgeom/error.hpp"

namespace blochgeom {

namespace {

// Imaginary parts above this signal a non-Hermitian generator.
constexpr double kImagResidueTol = 1e-12;

double real_expectation(const Complex& value) {
  if (std::abs(value.imag()) > kImagResidueTol) {
    throw Error(ErrorKind::InvalidAlgebraElement,
                "expectation value has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

void require_same_dim(int state_dim, const GeneratorBasis& basis) {
  if (state_dim != basis.n) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension " + std::to_string(state_dim) +
                                                  " does not match basis dimension " +
                                                  std::to_string(basis.n));
  }
}

}  // namespace

double pure_state_bloch_norm(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be positive");
  return std::sqrt(2.0 * (n - 1) / n);
}

BlochVector bloch_project(const PureState& state, const GeneratorBasis& basis) {
  require_same_dim(state.dim(), basis);
  const ComplexVector& psi = state.amplitudes();
  BlochVector out{basis.n, RealVector(static_cast<Eigen::Index>(basis.size()))};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    out.components(static_cast<Eigen::Index>(a)) = real_expectation(psi.dot(basis[a] * psi));
  }
  return out;
}

BlochVector bloch_project(const DensityMatrix& state, const GeneratorBasis& basis) {
  require_same_dim(state.dim(), basis);
  const ComplexMatrix& rho = state.matrix();
  BlochVector out{basis.n, RealVector(static_cast<Eigen::Index>(basis.size()))};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    // tr(rho T) without forming the product.
    const Complex value = (rho.transpose().cwiseProduct(basis[a])).sum();
    out.components(static_cast<Eigen::Index>(a)) = real_expectation(value);
  }
  return out;
}

double bloch_norm(const BlochVector& v) {
  return v.components.norm();
}

double purity(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return m.squaredNorm();
}

DensityMatrix reconstruct_density(const BlochVector& v, const GeneratorBasis& basis) {
  if (v.n != basis.n || static_cast<std::size_t>(v.size()) != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "Bloch vector and basis disagree on dimension");
  }
  const int n = basis.n;
  ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    rho += 0.5 * v[static_cast<Eigen::Index>(a)] * basis[a];
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho, Eigen::EigenvaluesOnly);
  const double lowest = eig.eigenvalues().minCoeff();
  if (lowest < -1e-8) {
    throw Error(ErrorKind::NotAState,
                "vector lies outside the state body (eigenvalue " + std::to_string(lowest) + ")");
  }
  return DensityMatrix(std::move(rho));
}

}  // namespace blochgeom
