#pragma once

#include "blochgeom/linalg.hpp"

namespace blochgeom {

/// Expectation values (<T_1>, ..., <T_{n^2-1}>) of a state against a
/// generator basis. For n = 2 and the Pauli basis this is the Bloch vector.
struct BlochVector {
  int n = 0;
  RealVector components;

  Eigen::Index size() const noexcept { return components.size(); }
  double operator[](Eigen::Index a) const { return components(a); }
};

/// Norm of the image of any pure state: sqrt(2(n-1)/n). Equals 1 at n = 2.
double pure_state_bloch_norm(int n);

BlochVector bloch_project(const PureState& state, const GeneratorBasis& basis);
BlochVector bloch_project(const DensityMatrix& state, const GeneratorBasis& basis);

double bloch_norm(const BlochVector& v);

/// tr(rho^2).
double purity(const DensityMatrix& rho);

/// rho = I/n + (1/2) sum_a v_a T_a. Throws NotAState when the result has
/// an eigenvalue below -1e-8.
DensityMatrix reconstruct_density(const BlochVector& v, const GeneratorBasis& basis);

}  // namespace blochgeom
