#include "blochgeom/sun_exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blochgeom/error.hpp"
#include "blochgeom/projection.hpp"

namespace blochgeom {

namespace {

void require_n(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "SU(n) needs n >= 2, got " + std::to_string(n));
}

RealVector project_chart_point(const RealVector& x, int n, const GeneratorBasis& basis) {
  ComplexVector v(n);
  for (int j = 0; j < n; ++j) v(j) = Complex{x(j), x(n + j)};
  return bloch_project(PureState::normalized(v), basis).components;
}

}  // namespace

int min_equivariant_dimension(int n) {
  require_n(n);
  return n * n - 1;
}

RealMatrix projection_jacobian(const PureState& psi, const GeneratorBasis& basis, double step) {
  const int n = psi.dim();
  if (n != basis.n) throw Error(ErrorKind::DimensionMismatch, "state and basis differ in dimension");
  RealVector x(2 * n);
  for (int j = 0; j < n; ++j) {
    x(j) = psi.amplitudes()(j).real();
    x(n + j) = psi.amplitudes()(j).imag();
  }
  RealMatrix jac(static_cast<Eigen::Index>(basis.size()), 2 * n);
  for (int c = 0; c < 2 * n; ++c) {
    RealVector plus = x;
    RealVector minus = x;
    plus(c) += step;
    minus(c) -= step;
    jac.col(c) = (project_chart_point(plus, n, basis) - project_chart_point(minus, n, basis)) / (2.0 * step);
  }
  return jac;
}

std::size_t image_tangent_rank(int n, int samples, RngStream& rng, double tol) {
  require_n(n);
  if (samples < 1) throw Error(ErrorKind::Usage, "need at least one sample");
  const GeneratorBasis basis = gell_mann_basis(n);
  std::size_t best = 0;
  for (int s = 0; s < samples; ++s) {
    const PureState psi = haar_pure_state(n, rng);
    best = std::max(best, numerical_rank(projection_jacobian(psi, basis), tol));
  }
  return best;
}

PureNormCheck pure_norm_constant(int n, int samples, RngStream& rng) {
  require_n(n);
  if (samples < 1) throw Error(ErrorKind::Usage, "need at least one sample");
  const GeneratorBasis basis = gell_mann_basis(n);
  PureNormCheck check{pure_state_bloch_norm(n), 0.0};
  for (int s = 0; s < samples; ++s) {
    const double norm = bloch_norm(bloch_project(haar_pure_state(n, rng), basis));
    check.max_deviation = std::max(check.max_deviation, std::abs(norm - check.constant));
  }
  return check;
}

ExclusionReport exclusion_report(int n, RngStream& rng, int samples) {
  ExclusionReport r;
  r.n = n;
  r.generator_count = min_equivariant_dimension(n);
  r.image_tangent_rank = image_tangent_rank(n, samples, rng);
  r.sphere_dim = n * n - 2;
  const PureNormCheck norm = pure_norm_constant(n, samples, rng);
  r.pure_norm = norm.constant;
  r.pure_norm_deviation = norm.max_deviation;
  r.is_directional_only = r.image_tangent_rank == static_cast<std::size_t>(r.sphere_dim);
  return r;
}

}  // namespace blochgeom
