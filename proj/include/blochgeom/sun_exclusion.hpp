#pragma once

#include <cstddef>

#include "blochgeom/linalg.hpp"

namespace blochgeom {

/// Central-difference step on the real/imaginary amplitude chart.
inline constexpr double kTangentStep = 1e-6;
/// Relative singular-value cut separating tangent directions from the
/// two gauge directions and finite-difference noise.
inline constexpr double kTangentRankTol = 1e-7;

/// dim su(n) = n^2 - 1: lower bound on the target dimension of any
/// equivariant, non-degenerate projection of C^n.
int min_equivariant_dimension(int n);

/// Jacobian of x -> Phi(x / |x|) at psi, x in R^{2n} = (Re psi, Im psi).
/// Shape (n^2 - 1) x 2n.
RealMatrix projection_jacobian(const PureState& psi, const GeneratorBasis& basis,
                               double step = kTangentStep);

/// Largest Jacobian rank over `samples` Haar base points; 2(n - 1) generically.
std::size_t image_tangent_rank(int n, int samples, RngStream& rng, double tol = kTangentRankTol);

struct PureNormCheck {
  double constant = 0.0;       ///< sqrt(2(n-1)/n)
  double max_deviation = 0.0;  ///< max over samples of | |Phi(psi)| - constant |
};

PureNormCheck pure_norm_constant(int n, int samples, RngStream& rng);

struct ExclusionReport {
  int n = 0;
  int generator_count = 0;
  std::size_t image_tangent_rank = 0;
  int sphere_dim = 0;  ///< n^2 - 2, dimension of the sphere in R^{n^2-1}
  double pure_norm = 0.0;
  double pure_norm_deviation = 0.0;
  bool is_directional_only = false;
};

inline constexpr int kExclusionSamples = 10;

ExclusionReport exclusion_report(int n, RngStream& rng, int samples = kExclusionSamples);

}  // namespace blochgeom
