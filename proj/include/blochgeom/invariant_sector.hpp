#pragma once

#include <array>
#include <cstdint>

#include "blochgeom/linalg.hpp"

namespace blochgeom {

/// Largest valence handled by the dense spin-operator construction (2^12 states).
inline constexpr int kMaxValence = 12;
inline constexpr double kDefaultKernelTol = 1e-8;

/// C_m = (2m)! / (m! (m+1)!). Throws Overflow if it does not fit in 64 bits.
std::uint64_t catalan(int m);

/// Dimension of the SU(2)-invariant subspace of (C^2)^{(x)k}: C_{k/2} for even k, 0 for odd k.
std::uint64_t invariant_dimension_formula(int k);

/// S_a = sum_i I^{(x)(i-1)} (x) T_a/2 (x) I^{(x)(k-i)} for a = x, y, z.
std::array<ComplexMatrix, 3> total_spin_operators(int k);

struct InvariantSectorReport {
  int k = 0;
  std::uint64_t formula_dim = 0;
  std::uint64_t numeric_dim = 0;
  /// Largest discarded singular value relative to the largest one (0 if none discarded).
  double max_residual = 0.0;
  /// Smallest retained over largest discarded singular value (+inf if none discarded).
  double gap_ratio = 0.0;

  bool agrees() const noexcept { return formula_dim == numeric_dim; }
};

/// Kernel dimension of [S_x; S_y; S_z] (3 * 2^k rows, 2^k columns).
InvariantSectorReport invariant_dimension_numeric(int k, double tol = kDefaultKernelTol);

/// Orthonormal basis (columns) of the joint kernel of the total spin operators.
ComplexMatrix invariant_subspace_basis(int k, double tol = kDefaultKernelTol);

}  // namespace blochgeom
