#include "blochgeom/invariant_sector.hpp"

#include <limits>
#include <string>

#include "blochgeom/error.hpp"

namespace blochgeom {

namespace {

void require_valence(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidDimension, "valence must be >= 1");
  if (k > kMaxValence) {
    throw Error(ErrorKind::ResourceLimit,
                "valence " + std::to_string(k) + " exceeds the dense limit " + std::to_string(kMaxValence));
  }
}

// Site 0 is the leftmost tensor factor, i.e. the most significant bit of
// the computational-basis index. sigma_x flips the site bit, sigma_y flips
// it with phase +i (0 -> 1) or -i (1 -> 0), sigma_z is diagonal.
struct SiteAction {
  Eigen::Index target;
  double x;
  double y_imag;
};

SiteAction site_action(Eigen::Index b, int site, int k) {
  const Eigen::Index mask = Eigen::Index{1} << (k - 1 - site);
  const bool up = (b & mask) == 0;
  return {b ^ mask, 0.5, up ? 0.5 : -0.5};
}

double sz_diagonal(Eigen::Index b, int k) {
  double sz = 0.0;
  for (int site = 0; site < k; ++site) {
    sz += ((b >> (k - 1 - site)) & 1) == 0 ? 0.5 : -0.5;
  }
  return sz;
}

// Real matrix with the same singular values as [S_x; S_y; S_z]. S_x and S_z
// are real and S_y is purely imaginary, so scaling the S_y block by -i
// (a unitary row operation) leaves a real stack.
RealMatrix real_spin_stack(int k) {
  const Eigen::Index dim = Eigen::Index{1} << k;
  RealMatrix stack = RealMatrix::Zero(3 * dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (int site = 0; site < k; ++site) {
      const SiteAction act = site_action(b, site, k);
      stack(act.target, b) += act.x;
      stack(dim + act.target, b) += act.y_imag;
    }
    stack(2 * dim + b, b) = sz_diagonal(b, k);
  }
  return stack;
}

}  // namespace

std::uint64_t catalan(int m) {
  if (m < 0) throw Error(ErrorKind::InvalidDimension, "Catalan index must be >= 0");
  // C_{j+1} = C_j * 2(2j+1) / (j+2); the division is exact at every step.
  unsigned __int128 c = 1;
  for (int j = 0; j < m; ++j) {
    c = c * (2u * (2u * static_cast<unsigned>(j) + 1u)) / (static_cast<unsigned>(j) + 2u);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorKind::Overflow, "Catalan number C_" + std::to_string(m) + " exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t invariant_dimension_formula(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidDimension, "valence must be >= 0");
  return k % 2 == 0 ? catalan(k / 2) : 0;
}

std::array<ComplexMatrix, 3> total_spin_operators(int k) {
  require_valence(k);
  const Eigen::Index dim = Eigen::Index{1} << k;
  const Complex i{0.0, 1.0};
  std::array<ComplexMatrix, 3> ops;
  for (auto& op : ops) op = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (int site = 0; site < k; ++site) {
      const SiteAction act = site_action(b, site, k);
      ops[0](act.target, b) += act.x;
      ops[1](act.target, b) += i * act.y_imag;
    }
    ops[2](b, b) = sz_diagonal(b, k);
  }
  return ops;
}

InvariantSectorReport invariant_dimension_numeric(int k, double tol) {
  require_valence(k);
  const RealMatrix stack = real_spin_stack(k);
  const RealVector s = singular_values(stack);
  const std::size_t rank = rank_from_singular_values(s, tol);

  InvariantSectorReport report;
  report.k = k;
  report.formula_dim = invariant_dimension_formula(k);
  report.numeric_dim = static_cast<std::uint64_t>(stack.cols()) - rank;
  const double top = s.size() > 0 ? s(0) : 0.0;
  if (rank < static_cast<std::size_t>(s.size()) && top > 0.0) {
    const double discarded = s(static_cast<Eigen::Index>(rank));
    report.max_residual = discarded / top;
    const double retained = rank > 0 ? s(static_cast<Eigen::Index>(rank) - 1) : 0.0;
    report.gap_ratio = discarded > 0.0 ? retained / discarded : std::numeric_limits<double>::infinity();
  } else {
    report.max_residual = 0.0;
    report.gap_ratio = std::numeric_limits<double>::infinity();
  }
  return report;
}

ComplexMatrix invariant_subspace_basis(int k, double tol) {
  require_valence(k);
  const RealMatrix stack = real_spin_stack(k);
  Eigen::BDCSVD<RealMatrix> svd(stack, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const std::size_t rank = rank_from_singular_values(s, tol);
  const Eigen::Index kernel = stack.cols() - static_cast<Eigen::Index>(rank);
  return svd.matrixV().rightCols(kernel).cast<Complex>();
}

}  // namespace blochgeom
