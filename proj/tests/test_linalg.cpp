#include <gtest/gtest.h>

#include <cmath>

#include "blochgeom/error.hpp"
#include "blochgeom/linalg.hpp"
#include "blochgeom/projection.hpp"
#include "oracles.hpp"

using namespace blochgeom;

namespace {

const Complex I{0.0, 1.0};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(PauliBasis, MatchesStandardMatricesInOrder) {
  const GeneratorBasis p = pauli_basis();
  ASSERT_EQ(p.n, 2);
  ASSERT_EQ(p.size(), 3u);
  for (int a = 0; a < 3; ++a) EXPECT_EQ(max_abs(p[a] - oracle::sigma(a)), 0.0) << a;
  EXPECT_EQ(p[2](0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(p[2](1, 1), Complex(-1.0, 0.0));
}

TEST(PauliBasis, ProductAndCommutatorRelations) {
  const GeneratorBasis p = pauli_basis();
  EXPECT_NEAR(std::abs((p[0] * p[1]).trace()), 0.0, 1e-15);
  EXPECT_LT(max_abs(p[0] * p[1] - p[1] * p[0] - 2.0 * I * p[2]), 1e-15);
  // sigma_i sigma_j = delta_ij I + i eps_ijk sigma_k
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  for (int i = 0; i < 3; ++i) {
    EXPECT_LT(max_abs(p[i] * p[i] - id), 1e-15);
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    EXPECT_LT(max_abs(p[i] * p[j] - I * p[k]), 1e-15);
  }
}

TEST(GellMannBasis, RejectsDimensionBelowTwo) {
  for (int n : {-1, 0, 1}) {
    try {
      gell_mann_basis(n);
      FAIL() << "expected error for n=" << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidDimension);
    }
  }
}

TEST(GellMannBasis, ReducesToPauliAtTwo) {
  const GeneratorBasis g = gell_mann_basis(2);
  const GeneratorBasis p = pauli_basis();
  ASSERT_EQ(g.size(), 3u);
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(max_abs(g[a] - p[a]), 0.0);
}

TEST(GellMannBasis, CountsAndGramMatrix) {
  for (int n = 2; n <= 5; ++n) {
    const GeneratorBasis g = gell_mann_basis(n);
    ASSERT_EQ(g.size(), static_cast<std::size_t>(n * n - 1));
    for (std::size_t a = 0; a < g.size(); ++a) {
      EXPECT_TRUE(is_hermitian(g[a], 1e-12));
      EXPECT_TRUE(is_traceless(g[a], 1e-12));
      for (std::size_t b = 0; b < g.size(); ++b) {
        const Complex gram = (g[a] * g[b]).trace();
        EXPECT_NEAR(gram.real(), a == b ? 2.0 : 0.0, 1e-12) << n << " " << a << " " << b;
        EXPECT_NEAR(gram.imag(), 0.0, 1e-12);
      }
    }
  }
  EXPECT_EQ(gell_mann_basis(3).size(), 8u);
  EXPECT_EQ(gell_mann_basis(4).size(), 15u);
}

TEST(GellMannBasis, SpansTracelessHermitianMatrices) {
  // Linear independence over R: rank of the real-flattened generators is n^2 - 1.
  const int n = 4;
  const GeneratorBasis g = gell_mann_basis(n);
  RealMatrix flat(2 * n * n, static_cast<Eigen::Index>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (int e = 0; e < n * n; ++e) {
      flat(e, static_cast<Eigen::Index>(a)) = g[a](e % n, e / n).real();
      flat(n * n + e, static_cast<Eigen::Index>(a)) = g[a](e % n, e / n).imag();
    }
  }
  Eigen::JacobiSVD<RealMatrix> svd(flat);
  EXPECT_GT(svd.singularValues().minCoeff(), 0.5);
}

TEST(PureState, RejectsUnnormalizedAmplitudes) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PureState{v}, Error);
  EXPECT_NO_THROW(PureState::normalized(v));
  EXPECT_THROW(PureState::normalized(ComplexVector::Zero(2)), Error);
}

TEST(DensityMatrix, ValidatesStateConditions) {
  ComplexMatrix not_unit_trace = ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{not_unit_trace}, Error);
  ComplexMatrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix{negative}, Error);
  ComplexMatrix non_hermitian(2, 2);
  non_hermitian << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix{non_hermitian}, Error);
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
}

TEST(HaarPureState, NormalizedAndSeeded) {
  RngStream a(RngSeed{11});
  RngStream b(RngSeed{11});
  for (int i = 0; i < 100; ++i) {
    const PureState x = haar_pure_state(2, a);
    const PureState y = haar_pure_state(2, b);
    EXPECT_NEAR(x.amplitudes().squaredNorm(), 1.0, 1e-12);
    EXPECT_EQ(x.amplitudes(), y.amplitudes());
  }
  RngStream c(RngSeed{1});
  EXPECT_EQ(haar_pure_state(1, c).dim(), 1);
  EXPECT_THROW(haar_pure_state(0, c), Error);
}

// Haar qubit states project uniformly onto S^2. Expected moments of a
// uniform sphere coordinate are E[n_z] = 0 and E[n_z^2] = 1/3; the
// oracle sampler (normalized real Gaussian in R^3) is held to the same
// test so a wrong expectation would show up in both.
TEST(HaarPureState, BlochMomentsMatchUniformSphere) {
  constexpr int count = 10000;
  RngStream rng(RngSeed{2024});
  std::mt19937_64 gen(7);
  const GeneratorBasis p = pauli_basis();
  for (int axis = 0; axis < 3; ++axis) {
    double s1 = 0, s2 = 0, s4 = 0, o1 = 0, o2 = 0;
    for (int i = 0; i < count; ++i) {
      const double z = bloch_project(haar_pure_state(2, rng), p)[axis];
      s1 += z;
      s2 += z * z;
      s4 += z * z * z * z;
      const double w = oracle::uniform_sphere(gen)(axis);
      o1 += w;
      o2 += w * w;
    }
    const double mean = s1 / count;
    const double m2 = s2 / count;
    const double se_mean = std::sqrt(m2 / count);
    const double se_m2 = std::sqrt((s4 / count - m2 * m2) / count);
    EXPECT_LT(std::abs(mean), 3.0 * se_mean) << axis;
    EXPECT_LT(std::abs(m2 - 1.0 / 3.0), 3.0 * se_m2) << axis;
    EXPECT_LT(std::abs(o1 / count), 3.0 * std::sqrt(1.0 / 3.0 / count));
    EXPECT_LT(std::abs(o2 / count - 1.0 / 3.0), 3.0 * std::sqrt((1.0 / 5.0 - 1.0 / 9.0) / count));
  }
}

TEST(HaarSpecialUnitary, UnitaryWithUnitDeterminant) {
  RngStream rng(RngSeed{5});
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 50; ++t) {
      const ComplexMatrix u = haar_special_unitary(n, rng);
      EXPECT_TRUE(is_unitary(u, 1e-12));
      EXPECT_LT(std::abs(u.determinant() - Complex(1.0, 0.0)), 1e-10);
      EXPECT_LT(max_abs(u * u.adjoint() - ComplexMatrix::Identity(n, n)), 1e-12);
    }
  }
  EXPECT_THROW(haar_special_unitary(1, rng), Error);
}

TEST(HaarSpecialUnitary, FirstColumnIsUniformOnTheSphere) {
  // U e_0 for Haar U is a Haar state: E|u_00|^2 = 1/2 for n = 2.
  RngStream rng(RngSeed{8});
  constexpr int count = 10000;
  double s = 0, s2 = 0;
  for (int i = 0; i < count; ++i) {
    const double p = std::norm(haar_special_unitary(2, rng)(0, 0));
    s += p;
    s2 += p * p;
  }
  const double mean = s / count;
  const double se = std::sqrt((s2 / count - mean * mean) / count);
  EXPECT_LT(std::abs(mean - 0.5), 4.0 * se);
}

TEST(KillingForm, PauliValues) {
  const GeneratorBasis p = pauli_basis();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      EXPECT_NEAR(killing_form(I * p[a], I * p[b], 2), a == b ? -8.0 : 0.0, 1e-12);
  EXPECT_NEAR(killing_form(I * p[2], I * p[2], 2), -8.0, 1e-12);
}

TEST(KillingForm, NormalizedBasisGivesMinusFourN) {
  for (int n : {2, 3}) {
    const GeneratorBasis g = gell_mann_basis(n);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        EXPECT_NEAR(killing_form(I * g[a], I * g[b], n), a == b ? -4.0 * n : 0.0, 1e-10);
  }
}

TEST(KillingForm, AdjointInvariance) {
  RngStream rng(RngSeed{3});
  const GeneratorBasis g = gell_mann_basis(3);
  for (int t = 0; t < 30; ++t) {
    const ComplexMatrix u = haar_special_unitary(3, rng);
    ComplexMatrix x = ComplexMatrix::Zero(3, 3);
    ComplexMatrix y = ComplexMatrix::Zero(3, 3);
    for (std::size_t a = 0; a < g.size(); ++a) {
      x += I * rng.standard_normal() * g[a];
      y += I * rng.standard_normal() * g[a];
    }
    EXPECT_NEAR(killing_form(u * x * u.adjoint(), u * y * u.adjoint(), 3), killing_form(x, y, 3), 1e-10);
  }
}

TEST(KillingForm, RejectsHermitianOrTracefulInput) {
  const GeneratorBasis p = pauli_basis();
  try {
    killing_form(p[0], p[0], 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAlgebraElement);
  }
  const ComplexMatrix traceful = I * ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(killing_form(traceful, I * p[0], 2), Error);
  EXPECT_THROW(killing_form(I * p[0], I * p[0], 3), Error);
}

TEST(NumericalRank, BasicCases) {
  EXPECT_EQ(numerical_rank(RealMatrix(RealMatrix::Identity(3, 3)), 1e-10), 3u);
  RealMatrix repeated(3, 3);
  repeated << 1, 0, 0, 1, 0, 0, 1, 0, 0;
  EXPECT_EQ(numerical_rank(repeated, 1e-10), 1u);
  EXPECT_EQ(numerical_rank(RealMatrix(RealMatrix::Zero(4, 4)), 1e-10), 0u);
  EXPECT_EQ(numerical_rank(RealMatrix(0, 0), 1e-10), 0u);
  EXPECT_THROW(numerical_rank(RealMatrix(RealMatrix::Identity(2, 2)), 0.0), Error);
}

TEST(NumericalRank, GaussianTallMatrixHasFullColumnRank) {
  std::mt19937_64 gen(99);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 20; ++t) {
    RealMatrix m(10, 3);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(gen);
    EXPECT_EQ(numerical_rank(m, 1e-10), 3u);
  }
}

// Property: rank is invariant under row permutations and orthogonal
// transformations, on random low-rank products.
TEST(NumericalRank, InvariantUnderPermutationAndOrthogonalMaps) {
  std::mt19937_64 gen(1234);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> dim(1, 8);
  for (int t = 0; t < 100; ++t) {
    const int rows = dim(gen) + 2;
    const int cols = dim(gen);
    const int r = std::uniform_int_distribution<int>(0, std::min(rows, cols))(gen);
    RealMatrix a(rows, r), b(r, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(gen);
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = normal(gen);
    const RealMatrix m = a * b;
    const std::size_t base = numerical_rank(m, 1e-10);
    EXPECT_EQ(base, static_cast<std::size_t>(r));

    Eigen::PermutationMatrix<Eigen::Dynamic> perm(rows);
    perm.setIdentity();
    std::shuffle(perm.indices().data(), perm.indices().data() + rows, gen);
    EXPECT_EQ(numerical_rank(RealMatrix(perm * m), 1e-10), base);

    RealMatrix g(rows, rows);
    for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(gen);
    const RealMatrix q = Eigen::HouseholderQR<RealMatrix>(g).householderQ();
    EXPECT_EQ(numerical_rank(RealMatrix(q * m), 1e-10), base);
  }
}

TEST(KernelDimension, BasicCases) {
  EXPECT_EQ(kernel_dimension(RealMatrix(RealMatrix::Zero(4, 4)), 1e-10), 4u);
  EXPECT_EQ(kernel_dimension(RealMatrix(RealMatrix::Identity(5, 5)), 1e-10), 0u);
  const ComplexMatrix m = pauli_basis()[2] + ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(kernel_dimension(m, 1e-10), 1u);
  const ComplexMatrix sy = pauli_basis()[1] + ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(kernel_dimension(sy, 1e-10), 1u);
}

TEST(RngStream, DerivedStreamsAreIndependentOfOrder) {
  const RngStream master(RngSeed{77});
  RngStream a = master.derive(3);
  RngStream b = master.derive(3);
  RngStream c = master.derive(4);
  const auto x = a.next_u64();
  EXPECT_EQ(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
}
