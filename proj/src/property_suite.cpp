#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "blochgeom/equivariance.hpp"
#include "blochgeom/error.hpp"
#include "blochgeom/experiments.hpp"
#include "blochgeom/invariant_sector.hpp"
#include "blochgeom/kernels.hpp"
#include "blochgeom/projection.hpp"
#include "blochgeom/sun_exclusion.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace blochgeom {

namespace {

struct Outcome {
  std::int64_t samples = 0;
  double residual = 0.0;
  bool pass = false;
};

Outcome below(std::int64_t samples, double residual, double tol) {
  return {samples, residual, residual <= tol};
}

class Suite {
 public:
  explicit Suite(RngSeed seed) : master_(seed) {}

  void add(const std::string& name, const std::function<Outcome(RngStream&)>& check) {
    RngStream rng = master_.derive(index_++);
    Outcome out;
    try {
      out = check(rng);
    } catch (const std::exception&) {
      out = {0, std::numeric_limits<double>::quiet_NaN(), false};
    }
    rows.push_back({name, out.samples, out.residual, out.pass});
    passed = passed && out.pass;
  }

  std::vector<std::vector<Cell>> rows;
  bool passed = true;

 private:
  RngStream master_;
  std::uint64_t index_ = 0;
};

ComplexMatrix times_i(const ComplexMatrix& m) {
  return Complex{0.0, 1.0} * m;
}

}  // namespace

ExperimentRecord run_property_suite(RngSeed seed) {
  Suite suite(seed);
  const GeneratorBasis pauli = pauli_basis();
  const GeneratorBasis gm3 = gell_mann_basis(3);

  suite.add("pure_norm_law", [&](RngStream& rng) {
    constexpr int count = 10000;
    std::vector<double> ar(count), ai(count), br(count), bi(count);
    for (int i = 0; i < count; ++i) {
      const PureState psi = haar_pure_state(2, rng);
      ar[i] = psi.amplitudes()(0).real();
      ai[i] = psi.amplitudes()(0).imag();
      br[i] = psi.amplitudes()(1).real();
      bi[i] = psi.amplitudes()(1).imag();
    }
    std::vector<double> x(count), y(count), z(count), norm(count);
    kernels::project_qubits({ar, ai, br, bi}, {x, y, z}, norm);
    double worst = 0.0;
    for (double v : norm) worst = std::max(worst, std::abs(v - 1.0));
    return below(count, worst, 1e-12);
  });

  suite.add("kernel_scalar_equivalence", [&](RngStream& rng) {
    constexpr int count = 1003;
    std::vector<double> ar(count), ai(count), br(count), bi(count);
    for (int i = 0; i < count; ++i) {
      ar[i] = rng.standard_normal();
      ai[i] = rng.standard_normal();
      br[i] = rng.standard_normal();
      bi[i] = rng.standard_normal();
    }
    std::vector<double> x0(count), y0(count), z0(count), n0(count);
    std::vector<double> x1(count), y1(count), z1(count), n1(count);
    kernels::project_qubits(kernels::Isa::Scalar, {ar, ai, br, bi}, {x0, y0, z0}, n0);
    kernels::project_qubits({ar, ai, br, bi}, {x1, y1, z1}, n1);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      worst = std::max({worst, std::abs(x0[i] - x1[i]), std::abs(y0[i] - y1[i]), std::abs(z0[i] - z1[i]),
                        std::abs(n0[i] - n1[i])});
    }
    return below(count, worst, 0.0);
  });

  suite.add("mixed_norm_law", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const PureState a = haar_pure_state(2, rng);
      const PureState b = haar_pure_state(2, rng);
      const double p = 0.05 + 0.9 * rng.uniform();
      worst = std::max(worst, bloch_norm(bloch_project(DensityMatrix::mixture(p, a, b), pauli)));
    }
    return Outcome{count, worst, worst < 1.0 - 1e-6};
  });

  suite.add("purity_bloch_identity", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const DensityMatrix rho =
          DensityMatrix::mixture(rng.uniform(), haar_pure_state(2, rng), haar_pure_state(2, rng));
      const double r = bloch_norm(bloch_project(rho, pauli));
      worst = std::max(worst, std::abs(purity(rho) - (1.0 + r * r) / 2.0));
    }
    return below(count, worst, 1e-10);
  });

  suite.add("density_round_trip", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const DensityMatrix rho =
          DensityMatrix::mixture(rng.uniform(), haar_pure_state(2, rng), haar_pure_state(2, rng));
      const DensityMatrix back = reconstruct_density(bloch_project(rho, pauli), pauli);
      worst = std::max(worst, (back.matrix() - rho.matrix()).cwiseAbs().maxCoeff());
    }
    return below(count, worst, 1e-10);
  });

  suite.add("projection_linearity", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const DensityMatrix r1 = DensityMatrix::from_pure(haar_pure_state(2, rng));
      const DensityMatrix r2 = DensityMatrix::from_pure(haar_pure_state(2, rng));
      const double p = rng.uniform();
      const ComplexMatrix mix = p * r1.matrix() + (1.0 - p) * r2.matrix();
      const DensityMatrix rho(0.5 * (mix + mix.adjoint()));
      const RealVector lhs = bloch_project(rho, pauli).components;
      const RealVector rhs =
          p * bloch_project(r1, pauli).components + (1.0 - p) * bloch_project(r2, pauli).components;
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return below(count, worst, 1e-12);
  });

  suite.add("pure_norm_n3", [&](RngStream& rng) {
    const PureNormCheck check = pure_norm_constant(3, 1000, rng);
    return below(1000, check.max_deviation, 1e-10);
  });

  suite.add("equivariance_n2", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const ComplexMatrix u = haar_special_unitary(2, rng);
      worst = std::max(worst, equivariance_residual(u, haar_pure_state(2, rng), pauli));
    }
    return below(count, worst, 1e-10);
  });

  suite.add("equivariance_n3", [&](RngStream& rng) {
    constexpr int count = 100;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const ComplexMatrix u = haar_special_unitary(3, rng);
      worst = std::max(worst, equivariance_residual(u, haar_pure_state(3, rng), gm3));
    }
    return below(count, worst, 1e-10);
  });

  suite.add("so3_membership", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const Rotation r = adjoint_rotation(haar_special_unitary(2, rng), pauli);
      worst = std::max({worst, r.orthogonality_defect(), r.determinant_defect()});
    }
    return below(count, worst, 1e-10);
  });

  suite.add("homomorphism", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const ComplexMatrix u1 = haar_special_unitary(2, rng);
      const ComplexMatrix u2 = haar_special_unitary(2, rng);
      worst = std::max(worst, homomorphism_residual(u1, u2, pauli));
    }
    return below(count, worst, 1e-10);
  });

  suite.add("double_cover", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto [plus, minus] = covering_check(haar_special_unitary(2, rng));
      worst = std::max(worst, (plus.matrix() - minus.matrix()).cwiseAbs().maxCoeff());
    }
    return below(count, worst, 1e-12);
  });

  suite.add("metric_compatibility", [&](RngStream& rng) {
    constexpr int count = 1000;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const Rotation r = adjoint_rotation(haar_special_unitary(2, rng), pauli);
      const Eigen::Vector3d v(rng.standard_normal(), rng.standard_normal(), rng.standard_normal());
      worst = std::max(worst, std::abs((r.matrix() * v).norm() - v.norm()));
    }
    return below(count, worst, 1e-10);
  });

  suite.add("killing_diag", [&](RngStream&) {
    double worst = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      worst = std::max(worst, std::abs(killing_form(times_i(pauli[a]), times_i(pauli[a]), 2) + 8.0));
    }
    return below(3, worst, 1e-12);
  });

  suite.add("killing_offdiag", [&](RngStream&) {
    double worst = 0.0;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) worst = std::max(worst, std::abs(killing_form(times_i(pauli[a]), times_i(pauli[b]), 2)));
    return below(6, worst, 1e-12);
  });

  suite.add("killing_su3", [&](RngStream&) {
    double worst = 0.0;
    for (std::size_t a = 0; a < gm3.size(); ++a)
      for (std::size_t b = 0; b < gm3.size(); ++b) {
        const double expected = a == b ? -12.0 : 0.0;
        worst = std::max(worst, std::abs(killing_form(times_i(gm3[a]), times_i(gm3[b]), 3) - expected));
      }
    return below(64, worst, 1e-10);
  });

  suite.add("killing_ad_invariance", [&](RngStream& rng) {
    constexpr int count = 100;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const ComplexMatrix u = haar_special_unitary(2, rng);
      const std::size_t a = static_cast<std::size_t>(i % 3);
      const std::size_t b = static_cast<std::size_t>((i / 3) % 3);
      const ComplexMatrix x = times_i(pauli[a]);
      const ComplexMatrix y = times_i(pauli[b]);
      const double moved = killing_form(u * x * u.adjoint(), u * y * u.adjoint(), 2);
      worst = std::max(worst, std::abs(moved - killing_form(x, y, 2)));
    }
    return below(count, worst, 1e-10);
  });

  double worst_gap = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 10; ++k) {
    suite.add("invariant_dim_k" + std::to_string(k), [&, k](RngStream&) {
      const InvariantSectorReport r = invariant_dimension_numeric(k);
      worst_gap = std::min(worst_gap, r.gap_ratio);
      const double diff = std::abs(static_cast<double>(r.formula_dim) - static_cast<double>(r.numeric_dim));
      return Outcome{1, diff, r.agrees()};
    });
  }
  suite.add("invariant_gap", [&](RngStream&) {
    return Outcome{10, worst_gap, worst_gap > 1e6};
  });

  suite.add("sector_rotation_invariance", [&](RngStream& rng) {
    double worst = 0.0;
    for (int k = 2; k <= 6; k += 2) {
      const ComplexMatrix basis = invariant_subspace_basis(k);
      const ComplexMatrix proj = basis * basis.adjoint();
      const ComplexMatrix u = haar_special_unitary(2, rng);
      ComplexMatrix uk = u;
      for (int j = 1; j < k; ++j) uk = Eigen::kroneckerProduct(uk, u).eval();
      worst = std::max(worst, (proj * uk - uk * proj).cwiseAbs().maxCoeff());
    }
    return below(3, worst, 1e-8);
  });

  for (int k : kDefaultValences) {
    suite.add("saturation_k" + std::to_string(k), [&, k](RngStream& rng) {
      const Graph star = build_star_graph(k);
      int exceptions = 0;
      constexpr int trials = 100;
      for (int t = 0; t < trials; ++t) {
        const GraphAssignment a = assign_random_states(star, rng);
        if (ambient_dimension(vertex_configuration(a, 0)) != 3) ++exceptions;
      }
      return Outcome{trials, static_cast<double>(exceptions), exceptions == 0};
    });
  }

  for (int k : {1, 2, 4, 6}) {
    suite.add("counterfactual_k" + std::to_string(k), [&, k](RngStream& rng) {
      const Graph star = build_star_graph(k);
      int exceptions = 0;
      constexpr int trials = 10;
      for (int t = 0; t < trials; ++t) {
        const GraphAssignment a = assign_random_states(star, rng);
        if (counterfactual_dimension(a, 0, rng) != static_cast<std::size_t>(3 * k)) ++exceptions;
      }
      return Outcome{trials, static_cast<double>(exceptions), exceptions == 0};
    });
  }

  suite.add("gauge_coherence", [&](RngStream& rng) {
    constexpr int trials = 100;
    double worst = 0.0;
    const Graph star = build_star_graph(6);
    for (int t = 0; t < trials; ++t) {
      const GraphAssignment a = assign_random_states(star, rng);
      const ComplexMatrix u = haar_special_unitary(2, rng);
      const RealMatrix before = vertex_configuration(a, 0).as_matrix();
      const RealMatrix after = vertex_configuration(apply_global_gauge(a, u), 0).as_matrix();
      const RealMatrix r = adjoint_rotation(u, pauli).matrix();
      worst = std::max(worst, (after - before * r.transpose()).cwiseAbs().maxCoeff());
      const RealMatrix gram_before = before * before.transpose();
      const RealMatrix gram_after = after * after.transpose();
      worst = std::max(worst, (gram_after - gram_before).cwiseAbs().maxCoeff());
    }
    return below(trials, worst, 1e-10);
  });

  const int expected_generators[] = {3, 8, 15};
  for (int n = 2; n <= 4; ++n) {
    suite.add("sun_generators_n" + std::to_string(n), [&, n](RngStream&) {
      const int got = min_equivariant_dimension(n);
      const bool ok = got == expected_generators[n - 2] &&
                      gell_mann_basis(n).size() == static_cast<std::size_t>(got);
      return Outcome{1, std::abs(static_cast<double>(got - expected_generators[n - 2])), ok};
    });
  }
  for (int n = 2; n <= 4; ++n) {
    suite.add("sun_tangent_rank_n" + std::to_string(n), [&, n](RngStream& rng) {
      const std::size_t rank = image_tangent_rank(n, kExclusionSamples, rng);
      const auto expected = static_cast<std::size_t>(2 * (n - 1));
      return Outcome{kExclusionSamples, std::abs(static_cast<double>(rank) - static_cast<double>(expected)),
                     rank == expected};
    });
  }
  suite.add("directional_only_unique_n2", [&](RngStream& rng) {
    int mismatches = 0;
    for (int n = 2; n <= 6; ++n) {
      const ExclusionReport r = exclusion_report(n, rng);
      if (r.is_directional_only != (n == 2)) ++mismatches;
    }
    return Outcome{5, static_cast<double>(mismatches), mismatches == 0};
  });

  ExperimentRecord rec;
  rec.experiment = "verify";
  rec.seed = seed;
  rec.metadata = {{"build", std::string("blochgeom ") + BLOCHGEOM_VERSION}};
  rec.rows.columns = {"property", "samples", "residual", "pass"};
  rec.rows.rows = std::move(suite.rows);
  rec.passed = suite.passed;
  return rec;
}

}  // namespace blochgeom
