#include "blochgeom/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "blochgeom/error.hpp"
#include "blochgeom/kernels.hpp"
#include "blochgeom/projection.hpp"

namespace blochgeom {

namespace {

// Runs fn(i) for i in [0, count). Each task owns its output slot, so the
// result never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> build_metadata() {
  return {{"build", std::string("blochgeom ") + BLOCHGEOM_VERSION}};
}

struct Moments {
  double mean = 0.0;
  double mean_stderr = 0.0;
  double second = 0.0;
  double second_stderr = 0.0;
};

Moments sample_moments(const std::vector<double>& xs) {
  Moments m;
  const auto n = static_cast<double>(xs.size());
  if (xs.empty()) return m;
  for (double x : xs) {
    m.mean += x;
    m.second += x * x;
  }
  m.mean /= n;
  m.second /= n;
  double var1 = 0.0;
  double var2 = 0.0;
  for (double x : xs) {
    var1 += (x - m.mean) * (x - m.mean);
    var2 += (x * x - m.second) * (x * x - m.second);
  }
  if (xs.size() > 1) {
    m.mean_stderr = std::sqrt(var1 / (n - 1.0) / n);
    m.second_stderr = std::sqrt(var2 / (n - 1.0) / n);
  }
  return m;
}

// Uniform draw strictly inside (lo, hi).
double open_uniform(RngStream& rng, double lo, double hi) {
  double u = 0.0;
  do {
    u = rng.uniform();
  } while (u == 0.0);
  return lo + (hi - lo) * u;
}

}  // namespace

ExperimentRecord run_bloch_coverage(int n_states, double mixed_fraction, RngSeed seed) {
  if (n_states < 1) throw Error(ErrorKind::Usage, "n_states must be >= 1");
  if (!(mixed_fraction >= 0.0 && mixed_fraction <= 1.0)) {
    throw Error(ErrorKind::Usage, "mixed_fraction must lie in [0, 1]");
  }
  const auto total = static_cast<std::size_t>(n_states);
  const auto n_mixed = static_cast<std::size_t>(std::llround(n_states * mixed_fraction));
  const std::size_t n_pure = total - n_mixed;
  const RngStream master(seed);

  // Pure states go through the batched SIMD projection.
  std::vector<double> ar(n_pure), ai(n_pure), br(n_pure), bi(n_pure);
  for (std::size_t i = 0; i < n_pure; ++i) {
    RngStream rng = master.derive(i);
    const PureState psi = haar_pure_state(2, rng);
    ar[i] = psi.amplitudes()(0).real();
    ai[i] = psi.amplitudes()(0).imag();
    br[i] = psi.amplitudes()(1).real();
    bi[i] = psi.amplitudes()(1).imag();
  }
  std::vector<double> nx(n_pure), ny(n_pure), nz(n_pure), norm(n_pure);
  kernels::project_qubits({ar, ai, br, bi}, {nx, ny, nz}, norm);

  ExperimentRecord rec;
  rec.experiment = "bloch_coverage";
  rec.seed = seed;
  rec.parameters = {{"n_states", std::to_string(n_states)},
                    {"mixed_fraction", format_double(mixed_fraction)},
                    {"mixed_ensemble", "p|a><a|+(1-p)|b><b|, a,b Haar, p~U(0,1)"},
                    {"pure_ensemble", "Haar (normalized complex Gaussian)"}};
  rec.metadata = build_metadata();
  rec.rows.columns = {"kind", "n_x", "n_y", "n_z", "norm", "purity"};

  for (std::size_t i = 0; i < n_pure; ++i) {
    rec.passed = rec.passed && std::abs(norm[i] - 1.0) <= 1e-12;
    const ComplexVector amp = (ComplexVector(2) << Complex{ar[i], ai[i]}, Complex{br[i], bi[i]}).finished();
    const double pur = purity(DensityMatrix::from_pure(PureState(amp)));
    rec.rows.rows.push_back({std::string("pure"), nx[i], ny[i], nz[i], norm[i], pur});
  }

  const GeneratorBasis pauli = pauli_basis();
  for (std::size_t i = n_pure; i < total; ++i) {
    RngStream rng = master.derive(i);
    const PureState a = haar_pure_state(2, rng);
    const PureState b = haar_pure_state(2, rng);
    const double p = open_uniform(rng, 0.0, 1.0);
    const DensityMatrix rho = DensityMatrix::mixture(p, a, b);
    const BlochVector v = bloch_project(rho, pauli);
    const double r = bloch_norm(v);
    rec.passed = rec.passed && r < 1.0;
    rec.rows.rows.push_back({std::string("mixed"), v[0], v[1], v[2], r, purity(rho)});
  }

  Table moments;
  moments.columns = {"axis", "samples", "mean", "mean_stderr", "second_moment", "second_moment_stderr", "pass"};
  const char* axes[] = {"x", "y", "z"};
  const std::vector<double>* comps[] = {&nx, &ny, &nz};
  for (int a = 0; a < 3; ++a) {
    const Moments m = sample_moments(*comps[a]);
    const bool ok = n_pure > 1 && std::abs(m.mean) <= kMomentSigmas * m.mean_stderr &&
                    std::abs(m.second - 1.0 / 3.0) <= kMomentSigmas * m.second_stderr;
    moments.rows.push_back({std::string(axes[a]), static_cast<std::int64_t>(n_pure), m.mean, m.mean_stderr,
                            m.second, m.second_stderr, ok});
  }
  rec.extra_tables.emplace_back("moments", std::move(moments));
  return rec;
}

ExperimentRecord run_saturation(const std::vector<int>& valences, int trials, RngSeed seed) {
  if (valences.empty()) throw Error(ErrorKind::Usage, "need at least one valence");
  if (trials < 1) throw Error(ErrorKind::Usage, "trials must be >= 1");
  for (int k : valences) {
    if (k < 1) throw Error(ErrorKind::Usage, "valences must be >= 1");
  }
  const RngStream master(seed);

  struct TrialResult {
    std::size_t ambient = 0;
    std::size_t counterfactual = 0;
    RealMatrix vectors;
  };
  const std::size_t per_k = static_cast<std::size_t>(trials);
  std::vector<TrialResult> results(valences.size() * per_k);

  parallel_for(results.size(), [&](std::size_t slot) {
    const int k = valences[slot / per_k];
    const std::size_t trial = slot % per_k;
    RngStream rng = master.derive(static_cast<std::uint64_t>(k)).derive(trial);
    const Graph star = build_star_graph(k);
    const GraphAssignment assignment = assign_random_states(star, rng);
    const VertexConfiguration centre = vertex_configuration(assignment, 0);
    TrialResult& r = results[slot];
    r.ambient = ambient_dimension(centre);
    r.counterfactual = counterfactual_dimension(assignment, 0, rng);
    if (trial + 1 == per_k) r.vectors = centre.as_matrix();
  });

  ExperimentRecord rec;
  rec.experiment = "saturation";
  rec.seed = seed;
  rec.parameters = {{"valences", join_ints(valences)},
                    {"trials", std::to_string(trials)},
                    {"graph", "star"},
                    {"counterfactual_samples_per_edge", std::to_string(kCounterfactualSamplesPerEdge)}};
  rec.metadata = build_metadata();
  rec.rows.columns = {"k", "trial", "ambient_rank", "counterfactual_rank"};
  for (std::size_t slot = 0; slot < results.size(); ++slot) {
    const int k = valences[slot / per_k];
    rec.rows.rows.push_back({static_cast<std::int64_t>(k), static_cast<std::int64_t>(slot % per_k),
                             static_cast<std::int64_t>(results[slot].ambient),
                             static_cast<std::int64_t>(results[slot].counterfactual)});
  }
  for (std::size_t vi = 0; vi < valences.size(); ++vi) {
    const std::string name = "vectors_k" + std::to_string(valences[vi]);
    if (rec.find_table(name)) continue;
    const RealMatrix& m = results[vi * per_k + per_k - 1].vectors;
    Table t;
    t.columns = {"edge", "n_x", "n_y", "n_z"};
    for (Eigen::Index e = 0; e < m.rows(); ++e) {
      t.rows.push_back({static_cast<std::int64_t>(e), m(e, 0), m(e, 1), m(e, 2)});
    }
    rec.extra_tables.emplace_back(name, std::move(t));
  }
  return rec;
}

ExperimentRecord run_graph_saturation(const Graph& graph, int trials, RngSeed seed) {
  if (trials < 1) throw Error(ErrorKind::Usage, "trials must be >= 1");
  const RngStream master(seed);
  const auto n_vertices = static_cast<std::size_t>(graph.vertex_count());
  struct Row {
    std::size_t ambient = 0;
    std::size_t counterfactual = 0;
  };
  std::vector<std::vector<Row>> results(static_cast<std::size_t>(trials), std::vector<Row>(n_vertices));

  parallel_for(results.size(), [&](std::size_t trial) {
    RngStream rng = master.derive(trial);
    const GraphAssignment assignment = assign_random_states(graph, rng);
    for (std::size_t v = 0; v < n_vertices; ++v) {
      const int vi = static_cast<int>(v);
      results[trial][v] = {ambient_dimension(vertex_configuration(assignment, vi)),
                           counterfactual_dimension(assignment, vi, rng)};
    }
  });

  ExperimentRecord rec;
  rec.experiment = "graph_saturation";
  rec.seed = seed;
  rec.parameters = {{"vertices", std::to_string(graph.vertex_count())},
                    {"edges", std::to_string(graph.edge_count())},
                    {"trials", std::to_string(trials)}};
  rec.metadata = build_metadata();
  rec.rows.columns = {"vertex", "k", "trial", "ambient_rank", "counterfactual_rank"};
  for (std::size_t trial = 0; trial < results.size(); ++trial) {
    for (std::size_t v = 0; v < n_vertices; ++v) {
      rec.rows.rows.push_back({static_cast<std::int64_t>(v),
                               static_cast<std::int64_t>(graph.valence(static_cast<int>(v))),
                               static_cast<std::int64_t>(trial),
                               static_cast<std::int64_t>(results[trial][v].ambient),
                               static_cast<std::int64_t>(results[trial][v].counterfactual)});
    }
  }
  return rec;
}

}  // namespace blochgeom
