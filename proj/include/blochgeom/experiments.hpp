#pragma once

#include <vector>

#include "blochgeom/graph.hpp"
#include "blochgeom/record.hpp"

namespace blochgeom {

inline constexpr int kDefaultCoverageStates = 200;
inline constexpr double kDefaultMixedFraction = 0.5;
inline constexpr int kDefaultSaturationTrials = 100;
inline const std::vector<int> kDefaultValences{4, 6, 8, 10};

/// Number of standard errors allowed in the uniform-sphere moment checks.
inline constexpr double kMomentSigmas = 4.0;

/// Random qubit states projected to the Bloch ball.
///
/// The first round(n_states * (1 - mixed_fraction)) rows are Haar pure
/// states; the rest are mixtures p|a><a| + (1-p)|b><b| of two Haar pure
/// states with p uniform on (0, 1). Rows: (kind, n_x, n_y, n_z, norm,
/// purity). Table "moments" holds per-axis mean and second moment of the
/// pure rows with standard errors and a pass flag against 0 and 1/3.
/// `passed` requires pure norms within 1e-12 of 1 and mixed norms below 1.
ExperimentRecord run_bloch_coverage(int n_states, double mixed_fraction, RngSeed seed);

/// Star graphs of each valence, `trials` independent assignments each.
/// Rows: (k, trial, ambient_rank, counterfactual_rank). Tables
/// "vectors_k{K}" hold the centre vertex's Bloch vectors from the last trial.
ExperimentRecord run_saturation(const std::vector<int>& valences, int trials, RngSeed seed);

/// Same measurement at every vertex of an arbitrary graph.
/// Rows: (vertex, k, trial, ambient_rank, counterfactual_rank).
ExperimentRecord run_graph_saturation(const Graph& graph, int trials, RngSeed seed);

/// One row per named invariant: (property, samples, residual, pass).
/// `passed` is false if any row fails; failures never throw mid-run.
ExperimentRecord run_property_suite(RngSeed seed);

}  // namespace blochgeom
