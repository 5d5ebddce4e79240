#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blochgeom/equivariance.hpp"
#include "blochgeom/linalg.hpp"
#include "blochgeom/projection.hpp"

namespace blochgeom {

/// Finite, connected, simple undirected graph.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  /// Validates endpoints, rejects self-loops, duplicate edges and
  /// disconnected graphs.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Incident edge indices of `v`, in insertion order.
  const std::vector<std::size_t>& incident(int v) const;
  std::size_t valence(int v) const { return incident(v).size(); }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Vertex 0 is the center; leaves are 1..k.
Graph build_star_graph(int k);
Graph build_path_graph(int n);
Graph build_cycle_graph(int n);
Graph build_complete_graph(int n);

/// Parses "kind=star,k=6", "kind=path,n=5", "kind=cycle,n=8", "kind=complete,n=4".
Graph parse_graph_spec(std::string_view spec);

/// Per-edge qubit states projected through one shared generator frame.
class GraphAssignment {
 public:
  GraphAssignment(std::shared_ptr<const Graph> graph, std::vector<PureState> edge_states,
                  std::shared_ptr<const GeneratorBasis> frame);

  const Graph& graph() const noexcept { return *graph_; }
  const std::vector<PureState>& edge_states() const noexcept { return edge_states_; }
  const GeneratorBasis& frame() const noexcept { return *frame_; }
  const std::shared_ptr<const GeneratorBasis>& shared_frame() const noexcept { return frame_; }
  const std::shared_ptr<const Graph>& shared_graph() const noexcept { return graph_; }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<PureState> edge_states_;
  std::shared_ptr<const GeneratorBasis> frame_;
};

struct VertexConfiguration {
  int vertex = 0;
  std::vector<BlochVector> bloch_vectors;

  /// k x 3 matrix, one Bloch vector per row.
  RealMatrix as_matrix() const;
};

/// Independent Haar qubit state per edge; frame is the Pauli basis.
GraphAssignment assign_random_states(const Graph& g, RngStream& rng);

/// psi_e -> u psi_e on every edge; the frame object is shared, not copied.
GraphAssignment apply_global_gauge(const GraphAssignment& a, const ComplexMatrix& u);

VertexConfiguration vertex_configuration(const GraphAssignment& a, int v);

/// Rank of the span of the configuration's Bloch vectors. Never exceeds 3.
std::size_t ambient_dimension(const VertexConfiguration& c, double tol = kDefaultRankTol);

/// Number of states drawn per incident edge in the counterfactual, the
/// assigned state included.
inline constexpr int kCounterfactualSamplesPerEdge = 4;

/// Drops the shared frame: edge i gets its own random frame V_i T_a V_i^dagger
/// and its Bloch vectors live in the i-th R^3 block of R^{3k}. Returns the
/// rank spanned by the assigned state plus freshly resampled states on each
/// edge (3k for generic draws).
std::size_t counterfactual_dimension(const GraphAssignment& a, int v, RngStream& rng,
                                     double tol = kDefaultRankTol,
                                     int samples_per_edge = kCounterfactualSamplesPerEdge);

}  // namespace blochgeom
