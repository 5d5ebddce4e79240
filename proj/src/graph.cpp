#include "blochgeom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "blochgeom/error.hpp"

namespace blochgeom {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  adjacency_.resize(static_cast<std::size_t>(vertex_count_));
  std::set<Edge> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = edges_[e];
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
      throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
    }
    if (a == b) throw Error(ErrorKind::InvalidGraph, "self-loops are not allowed");
    if (!seen.insert(std::minmax(a, b)).second) {
      throw Error(ErrorKind::InvalidGraph, "duplicate edge");
    }
    adjacency_[static_cast<std::size_t>(a)].push_back(e);
    adjacency_[static_cast<std::size_t>(b)].push_back(e);
  }

  std::vector<bool> reached(static_cast<std::size_t>(vertex_count_), false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (std::size_t e : adjacency_[static_cast<std::size_t>(v)]) {
      const int w = edges_[e].first == v ? edges_[e].second : edges_[e].first;
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != vertex_count_) throw Error(ErrorKind::InvalidGraph, "graph is not connected");
}

const std::vector<std::size_t>& Graph::incident(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw Error(ErrorKind::InvalidGraph, "vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[static_cast<std::size_t>(v)];
}

Graph build_star_graph(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidGraph, "star graph needs valence k >= 1");
  std::vector<Graph::Edge> edges;
  for (int leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
  return Graph(k + 1, std::move(edges));
}

Graph build_path_graph(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidGraph, "path graph needs n >= 2");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph build_cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidGraph, "cycle graph needs n >= 3");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph build_complete_graph(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidGraph, "complete graph needs n >= 2");
  std::vector<Graph::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph parse_graph_spec(std::string_view spec) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorKind::Usage, "graph spec item '" + std::string(item) + "' is not key=value");
    }
    if (!fields.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second) {
      throw Error(ErrorKind::Usage, "graph spec repeats key '" + std::string(item.substr(0, eq)) + "'");
    }
  }
  auto take_int = [&](const char* key) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw Error(ErrorKind::Usage, std::string("graph spec needs ") + key + "=");
    int value = 0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::Usage, std::string("graph spec ") + key + " is not an integer");
    }
    fields.erase(it);
    return value;
  };
  const auto kind_it = fields.find("kind");
  if (kind_it == fields.end()) throw Error(ErrorKind::Usage, "graph spec needs kind=");
  const std::string kind = kind_it->second;
  fields.erase(kind_it);

  Graph g = [&] {
    if (kind == "star") return build_star_graph(take_int("k"));
    if (kind == "path") return build_path_graph(take_int("n"));
    if (kind == "cycle") return build_cycle_graph(take_int("n"));
    if (kind == "complete") return build_complete_graph(take_int("n"));
    throw Error(ErrorKind::Usage, "unknown graph kind '" + kind + "'");
  }();
  if (!fields.empty()) {
    throw Error(ErrorKind::Usage, "unknown graph spec key '" + fields.begin()->first + "'");
  }
  return g;
}

GraphAssignment::GraphAssignment(std::shared_ptr<const Graph> graph, std::vector<PureState> edge_states,
                                 std::shared_ptr<const GeneratorBasis> frame)
    : graph_(std::move(graph)), edge_states_(std::move(edge_states)), frame_(std::move(frame)) {
  if (!graph_ || !frame_) throw Error(ErrorKind::InvalidGraph, "assignment needs a graph and a frame");
  if (edge_states_.size() != graph_->edge_count()) {
    throw Error(ErrorKind::DimensionMismatch, "need exactly one state per edge");
  }
  for (const auto& psi : edge_states_) {
    if (psi.dim() != frame_->n) {
      throw Error(ErrorKind::DimensionMismatch, "edge state dimension does not match the frame");
    }
  }
}

RealMatrix VertexConfiguration::as_matrix() const {
  const auto k = static_cast<Eigen::Index>(bloch_vectors.size());
  const Eigen::Index d = k == 0 ? 3 : bloch_vectors.front().size();
  RealMatrix m(k, d);
  for (Eigen::Index i = 0; i < k; ++i) m.row(i) = bloch_vectors[static_cast<std::size_t>(i)].components.transpose();
  return m;
}

GraphAssignment assign_random_states(const Graph& g, RngStream& rng) {
  std::vector<PureState> states;
  states.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) states.push_back(haar_pure_state(2, rng));
  return GraphAssignment(std::make_shared<const Graph>(g), std::move(states),
                         std::make_shared<const GeneratorBasis>(pauli_basis()));
}

GraphAssignment apply_global_gauge(const GraphAssignment& a, const ComplexMatrix& u) {
  if (u.rows() != a.frame().n || u.cols() != a.frame().n || !is_special_unitary(u)) {
    throw Error(ErrorKind::NotSpecialUnitary, "global gauge needs an element of SU(n) matching the frame");
  }
  std::vector<PureState> moved;
  moved.reserve(a.edge_states().size());
  for (const auto& psi : a.edge_states()) moved.emplace_back(u * psi.amplitudes(), 1e-10);
  return GraphAssignment(a.shared_graph(), std::move(moved), a.shared_frame());
}

VertexConfiguration vertex_configuration(const GraphAssignment& a, int v) {
  VertexConfiguration c{v, {}};
  for (std::size_t e : a.graph().incident(v)) {
    c.bloch_vectors.push_back(bloch_project(a.edge_states()[e], a.frame()));
  }
  return c;
}

std::size_t ambient_dimension(const VertexConfiguration& c, double tol) {
  if (c.bloch_vectors.empty()) return 0;
  return numerical_rank(c.as_matrix(), tol);
}

std::size_t counterfactual_dimension(const GraphAssignment& a, int v, RngStream& rng, double tol,
                                     int samples_per_edge) {
  const auto& incident = a.graph().incident(v);
  const auto k = static_cast<Eigen::Index>(incident.size());
  if (k < 1) throw Error(ErrorKind::InvalidGraph, "counterfactual needs valence >= 1");
  if (samples_per_edge < 1) throw Error(ErrorKind::Usage, "samples_per_edge must be >= 1");
  const int n = a.frame().n;
  const auto d = static_cast<Eigen::Index>(a.frame().size());

  RealMatrix embedded = RealMatrix::Zero(k * samples_per_edge, k * d);
  Eigen::Index row = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    const ComplexMatrix v_i = haar_special_unitary(n, rng);
    GeneratorBasis local{n, {}};
    for (const auto& t : a.frame().generators) local.generators.push_back(v_i * t * v_i.adjoint());

    for (int s = 0; s < samples_per_edge; ++s) {
      const PureState psi = s == 0 ? a.edge_states()[incident[static_cast<std::size_t>(i)]]
                                   : haar_pure_state(n, rng);
      const BlochVector b = bloch_project(psi, local);
      embedded.block(row, i * d, 1, d) = b.components.transpose();
      ++row;
    }
  }
  return numerical_rank(embedded, tol);
}

}  // namespace blochgeom
