#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pforge {

// Thrown when an internal consistency check fails. This signals a bug or a
// malformed intermediate state, as opposed to bad user input, which raises
// std::invalid_argument.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

struct WeightedEdge {
  int id;
  int u;
  int v;
  int weight;
};

// Edge index into Multigraph::edges() plus the endpoint opposite to the
// vertex the incidence list belongs to.
struct Incidence {
  int edge_index;
  int other;
};

// vertex -> counterclockwise cyclic order of incident edge ids
using RotationSystem = std::map<int, std::vector<int>>;
// marker name ("a", "b", "zero", "infinity") -> vertex id
using MarkerMap = std::map<std::string, int>;

// Immutable weighted multigraph. Parallel edges are allowed, self-loops are
// not. Weight +1 is an ordinary edge; negative weights are inverse
// propagators that only take part in degree bookkeeping.
class Multigraph {
 public:
  Multigraph(std::vector<int> vertices, std::vector<WeightedEdge> edges,
             std::optional<RotationSystem> rotation = std::nullopt,
             MarkerMap markers = {});

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int v) const;
  // Position of v in vertices(); throws std::invalid_argument if unknown.
  int vertex_index(int v) const;
  const std::vector<Incidence>& incident(int v) const;

  // Number of incident edges (multiplicity, ignoring weights).
  int degree(int v) const;
  // Sum of incident edge weights.
  int weighted_degree(int v) const;
  // Sum of all edge weights.
  long long total_weight() const;

  bool connected() const;
  bool all_weights_one() const;
  // E - V + 1; requires a connected graph with all weights +1.
  int loop_number() const;

  // Connected components of G minus the four cut vertices, as sorted vertex
  // lists ordered by smallest member. Edges inside the cut are ignored.
  std::vector<std::vector<int>> split_by_cut(const std::array<int, 4>& cut) const;

  const std::optional<RotationSystem>& rotation() const { return rotation_; }
  const MarkerMap& markers() const { return markers_; }
  std::optional<int> marker(const std::string& name) const;

 private:
  std::vector<int> vertices_;
  std::vector<WeightedEdge> edges_;
  std::optional<RotationSystem> rotation_;
  MarkerMap markers_;
  std::map<int, int> index_of_;
  std::vector<std::vector<Incidence>> adjacency_;
};

}  // namespace pforge
