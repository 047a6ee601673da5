#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pforge/multigraph.hpp"

namespace pforge {

// Canonical certificate of a weighted multigraph. Two graphs have equal
// invariant parts (vertex_count, edges) exactly when they are isomorphic.
// Markers and rotation systems are ignored.
struct Certificate {
  int vertex_count = 0;
  // (cu, cv, weight) with cu < cv, sorted; parallel edges repeat.
  std::vector<std::array<int, 3>> edges;
  // original vertex id -> canonical label in [0, vertex_count)
  std::vector<std::pair<int, int>> relabeling;

  bool same_graph(const Certificate& other) const {
    return vertex_count == other.vertex_count && edges == other.edges;
  }
  // Serialized invariant part, usable as a hash/memo key.
  std::string key() const;
};

// Canonical labeling by iterative color refinement with backtracking over
// tied color classes. Exponential worst case, fine for the <=40-vertex
// graphs handled here.
Certificate canonical_form(const Multigraph& g);

// Vertex bijection g1 -> g2 inducing a weight-preserving edge-multiset
// bijection, if one exists. The witness is verified before it is returned.
std::optional<std::vector<std::pair<int, int>>> isomorphism(const Multigraph& g1,
                                                            const Multigraph& g2);

bool is_isomorphic(const Multigraph& g1, const Multigraph& g2);

}  // namespace pforge
