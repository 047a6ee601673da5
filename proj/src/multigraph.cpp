#include "pforge/multigraph.hpp"

#include <algorithm>
#include <set>

namespace pforge {

namespace {

const std::set<std::string> kMarkerNames = {"a", "b", "zero", "infinity"};

}  // namespace

Multigraph::Multigraph(std::vector<int> vertices, std::vector<WeightedEdge> edges,
                       std::optional<RotationSystem> rotation, MarkerMap markers)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)),
      markers_(std::move(markers)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
    index_of_[vertices_[i]] = i;

  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.id < b.id; });
  adjacency_.assign(vertices_.size(), {});
  std::set<int> edge_ids;
  for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
    const WeightedEdge& e = edges_[k];
    if (!edge_ids.insert(e.id).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    auto iu = index_of_.find(e.u), iv = index_of_.find(e.v);
    if (iu == index_of_.end() || iv == index_of_.end())
      throw std::invalid_argument("edge " + std::to_string(e.id) +
                                  " references an undeclared vertex");
    if (e.u == e.v)
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (e.weight == 0)
      throw std::invalid_argument("edge " + std::to_string(e.id) + " has zero weight");
    adjacency_[iu->second].push_back({k, e.v});
    adjacency_[iv->second].push_back({k, e.u});
  }

  for (const auto& [name, v] : markers_) {
    if (!kMarkerNames.count(name))
      throw std::invalid_argument("unknown marker name '" + name + "'");
    if (!index_of_.count(v))
      throw std::invalid_argument("marker '" + name + "' points to unknown vertex");
  }

  if (rotation_) {
    for (int v : vertices_) {
      auto it = rotation_->find(v);
      const std::vector<Incidence>& inc = adjacency_[index_of_[v]];
      if (it == rotation_->end()) {
        if (!inc.empty())
          throw std::invalid_argument("rotation missing vertex " + std::to_string(v));
        continue;
      }
      std::multiset<int> expected, given(it->second.begin(), it->second.end());
      for (const Incidence& in : inc) expected.insert(edges_[in.edge_index].id);
      if (expected != given)
        throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                    " does not list each incident edge exactly once");
    }
    for (const auto& [v, cycle] : *rotation_) {
      (void)cycle;
      if (!index_of_.count(v))
        throw std::invalid_argument("rotation references unknown vertex " + std::to_string(v));
    }
  }
}

bool Multigraph::has_vertex(int v) const { return index_of_.count(v) > 0; }

int Multigraph::vertex_index(int v) const {
  auto it = index_of_.find(v);
  if (it == index_of_.end())
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return it->second;
}

const std::vector<Incidence>& Multigraph::incident(int v) const {
  return adjacency_[vertex_index(v)];
}

int Multigraph::degree(int v) const {
  return static_cast<int>(incident(v).size());
}

int Multigraph::weighted_degree(int v) const {
  int sum = 0;
  for (const Incidence& in : incident(v)) sum += edges_[in.edge_index].weight;
  return sum;
}

long long Multigraph::total_weight() const {
  long long sum = 0;
  for (const WeightedEdge& e : edges_) sum += e.weight;
  return sum;
}

bool Multigraph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const Incidence& in : adjacency_[i]) {
      int j = index_of_.at(in.other);
      if (!seen[j]) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == static_cast<int>(vertices_.size());
}

bool Multigraph::all_weights_one() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const WeightedEdge& e) { return e.weight == 1; });
}

int Multigraph::loop_number() const {
  if (!all_weights_one())
    throw std::invalid_argument("loop_number requires all edge weights +1");
  if (!connected())
    throw std::invalid_argument("loop_number requires a connected graph");
  return edge_count() - vertex_count() + 1;
}

std::vector<std::vector<int>> Multigraph::split_by_cut(
    const std::array<int, 4>& cut) const {
  std::set<int> cut_set(cut.begin(), cut.end());
  if (cut_set.size() != 4)
    throw std::invalid_argument("cut vertices must be distinct");
  for (int v : cut) vertex_index(v);

  std::map<int, int> component;  // vertex -> component index
  std::vector<std::vector<int>> result;
  for (int v : vertices_) {
    if (cut_set.count(v) || component.count(v)) continue;
    std::vector<int> members;
    std::vector<int> stack = {v};
    component[v] = static_cast<int>(result.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (const Incidence& in : adjacency_[index_of_.at(x)]) {
        if (cut_set.count(in.other) || component.count(in.other)) continue;
        component[in.other] = static_cast<int>(result.size());
        stack.push_back(in.other);
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<int> Multigraph::marker(const std::string& name) const {
  auto it = markers_.find(name);
  if (it == markers_.end()) return std::nullopt;
  return it->second;
}

}  // namespace pforge
