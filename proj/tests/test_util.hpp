#pragma once

#include <random>
#include <utility>
#include <vector>

#include "pforge/multigraph.hpp"

namespace test_util {

// Simple +1-weighted graph on vertices 0..n-1 with edge ids 0,1,2,...
inline pforge::Multigraph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> vertices(n);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  std::vector<pforge::WeightedEdge> edges;
  int id = 0;
  for (auto [u, v] : pairs) edges.push_back({id++, u, v, 1});
  return pforge::Multigraph(std::move(vertices), std::move(edges));
}

inline pforge::Multigraph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return make_graph(n, pairs);
}

inline pforge::Multigraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 1) % n});
  return make_graph(n, pairs);
}

inline pforge::Multigraph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  return make_graph(n, pairs);
}

// Random vertex relabeling of g (same structure, shuffled ids and order).
inline pforge::Multigraph relabel(const pforge::Multigraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<pforge::WeightedEdge> edges;
  for (const pforge::WeightedEdge& e : g.edges())
    edges.push_back({e.id, perm[g.vertex_index(e.u)], perm[g.vertex_index(e.v)],
                     e.weight});
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> ids(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) ids[i] = static_cast<int>(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (size_t i = 0; i < edges.size(); ++i) edges[i].id = ids[i];
  std::vector<int> vertices(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) vertices[i] = i;
  return pforge::Multigraph(std::move(vertices), std::move(edges));
}

// Random connected multigraph: a random spanning tree plus random extra
// parallel-allowed edges, all weights +1.
inline pforge::Multigraph random_connected_multigraph(std::mt19937& rng,
                                                      int max_vertices,
                                                      int max_edges) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  int n = nv(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> attach(0, v - 1);
    pairs.push_back({attach(rng), v});
  }
  std::uniform_int_distribution<int> ne(0, max_edges - static_cast<int>(pairs.size()));
  int extra = ne(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    pairs.push_back({u, v});
  }
  return make_graph(n, pairs);
}

}  // namespace test_util
