#include "pforge/families.hpp"

#include <algorithm>
#include <map>

#include "pforge/transforms.hpp"

namespace pforge {

Multigraph zigzag_completed(int n) {
  if (n < 3) throw std::invalid_argument("zig-zag graphs need n >= 3");
  int size = n + 2;
  std::vector<int> vertices(size);
  for (int i = 0; i < size; ++i) vertices[i] = i;
  std::vector<WeightedEdge> edges;
  int id = 0;
  for (int d : {1, 2})
    for (int i = 0; i < size; ++i) edges.push_back({id++, i, (i + d) % size, 1});
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph zigzag(int n) {
  Multigraph completed = zigzag_completed(n);
  int removed = n + 1;
  std::vector<int> vertices(n + 1);
  for (int i = 0; i <= n; ++i) vertices[i] = i;
  std::vector<WeightedEdge> edges;
  int id = 0;
  for (const WeightedEdge& e : completed.edges())
    if (e.u != removed && e.v != removed) edges.push_back({id++, e.u, e.v, 1});
  return Multigraph(std::move(vertices), std::move(edges));
}

FamilyLabels family_labels(const FamilyParams& p) {
  FamilyLabels lab;
  int next = 0;
  lab.apex = next++;
  for (int i = 0; i <= p.m; ++i) lab.top.push_back(next++);
  for (int i = 0; i <= p.m; ++i) lab.bottom.push_back(next++);

  lab.left_inner.push_back(lab.top.front());
  for (int j = 1; j < p.k; ++j) lab.left_inner.push_back(next++);
  lab.left_inner.push_back(lab.bottom.front());
  for (int j = 1; j <= p.k; ++j) lab.left_outer.push_back(next++);

  lab.right_inner.push_back(lab.top.back());
  for (int j = 1; j < p.l; ++j) lab.right_inner.push_back(next++);
  lab.right_inner.push_back(lab.bottom.back());
  for (int j = 1; j <= p.l; ++j) lab.right_outer.push_back(next++);
  return lab;
}

Multigraph family_graph(const FamilyParams& p) {
  const FamilyLabels lab = family_labels(p);
  const int k = p.k, l = p.l, m = p.m;
  const auto& T = lab.top;
  const auto& U = lab.bottom;
  const auto& r = lab.left_inner;   // r[0] = T[0], r[k] = U[0]
  const auto& s = lab.left_outer;   // s[0] = s_1, ..., s[k-1] = s_k
  const auto& rp = lab.right_inner;
  const auto& sp = lab.right_outer;

  std::vector<WeightedEdge> edges;
  std::map<std::pair<int, int>, int> edge_id;
  int id = 0;
  auto add = [&](int u, int v) {
    edges.push_back({id, u, v, 1});
    edge_id[{std::min(u, v), std::max(u, v)}] = id;
    ++id;
  };

  for (int i = 0; i < m; ++i) add(T[i], T[i + 1]);   // upper rail
  for (int i = 0; i < m; ++i) add(U[i], U[i + 1]);   // lower rail
  for (int i = 1; i < m; ++i) add(T[i], U[i]);       // interior rungs
  for (int j = 0; j < k; ++j) add(r[j], r[j + 1]);   // left inner column
  for (int j = 0; j + 1 < k; ++j) add(s[j], s[j + 1]);  // left outer column
  for (int j = 1; j <= k; ++j) {                     // left zigzag
    add(r[j - 1], s[j - 1]);
    add(s[j - 1], r[j]);
  }
  for (int j = 0; j < l; ++j) add(rp[j], rp[j + 1]);
  for (int j = 0; j + 1 < l; ++j) add(sp[j], sp[j + 1]);
  for (int j = 1; j <= l; ++j) {
    add(rp[j - 1], sp[j - 1]);
    add(sp[j - 1], rp[j]);
  }
  for (int i = 0; i <= m; ++i) add(lab.apex, T[i]);  // apex fan
  add(lab.apex, s[0]);
  add(lab.apex, sp[0]);

  // Counterclockwise rotations of the drawn embedding: rails run left to
  // right, inner columns down the rail ends, outer columns one step further
  // out, apex on top with its two outer-column edges routed around the
  // outside of the triangle ladders.
  RotationSystem rot;
  auto eid = [&](int u, int v) { return edge_id.at({std::min(u, v), std::max(u, v)}); };
  auto cycle = [&](int v, const std::vector<int>& neighbors) {
    std::vector<int> c;
    c.reserve(neighbors.size());
    for (int w : neighbors) c.push_back(eid(v, w));
    rot[v] = std::move(c);
  };

  {
    std::vector<int> apex_nb = {sp[0], s[0]};
    for (int i = 0; i <= m; ++i) apex_nb.push_back(T[i]);
    cycle(lab.apex, apex_nb);
  }
  cycle(T[0], {T[1], lab.apex, s[0], r[1]});
  for (int i = 1; i < m; ++i) cycle(T[i], {T[i + 1], lab.apex, T[i - 1], U[i]});
  cycle(T[m], {lab.apex, T[m - 1], rp[1], sp[0]});
  cycle(U[0], {U[1], r[k - 1], s[k - 1]});
  for (int i = 1; i < m; ++i) cycle(U[i], {U[i + 1], T[i], U[i - 1]});
  cycle(U[m], {sp[l - 1], rp[l - 1], U[m - 1]});
  for (int j = 1; j < k; ++j) cycle(r[j], {r[j - 1], s[j - 1], s[j], r[j + 1]});
  for (int j = 1; j < l; ++j) cycle(rp[j], {sp[j - 1], rp[j - 1], rp[j + 1], sp[j]});
  if (k == 1) {
    cycle(s[0], {T[0], lab.apex, U[0]});
  } else {
    cycle(s[0], {T[0], lab.apex, s[1], r[1]});
    for (int j = 1; j + 1 < k; ++j) cycle(s[j], {r[j], s[j - 1], s[j + 1], r[j + 1]});
    cycle(s[k - 1], {r[k - 1], s[k - 2], U[0]});
  }
  if (l == 1) {
    cycle(sp[0], {lab.apex, T[m], U[m]});
  } else {
    cycle(sp[0], {lab.apex, T[m], rp[1], sp[1]});
    for (int j = 1; j + 1 < l; ++j) cycle(sp[j], {sp[j - 1], rp[j], rp[j + 1], sp[j + 1]});
    cycle(sp[l - 1], {sp[l - 2], rp[l - 1], U[m]});
  }

  std::vector<int> vertices;
  for (int v = 0; v < 2 * (k + l + m) + 1; ++v) vertices.push_back(v);
  MarkerMap markers = {{"a", lab.apex}, {"b", T[1]}, {"zero", U[1]}};
  return Multigraph(std::move(vertices), std::move(edges), std::move(rot),
                    std::move(markers));
}

Multigraph family_dual(const FamilyParams& p) {
  return planar_dual(family_graph(p));
}

}  // namespace pforge
