#include "pforge/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pforge/canonical.hpp"

namespace pforge {

Multigraph complete(const Multigraph& g) {
  if (!g.connected()) throw std::invalid_argument("complete: graph must be connected");
  if (!g.all_weights_one())
    throw std::invalid_argument("complete: all edge weights must be +1");
  for (int v : g.vertices())
    if (g.degree(v) < 3)
      throw std::invalid_argument("complete: vertex " + std::to_string(v) +
                                  " has degree < 3");

  int inf = g.vertices().back() + 1;
  std::vector<int> vertices = g.vertices();
  vertices.push_back(inf);
  std::vector<WeightedEdge> edges = g.edges();
  int next_id = edges.empty() ? 0 : edges.back().id + 1;

  std::map<int, int> wdeg;
  for (int v : g.vertices()) wdeg[v] = g.weighted_degree(v);
  for (int v : g.vertices())
    for (int d = wdeg[v]; d < 4; ++d) edges.push_back({next_id++, v, inf, 1});
  for (int v : g.vertices())
    if (wdeg[v] > 4) edges.push_back({next_id++, v, inf, 4 - wdeg[v]});

  MarkerMap markers = g.markers();
  markers["infinity"] = inf;
  Multigraph out(std::move(vertices), std::move(edges), std::nullopt,
                 std::move(markers));
  for (int v : out.vertices())
    if (out.weighted_degree(v) != 4) {
      if (v == inf)
        throw std::invalid_argument("complete: not completable to 4-regular");
      throw invariant_violation("complete: vertex " + std::to_string(v) +
                                " is not weighted-4-valent after completion");
    }
  return out;
}

Multigraph decomplete(const Multigraph& g, int v) {
  g.vertex_index(v);
  for (const WeightedEdge& e : g.edges())
    if (e.weight < 0 && e.u != v && e.v != v)
      throw std::invalid_argument(
          "decomplete: negative edge " + std::to_string(e.id) +
          " is not incident to the removed vertex");

  std::vector<int> vertices;
  for (int w : g.vertices())
    if (w != v) vertices.push_back(w);
  std::vector<WeightedEdge> edges;
  for (const WeightedEdge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back(e);
  MarkerMap markers;
  for (const auto& [name, w] : g.markers())
    if (w != v) markers[name] = w;
  return Multigraph(std::move(vertices), std::move(edges), std::nullopt,
                    std::move(markers));
}

Multigraph twist(const Multigraph& g, const TwistCut& cut, int side) {
  for (int v : g.vertices())
    if (g.weighted_degree(v) != 4)
      throw std::invalid_argument("twist: graph is not weighted-4-regular");

  const std::array<int, 4> cut_vertices = {cut.a, cut.b, cut.zero, cut.infinity};
  std::vector<std::vector<int>> components = g.split_by_cut(cut_vertices);
  if (components.size() < 2)
    throw std::invalid_argument("twist: cut does not separate the graph");
  std::set<int> side_set;
  for (const auto& comp : components)
    if (std::binary_search(comp.begin(), comp.end(), side)) {
      side_set.insert(comp.begin(), comp.end());
      break;
    }
  if (side_set.empty())
    throw std::invalid_argument("twist: side vertex is not in any component");

  std::map<int, int> swap_to = {{cut.a, cut.b},
                                {cut.b, cut.a},
                                {cut.zero, cut.infinity},
                                {cut.infinity, cut.zero}};
  std::set<int> cut_set(cut_vertices.begin(), cut_vertices.end());

  // Unordered cut pairs of the 4-cycle a-0-b-inf; the diagonals {a,b} and
  // {0,inf} pass through untouched.
  auto pair_key = [](int x, int y) {
    return std::make_pair(std::min(x, y), std::max(x, y));
  };
  const std::array<std::pair<int, int>, 4> cycle_pairs = {
      pair_key(cut.a, cut.zero), pair_key(cut.zero, cut.b),
      pair_key(cut.b, cut.infinity), pair_key(cut.infinity, cut.a)};
  auto cycle_pair_index = [&](int x, int y) -> int {
    auto key = pair_key(x, y);
    for (int i = 0; i < 4; ++i)
      if (cycle_pairs[i] == key) return i;
    return -1;
  };

  std::vector<WeightedEdge> edges;
  std::array<long long, 4> pair_weight = {0, 0, 0, 0};
  int max_id = -1;
  for (const WeightedEdge& e : g.edges()) {
    max_id = std::max(max_id, e.id);
    bool u_cut = cut_set.count(e.u), v_cut = cut_set.count(e.v);
    if (u_cut && v_cut) {
      int idx = cycle_pair_index(e.u, e.v);
      if (idx >= 0)
        pair_weight[idx] += e.weight;  // rebuilt below
      else
        edges.push_back(e);            // diagonal, untouched
    } else if (u_cut && side_set.count(e.v)) {
      edges.push_back({e.id, swap_to[e.u], e.v, e.weight});
    } else if (v_cut && side_set.count(e.u)) {
      edges.push_back({e.id, e.u, swap_to[e.v], e.weight});
    } else {
      edges.push_back(e);
    }
  }

  // Degree deficits after the swap determine the two opposite-pair
  // transfers; handshake parity makes them integers.
  std::map<int, long long> wdeg;
  for (const WeightedEdge& e : edges) {
    wdeg[e.u] += e.weight;
    wdeg[e.v] += e.weight;
  }
  for (int i = 0; i < 4; ++i) {
    auto [x, y] = cycle_pairs[i];
    wdeg[x] += pair_weight[i];
    wdeg[y] += pair_weight[i];
  }
  long long da = wdeg[cut.a] - 4, d0 = wdeg[cut.zero] - 4;
  long long db = wdeg[cut.b] - 4, dinf = wdeg[cut.infinity] - 4;
  if (db != -da || dinf != -d0)
    throw invariant_violation("twist: asymmetric degree deficits after swap");
  if ((da + d0) % 2 != 0)
    throw invariant_violation("twist: non-integral rebalancing transfer");
  long long t1 = (da + d0) / 2;  // {a,0} -> {b,inf}
  long long t2 = (d0 - da) / 2;  // {0,b} -> {inf,a}

  pair_weight[cycle_pair_index(cut.a, cut.zero)] -= t1;
  pair_weight[cycle_pair_index(cut.b, cut.infinity)] += t1;
  pair_weight[cycle_pair_index(cut.zero, cut.b)] -= t2;
  pair_weight[cycle_pair_index(cut.infinity, cut.a)] += t2;

  int next_id = max_id + 1;
  for (int i = 0; i < 4; ++i)
    if (pair_weight[i] != 0)
      edges.push_back({next_id++, cycle_pairs[i].first, cycle_pairs[i].second,
                       static_cast<int>(pair_weight[i])});

  Multigraph out(g.vertices(), std::move(edges), std::nullopt, g.markers());
  for (int v : out.vertices())
    if (out.weighted_degree(v) != 4)
      throw invariant_violation("twist: result is not weighted-4-regular");
  if (out.total_weight() != g.total_weight())
    throw invariant_violation("twist: total edge weight changed");
  return out;
}

namespace {

// Dart d of edge e: d = 2*edge_index + s, leaving u for s = 0 and v for
// s = 1. Faces are the orbits of next(d) = successor of rev(d) in the
// rotation at the vertex d points to.
struct FaceTracer {
  const Multigraph& g;
  std::vector<int> next_dart;
  std::vector<std::vector<int>> faces;    // dart sequences
  std::vector<int> face_of;               // dart -> face index

  explicit FaceTracer(const Multigraph& graph) : g(graph) {
    if (!g.rotation())
      throw std::invalid_argument("planar dual requires a rotation system");
    const RotationSystem& rot = *g.rotation();
    std::map<int, int> edge_index;
    for (int i = 0; i < g.edge_count(); ++i) edge_index[g.edges()[i].id] = i;

    // successor dart of each dart's reversal, per vertex cycle
    next_dart.assign(2 * g.edge_count(), -1);
    for (const auto& [v, cycle] : rot) {
      int len = static_cast<int>(cycle.size());
      for (int i = 0; i < len; ++i) {
        const WeightedEdge& cur = g.edges()[edge_index.at(cycle[i])];
        const WeightedEdge& nxt = g.edges()[edge_index.at(cycle[(i + 1) % len])];
        // dart of `cur` pointing to v; its next is the dart of `nxt` leaving v
        int incoming = 2 * edge_index.at(cur.id) + (cur.v == v ? 0 : 1);
        int outgoing = 2 * edge_index.at(nxt.id) + (nxt.u == v ? 0 : 1);
        next_dart[incoming] = outgoing;
      }
    }

    face_of.assign(2 * g.edge_count(), -1);
    for (int d = 0; d < 2 * g.edge_count(); ++d) {
      if (face_of[d] >= 0) continue;
      std::vector<int> face;
      int cur = d;
      while (face_of[cur] < 0) {
        face_of[cur] = static_cast<int>(faces.size());
        face.push_back(cur);
        cur = next_dart[cur];
        if (cur < 0) throw invariant_violation("face tracing left the rotation");
      }
      faces.push_back(std::move(face));
    }
  }
};

}  // namespace

Multigraph planar_dual(const Multigraph& g) {
  if (!g.connected())
    throw std::invalid_argument("planar dual requires a connected graph");
  if (!g.all_weights_one())
    throw std::invalid_argument("planar dual requires all edge weights +1");
  FaceTracer tracer(g);
  int faces = static_cast<int>(tracer.faces.size());
  if (g.vertex_count() - g.edge_count() + faces != 2)
    throw std::invalid_argument("rotation not planar");

  std::vector<int> vertices(faces);
  for (int f = 0; f < faces; ++f) vertices[f] = f;
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    int left = tracer.face_of[2 * i], right = tracer.face_of[2 * i + 1];
    if (left == right)
      throw std::invalid_argument("planar dual would need a self-loop (bridge edge)");
    edges.push_back({g.edges()[i].id, left, right, 1});
  }
  RotationSystem rot;
  for (int f = 0; f < faces; ++f) {
    std::vector<int> cycle;
    cycle.reserve(tracer.faces[f].size());
    for (int d : tracer.faces[f]) cycle.push_back(g.edges()[d / 2].id);
    rot[f] = std::move(cycle);
  }
  return Multigraph(std::move(vertices), std::move(edges), std::move(rot));
}

ChainReport reduce_to_zigzag(const FamilyParams& p) {
  std::vector<ChainStep> steps;
  bool all_ok = true;
  for (int i = 0; i + 1 < p.m; ++i) {
    FamilyParams from(p.k + i, p.l, p.m - i);
    FamilyParams to(p.k + i + 1, p.l, p.m - i - 1);
    Multigraph completed = complete(family_graph(from));
    TwistCut cut = {*completed.marker("a"), *completed.marker("b"),
                    *completed.marker("zero"), *completed.marker("infinity")};
    int side = family_labels(from).left_outer.front();  // s_1
    Multigraph twisted = twist(completed, cut, side);

    Multigraph next_completed = complete(family_graph(to));
    bool twist_ok = is_isomorphic(twisted, next_completed);
    Multigraph uncompleted = decomplete(twisted, cut.infinity);
    bool decomplete_ok = is_isomorphic(uncompleted, family_graph(to));
    all_ok = all_ok && twist_ok && decomplete_ok;
    steps.push_back({from, to, std::move(completed), std::move(twisted), twist_ok,
                     decomplete_ok});
  }

  Multigraph terminal = family_graph(FamilyParams(p.k + p.m - 1, p.l, 1));
  Multigraph target = zigzag(p.n());
  bool terminal_ok = is_isomorphic(terminal, target);
  return ChainReport{p,
                     std::move(steps),
                     std::move(terminal),
                     std::move(target),
                     terminal_ok,
                     all_ok && terminal_ok};
}

}  // namespace pforge
