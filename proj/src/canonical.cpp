#include "pforge/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pforge {

namespace {

// Search state over vertex indices 0..n-1 of a fixed graph.
struct Canonicalizer {
  const Multigraph& g;
  int n;
  // adjacency as (neighbor index, weight) per vertex index
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit Canonicalizer(const Multigraph& graph)
      : g(graph), n(graph.vertex_count()), adj(n) {
    for (const WeightedEdge& e : g.edges()) {
      int iu = g.vertex_index(e.u), iv = g.vertex_index(e.v);
      adj[iu].push_back({iv, e.weight});
      adj[iv].push_back({iu, e.weight});
    }
  }

  // Refine colors until stable. Color ids are assigned by sorted signature,
  // which makes them isomorphism-invariant.
  void refine(std::vector<int>& color) const {
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.reserve(2 * adj[v].size() + 1);
        s.push_back(color[v]);
        std::vector<std::pair<int, int>> nb;
        nb.reserve(adj[v].size());
        for (auto [w, wt] : adj[v]) nb.push_back({color[w], wt});
        std::sort(nb.begin(), nb.end());
        for (auto [c, wt] : nb) {
          s.push_back(c);
          s.push_back(wt);
        }
        sig[v] = {std::move(s), v};
      }
      std::vector<std::pair<std::vector<int>, int>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      std::map<std::vector<int>, int> id;
      for (const auto& [s, v] : sorted) {
        (void)v;
        if (!id.count(s)) {
          int next = static_cast<int>(id.size());
          id[s] = next;
        }
      }
      int new_classes = static_cast<int>(id.size());
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v) next[v] = id[sig[v].first];
      color = std::move(next);
      if (new_classes == classes) return;
      classes = new_classes;
    }
  }

  // Certificate edge list for a discrete coloring.
  std::vector<std::array<int, 3>> edges_under(const std::vector<int>& color) const {
    std::vector<std::array<int, 3>> out;
    out.reserve(g.edge_count());
    for (const WeightedEdge& e : g.edges()) {
      int cu = color[g.vertex_index(e.u)], cv = color[g.vertex_index(e.v)];
      if (cu > cv) std::swap(cu, cv);
      out.push_back({cu, cv, e.weight});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool discrete(const std::vector<int>& color) const {
    std::vector<char> seen(n, 0);
    for (int c : color) {
      if (seen[c]) return false;
      seen[c] = 1;
    }
    return true;
  }

  // First smallest non-singleton class by (size, color id); both components
  // are isomorphism-invariant.
  int target_cell(const std::vector<int>& color) const {
    std::map<int, int> size;
    for (int c : color) ++size[c];
    int best = -1, best_size = n + 1;
    for (const auto& [c, s] : size)
      if (s >= 2 && s < best_size) {
        best = c;
        best_size = s;
      }
    return best;
  }

  void search(std::vector<int> color, std::vector<std::array<int, 3>>& best_edges,
              std::vector<int>& best_color, bool& have_best) const {
    refine(color);
    if (discrete(color)) {
      std::vector<std::array<int, 3>> edges = edges_under(color);
      if (!have_best || edges < best_edges) {
        best_edges = std::move(edges);
        best_color = std::move(color);
        have_best = true;
      }
      return;
    }
    int cell = target_cell(color);
    for (int v = 0; v < n; ++v) {
      if (color[v] != cell) continue;
      std::vector<int> branched = color;
      branched[v] = n;  // fresh color, larger than all refined ids
      search(std::move(branched), best_edges, best_color, have_best);
    }
  }
};

}  // namespace

std::string Certificate::key() const {
  std::ostringstream os;
  os << vertex_count << ';';
  for (const auto& e : edges) os << e[0] << ',' << e[1] << ',' << e[2] << ';';
  return os.str();
}

Certificate canonical_form(const Multigraph& g) {
  Canonicalizer c(g);
  std::vector<std::array<int, 3>> best_edges;
  std::vector<int> best_color;
  bool have_best = false;
  c.search(std::vector<int>(c.n, 0), best_edges, best_color, have_best);

  Certificate cert;
  cert.vertex_count = c.n;
  cert.edges = std::move(best_edges);
  cert.relabeling.reserve(c.n);
  for (int i = 0; i < c.n; ++i)
    cert.relabeling.push_back({g.vertices()[i], best_color[i]});
  return cert;
}

namespace {

// Check that the vertex map sends g1's weighted edge multiset onto g2's.
bool witness_valid(const Multigraph& g1, const Multigraph& g2,
                   const std::vector<std::pair<int, int>>& map) {
  if (g1.edge_count() != g2.edge_count()) return false;
  std::map<int, int> f(map.begin(), map.end());
  std::vector<std::array<int, 3>> a, b;
  for (const WeightedEdge& e : g1.edges()) {
    auto fu = f.find(e.u), fv = f.find(e.v);
    if (fu == f.end() || fv == f.end()) return false;
    int u = fu->second, v = fv->second;
    if (u > v) std::swap(u, v);
    a.push_back({u, v, e.weight});
  }
  for (const WeightedEdge& e : g2.edges()) {
    int u = e.u, v = e.v;
    if (u > v) std::swap(u, v);
    b.push_back({u, v, e.weight});
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> isomorphism(const Multigraph& g1,
                                                            const Multigraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;

  // Cheap invariant screen before canonicalizing.
  auto degree_profile = [](const Multigraph& g) {
    std::vector<std::pair<int, int>> p;
    for (int v : g.vertices()) p.push_back({g.weighted_degree(v), g.degree(v)});
    std::sort(p.begin(), p.end());
    return p;
  };
  if (degree_profile(g1) != degree_profile(g2)) return std::nullopt;

  Certificate c1 = canonical_form(g1), c2 = canonical_form(g2);
  if (!c1.same_graph(c2)) return std::nullopt;

  // canonical label -> g2 vertex, composed with g1 vertex -> canonical label
  std::vector<int> inverse(c2.vertex_count);
  for (const auto& [v, label] : c2.relabeling) inverse[label] = v;
  std::vector<std::pair<int, int>> witness;
  witness.reserve(c1.relabeling.size());
  for (const auto& [v, label] : c1.relabeling) witness.push_back({v, inverse[label]});

  if (!witness_valid(g1, g2, witness))
    throw invariant_violation("canonical certificates matched but witness failed");
  return witness;
}

bool is_isomorphic(const Multigraph& g1, const Multigraph& g2) {
  return isomorphism(g1, g2).has_value();
}

}  // namespace pforge
