#include "pforge/kirchhoff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "pforge/canonical.hpp"

namespace pforge {

int GraphPolynomial::degree() const {
  if (monomials.empty()) return 0;
  return std::popcount(monomials.front().first);
}

std::string GraphPolynomial::to_string() const {
  if (monomials.empty()) return "0";
  std::ostringstream os;
  bool first_monomial = true;
  for (const auto& [mask, coeff] : monomials) {
    if (!first_monomial) os << " + ";
    first_monomial = false;
    bool need_star = false;
    if (coeff != 1 || mask == 0) {
      os << coeff;
      need_star = true;
    }
    for (size_t i = 0; i < variables.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) {
        if (need_star) os << '*';
        os << 'a' << variables[i];
        need_star = true;
      }
  }
  return os.str();
}

GraphPolynomial complement(const GraphPolynomial& p) {
  std::uint64_t full = p.variables.size() == 64
                           ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << p.variables.size()) - 1;
  GraphPolynomial out;
  out.variables = p.variables;
  out.monomials.reserve(p.monomials.size());
  for (const auto& [mask, coeff] : p.monomials)
    out.monomials.push_back({full & ~mask, coeff});
  std::sort(out.monomials.begin(), out.monomials.end());
  return out;
}

namespace {

void check_psi_preconditions(const Multigraph& g, int max_edges) {
  if (!g.all_weights_one())
    throw std::invalid_argument("graph polynomial requires all edge weights +1");
  if (!g.connected())
    throw std::invalid_argument("graph polynomial requires a connected graph");
  if (g.edge_count() > max_edges)
    throw std::invalid_argument(
        "edge count " + std::to_string(g.edge_count()) + " exceeds the symbolic bound " +
        std::to_string(max_edges) + "; use the numeric evaluation instead");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

// Spanning tree enumeration: binary include/exclude recursion over edges in
// id order, pruning branches whose remaining edges cannot reconnect the
// current forest.
struct TreeEnumerator {
  int n;
  std::vector<std::pair<int, int>> edge_index_pairs;  // (iu, iv) per edge
  std::uint64_t full_mask;
  std::vector<std::pair<std::uint64_t, long long>> out;

  bool can_connect(const UnionFind& uf, int from_edge) const {
    UnionFind probe = uf;
    int components = 0;
    std::vector<char> seen(n, 0);
    for (int i = from_edge; i < static_cast<int>(edge_index_pairs.size()); ++i)
      probe.unite(edge_index_pairs[i].first, edge_index_pairs[i].second);
    for (int v = 0; v < n; ++v) {
      int root = probe.find(v);
      if (!seen[root]) {
        seen[root] = 1;
        ++components;
      }
    }
    return components == 1;
  }

  void recurse(int i, UnionFind uf, std::uint64_t tree, int picked) {
    if (picked == n - 1) {
      out.push_back({full_mask & ~tree, 1});
      return;
    }
    if (i >= static_cast<int>(edge_index_pairs.size())) return;
    if (!can_connect(uf, i)) return;
    auto [u, v] = edge_index_pairs[i];
    UnionFind with = uf;
    if (with.unite(u, v))
      recurse(i + 1, std::move(with), tree | (std::uint64_t{1} << i), picked + 1);
    recurse(i + 1, std::move(uf), tree, picked);
  }
};

}  // namespace

GraphPolynomial psi_enumerate(const Multigraph& g, int max_edges) {
  check_psi_preconditions(g, max_edges);
  TreeEnumerator en;
  en.n = g.vertex_count();
  for (const WeightedEdge& e : g.edges())
    en.edge_index_pairs.push_back({g.vertex_index(e.u), g.vertex_index(e.v)});
  en.full_mask = g.edge_count() == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << g.edge_count()) - 1;
  en.recurse(0, UnionFind(en.n), 0, 0);

  GraphPolynomial p;
  for (const WeightedEdge& e : g.edges()) p.variables.push_back(e.id);
  p.monomials = std::move(en.out);
  std::sort(p.monomials.begin(), p.monomials.end());
  return p;
}

namespace {

// Minor of the deletion/contraction recursion: vertices 0..n-1 and edges
// carrying their original ids. Parallel edges arise from contraction;
// edges parallel to a contracted edge become forced cotree factors.
struct Minor {
  int n;
  std::vector<std::array<int, 3>> edges;  // (u, v, original id)

  Multigraph to_multigraph() const {
    std::vector<int> vertices(n);
    for (int i = 0; i < n; ++i) vertices[i] = i;
    std::vector<WeightedEdge> list;
    list.reserve(edges.size());
    for (const auto& [u, v, id] : edges) list.push_back({id, u, v, 1});
    return Multigraph(std::move(vertices), std::move(list));
  }

  bool connected() const {
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v, id] : edges) {
      (void)id;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n;
  }
};

// Polynomial with explicit edge-id sets per monomial, the working form of
// the recursion (masks are only assembled at the end).
using IdPolynomial = std::vector<std::pair<std::vector<int>, long long>>;

void sort_ids(IdPolynomial& p) {
  for (auto& [ids, coeff] : p) {
    (void)coeff;
    std::sort(ids.begin(), ids.end());
  }
  std::sort(p.begin(), p.end());
}

struct DelContract {
  std::unordered_map<std::string, IdPolynomial> memo;  // canonical key -> slot poly

  // Map between this minor's edge ids and canonical slot numbers. Slots are
  // positions in the certificate's sorted edge list; parallel same-weight
  // edges are interchangeable (swapping them is a graph automorphism), so
  // ties are broken by original id.
  static std::vector<std::pair<int, int>> slot_map(const Minor& m,
                                                   const Certificate& cert) {
    std::map<int, int> canon_of;
    for (const auto& [v, label] : cert.relabeling) canon_of[v] = label;
    std::vector<std::pair<std::array<int, 3>, int>> keyed;
    keyed.reserve(m.edges.size());
    for (const auto& [u, v, id] : m.edges) {
      int cu = canon_of[u], cv = canon_of[v];
      if (cu > cv) std::swap(cu, cv);
      keyed.push_back({{cu, cv, 1}, id});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::pair<int, int>> id_to_slot;  // (edge id, slot)
    for (int slot = 0; slot < static_cast<int>(keyed.size()); ++slot)
      id_to_slot.push_back({keyed[slot].second, slot});
    std::sort(id_to_slot.begin(), id_to_slot.end());
    return id_to_slot;
  }

  static IdPolynomial translate(const IdPolynomial& p,
                                const std::vector<int>& slot_to_id) {
    IdPolynomial out;
    out.reserve(p.size());
    for (const auto& [slots, coeff] : p) {
      std::vector<int> ids;
      ids.reserve(slots.size());
      for (int s : slots) ids.push_back(slot_to_id[s]);
      out.push_back({std::move(ids), coeff});
    }
    sort_ids(out);
    return out;
  }

  IdPolynomial run(const Minor& m) {
    if (!m.connected()) return {};
    if (m.edges.empty()) return {{{}, 1}};

    Multigraph mg = m.to_multigraph();
    Certificate cert = canonical_form(mg);
    std::string key = cert.key();
    std::vector<std::pair<int, int>> id_slot = slot_map(m, cert);
    auto hit = memo.find(key);
    if (hit != memo.end()) {
      std::vector<int> slot_to_id(id_slot.size());
      for (const auto& [id, slot] : id_slot) slot_to_id[slot] = id;
      return translate(hit->second, slot_to_id);
    }

    const auto [eu, ev, eid] = m.edges.back();

    // deletion branch: a_e * psi(G \ e)
    Minor deleted{m.n, {m.edges.begin(), m.edges.end() - 1}};
    IdPolynomial result;
    if (deleted.connected()) {
      IdPolynomial del = run(deleted);
      for (auto& [ids, coeff] : del) {
        ids.push_back(eid);
        result.push_back({std::move(ids), coeff});
      }
    }

    // contraction branch: merge ev into eu; parallels of e become loops,
    // i.e. guaranteed cotree factors of psi(G / e)
    Minor contracted;
    contracted.n = m.n - 1;
    std::vector<int> loops;
    auto rename = [&](int x) {
      if (x == ev) x = eu;
      return x > ev ? x - 1 : x;
    };
    for (size_t i = 0; i + 1 < m.edges.size(); ++i) {
      auto [u, v, id] = m.edges[i];
      int nu = rename(u), nv = rename(v);
      if (nu == nv)
        loops.push_back(id);
      else
        contracted.edges.push_back({nu, nv, id});
    }
    IdPolynomial con = run(contracted);
    for (auto& [ids, coeff] : con) {
      ids.insert(ids.end(), loops.begin(), loops.end());
      result.push_back({std::move(ids), coeff});
    }

    sort_ids(result);

    IdPolynomial in_slots;
    {
      std::map<int, int> slot_of(id_slot.begin(), id_slot.end());
      in_slots.reserve(result.size());
      for (const auto& [ids, coeff] : result) {
        std::vector<int> slots;
        slots.reserve(ids.size());
        for (int id : ids) slots.push_back(slot_of[id]);
        in_slots.push_back({std::move(slots), coeff});
      }
      sort_ids(in_slots);
    }
    memo[key] = std::move(in_slots);
    return result;
  }
};

}  // namespace

GraphPolynomial psi_del_contract(const Multigraph& g, int max_edges) {
  check_psi_preconditions(g, max_edges);
  Minor root;
  root.n = g.vertex_count();
  for (const WeightedEdge& e : g.edges())
    root.edges.push_back({g.vertex_index(e.u), g.vertex_index(e.v), e.id});

  DelContract dc;
  IdPolynomial poly = dc.run(root);

  GraphPolynomial p;
  std::map<int, int> bit_of;
  for (const WeightedEdge& e : g.edges()) {
    bit_of[e.id] = static_cast<int>(p.variables.size());
    p.variables.push_back(e.id);
  }
  for (const auto& [ids, coeff] : poly) {
    std::uint64_t mask = 0;
    for (int id : ids) mask |= std::uint64_t{1} << bit_of.at(id);
    p.monomials.push_back({mask, coeff});
  }
  std::sort(p.monomials.begin(), p.monomials.end());
  return p;
}

PsiEvaluator::PsiEvaluator(const Multigraph& g) {
  if (!g.all_weights_one())
    throw std::invalid_argument("psi evaluation requires all edge weights +1");
  if (!g.connected())
    throw std::invalid_argument("psi evaluation requires a connected graph");
  dim_ = g.vertex_count() - 1;
  for (const WeightedEdge& e : g.edges())
    rows_.push_back({g.vertex_index(e.u) - 1, g.vertex_index(e.v) - 1});
  matrix_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
}

double PsiEvaluator::eval(const std::vector<double>& alpha) {
  return std::exp(eval_log(alpha));
}

double PsiEvaluator::eval_log(const std::vector<double>& alpha) {
  if (static_cast<int>(alpha.size()) != static_cast<int>(rows_.size()))
    throw std::invalid_argument("psi evaluation point has wrong dimension");
  std::fill(matrix_.begin(), matrix_.end(), 0.0);
  double log_product = 0.0;
  for (size_t k = 0; k < rows_.size(); ++k) {
    double c = 1.0 / alpha[k];
    log_product += std::log(alpha[k]);
    auto [a, b] = rows_[k];
    if (a >= 0) matrix_[a * dim_ + a] += c;
    if (b >= 0) matrix_[b * dim_ + b] += c;
    if (a >= 0 && b >= 0) {
      matrix_[a * dim_ + b] -= c;
      matrix_[b * dim_ + a] -= c;
    }
  }
  // LU with partial pivoting; the reduced Laplacian is positive definite.
  double log_det = 0.0;
  for (int col = 0; col < dim_; ++col) {
    int pivot = col;
    for (int r = col + 1; r < dim_; ++r)
      if (std::abs(matrix_[r * dim_ + col]) > std::abs(matrix_[pivot * dim_ + col]))
        pivot = r;
    if (pivot != col)
      for (int c = 0; c < dim_; ++c)
        std::swap(matrix_[col * dim_ + c], matrix_[pivot * dim_ + c]);
    double diag = matrix_[col * dim_ + col];
    log_det += std::log(std::abs(diag));
    for (int r = col + 1; r < dim_; ++r) {
      double factor = matrix_[r * dim_ + col] / diag;
      if (factor == 0.0) continue;
      for (int c = col; c < dim_; ++c)
        matrix_[r * dim_ + c] -= factor * matrix_[col * dim_ + c];
    }
  }
  return log_det + log_product;
}

double psi_eval(const Multigraph& g, const std::map<int, double>& point) {
  PsiEvaluator evaluator(g);
  std::vector<double> alpha;
  alpha.reserve(g.edge_count());
  for (const WeightedEdge& e : g.edges()) {
    auto it = point.find(e.id);
    if (it == point.end())
      throw std::invalid_argument("psi evaluation point misses edge " +
                                  std::to_string(e.id));
    if (!(it->second > 0.0))
      throw std::invalid_argument("psi evaluation point must be positive");
    alpha.push_back(it->second);
  }
  return evaluator.eval(alpha);
}

BigInt spanning_tree_count(const Multigraph& g) {
  if (!g.all_weights_one())
    throw std::invalid_argument("spanning_tree_count requires all edge weights +1");
  if (!g.connected())
    throw std::invalid_argument("spanning_tree_count requires a connected graph");
  int n = g.vertex_count() - 1;
  if (n == 0) return 1;
  std::vector<BigInt> a(static_cast<size_t>(n) * n, 0);
  for (const WeightedEdge& e : g.edges()) {
    int u = g.vertex_index(e.u) - 1, v = g.vertex_index(e.v) - 1;
    if (u >= 0) a[u * n + u] += 1;
    if (v >= 0) a[v * n + v] += 1;
    if (u >= 0 && v >= 0) {
      a[u * n + v] -= 1;
      a[v * n + u] -= 1;
    }
  }
  // Bareiss fraction-free elimination; divisions are exact.
  BigInt denom = 1;
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c)
        a[r * n + c] =
            (a[r * n + c] * a[col * n + col] - a[r * n + col] * a[col * n + c]) / denom;
      a[r * n + col] = 0;
    }
    denom = a[col * n + col];
  }
  BigInt det = a[(n - 1) * n + (n - 1)];
  return sign > 0 ? det : -det;
}

}  // namespace pforge
