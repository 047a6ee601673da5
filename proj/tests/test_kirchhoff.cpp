#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "pforge/families.hpp"
#include "pforge/kirchhoff.hpp"
#include "test_util.hpp"

using namespace pforge;
using test_util::complete_graph;
using test_util::cycle_graph;
using test_util::make_graph;

namespace {

// Independent oracle: enumerate all (V-1)-subsets of edges and keep the
// acyclic spanning ones. Only depends on Multigraph accessors.
std::vector<std::uint64_t> brute_force_cotrees(const Multigraph& g) {
  int n = g.vertex_count(), e = g.edge_count();
  std::uint64_t full = (std::uint64_t{1} << e) - 1;
  std::vector<std::uint64_t> cotrees;
  for (std::uint64_t subset = 0; subset <= full; ++subset) {
    if (std::popcount(subset) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int k = 0; k < e && acyclic; ++k) {
      if (!(subset & (std::uint64_t{1} << k))) continue;
      int ru = find(g.vertex_index(g.edges()[k].u));
      int rv = find(g.vertex_index(g.edges()[k].v));
      if (ru == rv)
        acyclic = false;
      else
        parent[ru] = rv;
    }
    if (acyclic) cotrees.push_back(full & ~subset);
  }
  std::sort(cotrees.begin(), cotrees.end());
  return cotrees;
}

void check_against_oracle(const Multigraph& g) {
  GraphPolynomial p = psi_enumerate(g);
  std::vector<std::uint64_t> expected = brute_force_cotrees(g);
  REQUIRE(p.monomials.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(p.monomials[i].first == expected[i]);
    CHECK(p.monomials[i].second == 1);
  }
}

// Direct evaluation of the symbolic polynomial, an independent route from
// the Laplacian determinant.
double evaluate_symbolic(const GraphPolynomial& p, const std::map<int, double>& point) {
  double total = 0.0;
  for (const auto& [mask, coeff] : p.monomials) {
    double term = static_cast<double>(coeff);
    for (size_t i = 0; i < p.variables.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) term *= point.at(p.variables[i]);
    total += term;
  }
  return total;
}

std::map<int, double> random_point(const Multigraph& g, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(0.1, 3.0);
  std::map<int, double> point;
  for (const WeightedEdge& e : g.edges()) point[e.id] = dist(rng);
  return point;
}

}  // namespace

TEST_CASE("triangle polynomial") {
  GraphPolynomial p = psi_enumerate(cycle_graph(3));
  CHECK(p.to_string() == "a0 + a1 + a2");
  CHECK(p.degree() == 1);
  check_against_oracle(cycle_graph(3));
}

TEST_CASE("K4 has 16 spanning trees of degree 3") {
  GraphPolynomial p = psi_enumerate(complete_graph(4));
  CHECK(p.monomials.size() == 16);
  CHECK(p.degree() == 3);
  for (const auto& [mask, coeff] : p.monomials) {
    CHECK(std::popcount(mask) == 3);
    CHECK(coeff == 1);
  }
  check_against_oracle(complete_graph(4));
}

TEST_CASE("parallel edges") {
  Multigraph doubled({0, 1}, {{0, 0, 1, 1}, {1, 0, 1, 1}});
  CHECK(psi_enumerate(doubled).to_string() == "a0 + a1");
  Multigraph single({0, 1}, {{0, 0, 1, 1}});
  CHECK(psi_enumerate(single).to_string() == "1");
}

TEST_CASE("enumeration matches the subset oracle on assorted graphs") {
  check_against_oracle(complete_graph(5));
  check_against_oracle(zigzag(4));
  check_against_oracle(cycle_graph(6));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial)
    check_against_oracle(test_util::random_connected_multigraph(rng, 6, 9));
}

TEST_CASE("del-contract agrees with enumeration") {
  CHECK(psi_del_contract(cycle_graph(3)) == psi_enumerate(cycle_graph(3)));
  CHECK(psi_del_contract(complete_graph(4)) == psi_enumerate(complete_graph(4)));
  CHECK(psi_del_contract(zigzag(4)) == psi_enumerate(zigzag(4)));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph g = test_util::random_connected_multigraph(rng, 6, 8);
    CHECK(psi_del_contract(g) == psi_enumerate(g));
  }
}

TEST_CASE("polynomial preconditions") {
  Multigraph disconnected({0, 1, 2, 3}, {{0, 0, 1, 1}, {1, 2, 3, 1}});
  CHECK_THROWS_AS(psi_enumerate(disconnected), std::invalid_argument);
  Multigraph weighted({0, 1, 2}, {{0, 0, 1, 2}, {1, 1, 2, 1}, {2, 2, 0, 1}});
  CHECK_THROWS_AS(psi_enumerate(weighted), std::invalid_argument);
  CHECK_THROWS_AS(psi_enumerate(zigzag(13)), std::invalid_argument);  // 26 edges
  CHECK_NOTHROW(psi_enumerate(zigzag(5), 64));
}

TEST_CASE("numeric evaluation") {
  std::map<int, double> ones;
  for (int i = 0; i < 3; ++i) ones[i] = 1.0;
  CHECK(psi_eval(cycle_graph(3), ones) == doctest::Approx(3.0).epsilon(1e-12));

  std::map<int, double> k4_ones;
  for (int i = 0; i < 6; ++i) k4_ones[i] = 1.0;
  CHECK(psi_eval(complete_graph(4), k4_ones) == doctest::Approx(16.0).epsilon(1e-12));

  std::mt19937 rng(11);
  Multigraph k4 = complete_graph(4);
  GraphPolynomial p = psi_enumerate(k4);
  for (int trial = 0; trial < 25; ++trial) {
    std::map<int, double> point = random_point(k4, rng);
    double numeric = psi_eval(k4, point);
    double symbolic = evaluate_symbolic(p, point);
    CHECK(numeric == doctest::Approx(symbolic).epsilon(1e-12));
  }

  std::map<int, double> bad = k4_ones;
  bad[3] = -1.0;
  CHECK_THROWS_AS(psi_eval(k4, bad), std::invalid_argument);
  bad.erase(3);
  CHECK_THROWS_AS(psi_eval(k4, bad), std::invalid_argument);
}

TEST_CASE("scaling all coordinates is homogeneous of degree h") {
  std::mt19937 rng(31);
  for (const Multigraph& g :
       {complete_graph(4), family_graph(FamilyParams(1, 1, 1))}) {
    int h = g.loop_number();
    std::map<int, double> point = random_point(g, rng);
    double base = psi_eval(g, point);
    for (double lambda : {0.37, 2.0, 11.5}) {
      std::map<int, double> scaled = point;
      for (auto& [id, x] : scaled) x *= lambda;
      double value = psi_eval(g, scaled);
      CHECK(value == doctest::Approx(std::pow(lambda, h) * base).epsilon(1e-10));
    }
  }
}

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(cycle_graph(3)) == 3);
  CHECK(spanning_tree_count(complete_graph(4)) == 16);   // Cayley 4^2
  CHECK(spanning_tree_count(complete_graph(5)) == 125);  // Cayley 5^3
  CHECK(spanning_tree_count(zigzag_completed(4)) == 384);  // octahedron
  Multigraph doubled({0, 1}, {{0, 0, 1, 1}, {1, 0, 1, 1}});
  CHECK(spanning_tree_count(doubled) == 2);

  Multigraph disconnected({0, 1, 2, 3}, {{0, 0, 1, 1}, {1, 2, 3, 1}});
  CHECK_THROWS_AS(spanning_tree_count(disconnected), std::invalid_argument);
}

TEST_CASE("monomial count equals the matrix-tree count on family graphs") {
  for (auto [k, l, m] : {std::array<int, 3>{1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {1, 2, 1}}) {
    Multigraph g = family_graph(FamilyParams(k, l, m));
    GraphPolynomial p = psi_enumerate(g);
    CHECK(BigInt(p.monomials.size()) == spanning_tree_count(g));
  }
}

TEST_CASE("complement flips every monomial inside the full support") {
  GraphPolynomial p = psi_enumerate(complete_graph(4));
  GraphPolynomial q = complement(complement(p));
  CHECK(p == q);
  for (const auto& [mask, coeff] : complement(p).monomials) {
    (void)coeff;
    CHECK(std::popcount(mask) == 3);  // 6 edges, degree-3 trees
  }
}
