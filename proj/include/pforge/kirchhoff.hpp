#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pforge/multigraph.hpp"

namespace pforge {

using BigInt = boost::multiprecision::cpp_int;

// Multilinear homogeneous polynomial in edge variables. Monomials are
// bitmasks over `variables` (bit i corresponds to variables[i]); for
// ordinary graphs each monomial is the cotree of one spanning tree with
// coefficient +1.
struct GraphPolynomial {
  std::vector<int> variables;  // sorted edge ids
  std::vector<std::pair<std::uint64_t, long long>> monomials;  // sorted by mask

  bool operator==(const GraphPolynomial&) const = default;
  int degree() const;
  // Canonical text form: monomials sorted by bitmask, "a<id>" per variable.
  std::string to_string() const;
};

// Complement every monomial within the full variable mask; this is the
// polynomial (prod_e a_e) * P(1/a), the dual-side of the Kirchhoff pairing.
GraphPolynomial complement(const GraphPolynomial& p);

// Graph polynomial by backtracking spanning-tree enumeration.
// Requires a connected graph, all weights +1, and at most max_edges edges.
GraphPolynomial psi_enumerate(const Multigraph& g, int max_edges = 24);

// Same polynomial through the deletion/contraction recursion
// psi(G) = a_e psi(G\e) + psi(G/e), memoized on canonical forms of minors.
GraphPolynomial psi_del_contract(const Multigraph& g, int max_edges = 24);

// Numeric psi via the matrix-tree theorem: (prod_e a_e) * det of the
// reduced weighted Laplacian with conductances 1/a_e.
double psi_eval(const Multigraph& g, const std::map<int, double>& point);

// Reusable evaluator for hot loops. Not thread safe: every worker owns one
// (eval reuses internal scratch).
class PsiEvaluator {
 public:
  explicit PsiEvaluator(const Multigraph& g);
  // alpha ordered like Multigraph::edges(); all entries > 0.
  double eval(const std::vector<double>& alpha);
  // log(psi); psi itself can overflow a double far from the simplex center.
  double eval_log(const std::vector<double>& alpha);
  int edge_count() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;                                  // V - 1
  std::vector<std::pair<int, int>> rows_;    // reduced indices per edge, -1 = deleted row
  std::vector<double> matrix_;               // scratch, dim_ x dim_
};

// Exact spanning tree count by fraction-free elimination of the integer
// Laplacian. Requires a connected graph with all weights +1.
BigInt spanning_tree_count(const Multigraph& g);

}  // namespace pforge
