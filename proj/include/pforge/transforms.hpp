#pragma once

#include <vector>

#include "pforge/families.hpp"
#include "pforge/multigraph.hpp"

namespace pforge {

// Adds a vertex marked "infinity" joined to every vertex of degree < 4,
// then attaches inverse propagators (single negative edges to "infinity")
// to vertices whose weighted degree still exceeds 4. The result is
// weighted-4-regular. Requires a connected graph with all weights +1 and
// minimum degree 3. Rotation systems are dropped.
Multigraph complete(const Multigraph& g);

// Removes v and its incident edges. Every negative edge must be incident
// to v, so the result is an ordinary (+1-weighted) graph.
Multigraph decomplete(const Multigraph& g, int v);

struct TwistCut {
  int a;
  int b;
  int zero;
  int infinity;
};

// Twist identity at a separating 4-vertex cut of a weighted-4-regular
// graph: reattach every edge from the component of `side` so that a and b
// swap, and zero and infinity swap; then restore 4-regularity by moving
// integer weight between opposite edges of the 4-cycle a-0-b-inf
// ({a,0}<->{b,inf} and {0,b}<->{inf,a}). Cut edges whose weight reaches 0
// disappear; cycle-pair parallels are merged. The diagonals {a,b} and
// {0,inf} are never touched. Rotation systems are dropped.
Multigraph twist(const Multigraph& g, const TwistCut& cut, int side);

// Face-vertex dual of an embedded planar graph. Faces are traced through
// the rotation system (next dart = successor of the reversed dart at its
// head); each primal edge yields one dual edge with the same id. The dual
// carries the induced rotation system. Fails unless V - E + F = 2.
Multigraph planar_dual(const Multigraph& g);

// One twist step of the reduction chain, recorded for reporting.
struct ChainStep {
  FamilyParams from;
  FamilyParams to;
  Multigraph completed;         // complete(family_graph(from))
  Multigraph twisted;           // after the twist at (a, b, zero, infinity)
  bool twisted_matches_next;    // twisted ~ complete(family_graph(to))
  bool decompleted_matches_next;// decomplete(twisted) ~ family_graph(to)
};

struct ChainReport {
  FamilyParams params;
  std::vector<ChainStep> steps;
  Multigraph terminal;          // family_graph(k+m-1, l, 1)
  Multigraph target;            // zigzag(n)
  bool terminal_matches_zigzag;
  bool verdict;                 // all isomorphism checks passed
};

// Executes the proof chain: repeatedly complete, twist at the marked cut on
// the component of the left triangle ladder, compare against the next
// family member, and decomplete, until m = 1; then compares the terminal
// graph with the zig-zag of the same loop order.
ChainReport reduce_to_zigzag(const FamilyParams& p);

}  // namespace pforge
