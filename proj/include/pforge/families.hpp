#pragma once

#include <vector>

#include "pforge/multigraph.hpp"

namespace pforge {

// Parameters (k, l, m) of the triangle/box ladder family; all >= 1.
// The loop order of the family member is n = 2(k+l+m).
struct FamilyParams {
  int k;
  int l;
  int m;

  FamilyParams(int k_, int l_, int m_) : k(k_), l(l_), m(m_) {
    if (k < 1 || l < 1 || m < 1)
      throw std::invalid_argument("family parameters must satisfy k,l,m >= 1");
  }
  int n() const { return 2 * (k + l + m); }
};

// Completed zig-zag graph: the (1,2)-circulant on n+2 vertices. 4-regular,
// 2(n+2) edges, all weights +1.
Multigraph zigzag_completed(int n);

// Zig-zag graph with n loops: zigzag_completed(n) with vertex n+1 removed
// and edge ids reassigned densely. n+1 vertices, 2n edges.
Multigraph zigzag(int n);

// Vertex ids assigned by family_graph, used by the reduction chain and by
// tests that need to address individual vertices of the construction.
struct FamilyLabels {
  int apex;
  std::vector<int> top;          // T_0..T_m (left to right on the upper rail)
  std::vector<int> bottom;       // U_0..U_m
  std::vector<int> left_inner;   // r_0..r_k with r_0 = T_0, r_k = U_0
  std::vector<int> left_outer;   // s_1..s_k (top to bottom)
  std::vector<int> right_inner;  // r'_0..r'_l with r'_0 = T_m, r'_l = U_m
  std::vector<int> right_outer;  // s'_1..s'_l
};

FamilyLabels family_labels(const FamilyParams& p);

// The n-loop graph made of two triangle ladders (2k-1 and 2l-1 triangles)
// joined by a ladder of m boxes, with an apex vertex over the upper rail.
// Markers: "a" = apex, "b" = T_1, "zero" = U_1. Carries a planar rotation
// system matching the drawn embedding. V = n+1, E = 2n, all weights +1.
Multigraph family_graph(const FamilyParams& p);

// Planar dual of family_graph(p).
Multigraph family_dual(const FamilyParams& p);

}  // namespace pforge
