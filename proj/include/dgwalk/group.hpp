#pragma once

#include "dgwalk/common.hpp"

namespace dgw {

// Element of the group G of zero-sum tables, held as its (n-1) x (n-1)
// coordinate matrix with respect to the rectangle basis, so
// G ~ (Z/qZ)^((n-1)^2).
struct GroupElement {
  int n = 0;
  int q = 2;
  Grid coords;  // (n-1) x (n-1), residues in [0, q)

  bool operator==(const GroupElement&) const = default;
};

GroupElement zero_group_element(int n, int q);

// Coordinates of an n x n matrix g with zero row and column sums mod q:
// coords[a][b] is the sum of g over the leading (a+1) x (b+1) corner
// (a 2D prefix sum). Throws std::invalid_argument when g is not square or
// has a nonzero row/column sum.
GroupElement to_coordinates(const Grid& g, int q);

// Inverse of to_coordinates: expands coordinates back into the n x n
// zero-sum matrix (sum of basis rectangles weighted by the coordinates).
Grid from_coordinates(const GroupElement& c);

// dst += src coordinatewise mod q.
void add_into(GroupElement& dst, const GroupElement& src);

// Mixed-radix index of y: digit a*(n-1)+b (row-major) holds coords[a][b],
// digit 0 least significant. Every exact kernel enumerates G in this order.
uint64_t group_index(const GroupElement& y);
GroupElement group_element_from_index(uint64_t idx, int n, int q);

}  // namespace dgw
