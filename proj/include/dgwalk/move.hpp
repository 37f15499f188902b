#pragma once

#include "dgwalk/group.hpp"
#include "dgwalk/rng.hpp"
#include "dgwalk/table.hpp"

namespace dgw {

// One walk step: add sign * A(i,j,k,l), the n x n matrix with +1 at
// (i,k),(j,l) and -1 at (i,l),(j,k). Indices are 1-based with i<j, k<l.
// For q=2 the sign is canonicalized to +1 (A and -A coincide mod 2).
struct Move {
  int i = 1, j = 2;
  int k = 1, l = 2;
  int sign = 1;
};

uint64_t quadruple_count(int n);    // C(n,2)^2
uint64_t move_count(int n, int q);  // 2*C(n,2)^2 for q >= 3, C(n,2)^2 for q = 2

// Enumeration order: idx = sign_block * C(n,2)^2 + row_pair * C(n,2) + col_pair
// with pairs in lexicographic order (1,2),(1,3),...,(n-1,n); sign block 0 is +1.
Move move_from_index(uint64_t idx, int n, int q);

// Uniform over the move set; consumes exactly one raw draw.
Move sample_move(Rng& rng, int n, int q);

// The integer matrix sign * A(i,j,k,l): four nonzero entries, all row and
// column sums zero over the integers.
Grid move_delta(const Move& m, int n);

// entries += move_delta mod q.
void apply_move(TableState& state, const Move& m);

// coords += sign * (all-ones box over rows i..j-1, cols k..l-1) mod q,
// the coordinates of A(i,j,k,l).
void apply_move(GroupElement& state, const Move& m);

}  // namespace dgw
